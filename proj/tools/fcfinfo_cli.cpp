/*
 * Copyright 2026 The fcfinfo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// fcfinfo: Franck-Condon factors, their entropies under index reshaping, and
// mutual-information surfaces over (a, l).
//
//   fcfinfo fcf --a 1 --l 2
//   fcfinfo entropy --a 2 --l 2 --split 2,inf --log-base 2
//   fcfinfo entropy --probs 0.1,0.2,0.3,0.4 --split 2,2
//   fcfinfo surface --a-steps 100 --l-steps 100 --out mi.csv

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fcfinfo/fcf.hpp"
#include "fcfinfo/info_theory.hpp"
#include "fcfinfo/surface.hpp"

namespace {

using namespace fcfinfo;

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::vector<double> parse_probs(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument("cannot parse probability '" + token + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty probability list");
  return out;
}

struct FcfArgs {
  double a = 0.0;
  double l = 1.0;
  double tail_tol = 1e-12;
  std::size_t n_cap = 100000;
  std::optional<std::size_t> n_max;
};

int run_fcf(const FcfArgs& args) {
  const OscillatorPair pair{args.a, args.l};
  pair.validate();

  std::vector<double> probs;
  double tail = 0.0;
  if (args.n_max) {
    double sum = 0.0;
    for (std::size_t n = 0; n <= *args.n_max; ++n) {
      probs.push_back(fcf_0n(pair, static_cast<long long>(n)));
      sum += probs.back();
    }
    tail = std::max(0.0, 1.0 - sum);
  } else {
    TruncationOptions options;
    options.tail_tolerance = args.tail_tol;
    options.n_cap = args.n_cap;
    const auto dist = fcf_distribution(pair, options);
    probs = dist.probs;
    tail = dist.tail_mass;
  }

  std::cout << "# a=" << fmt12(pair.a) << " l=" << fmt12(pair.l)
            << (uses_equal_freq_branch(pair) ? " branch=poisson" : " branch=closed-form") << '\n';
  std::cout << "n,P,cumulative\n";
  double cumulative = 0.0;
  for (std::size_t n = 0; n < probs.size(); ++n) {
    cumulative += probs[n];
    std::cout << n << ',' << fmt12(probs[n]) << ',' << fmt12(cumulative) << '\n';
  }
  std::cout << "tail_mass," << fmt12(tail) << '\n';
  return 0;
}

struct EntropyArgs {
  std::optional<double> a;
  std::optional<double> l;
  std::string probs;
  std::string split = "2,inf";
  std::string log_base = "e";
  double tail_tol = 1e-12;
  std::size_t n_cap = 100000;
};

int run_entropy(const EntropyArgs& args) {
  const auto split = Factorization::parse(args.split);
  const auto base = parse_log_base(args.log_base);

  std::optional<JointDistribution> joint;
  if (!args.probs.empty()) {
    joint.emplace(parse_probs(args.probs), split);
  } else {
    if (!args.a || !args.l) throw std::invalid_argument("entropy needs --a and --l, or --probs");
    TruncationOptions options;
    options.tail_tolerance = args.tail_tol;
    options.n_cap = args.n_cap;
    options.renormalize = true;
    const auto dist = fcf_distribution({*args.a, *args.l}, options);
    joint.emplace(JointDistribution::from_fcf(dist, split));
    std::cout << "a: " << fmt12(*args.a) << "\nl: " << fmt12(*args.l) << "\nn_used: " << dist.n_used()
              << "\ntail_mass: " << fmt12(dist.tail_mass) << '\n';
  }

  const auto report = entropy_report(*joint, base);
  static constexpr const char* kNames[] = {"H_A", "H_B", "H_C"};
  std::cout << "split: " << split.to_string() << " (resolved " << joint->factorization().to_string()
            << ")\nlog_base: " << to_string(base) << '\n';
  for (std::size_t i = 0; i < report.h_parts.size(); ++i) {
    std::cout << kNames[i] << ": " << fmt12(report.h_parts[i]) << '\n';
  }
  if (report.h_ab) {
    std::cout << "H_AB: " << fmt12(*report.h_ab) << "\nH_BC: " << fmt12(*report.h_bc) << '\n';
  }
  std::cout << "H_joint: " << fmt12(report.h_joint) << '\n';
  std::cout << "MI: " << fmt12(std::max(0.0, report.mutual_information)) << '\n';
  if (report.h_ab) std::cout << "SSA_slack: " << fmt12(std::max(0.0, report.inequality_slack)) << '\n';

  const char* label = report.h_ab ? "strong_subadditivity" : "subadditivity";
  std::cout << label << ": " << (report.inequality_holds() ? "satisfied" : "VIOLATED") << '\n';
  return report.inequality_holds() ? 0 : 1;
}

int run_surface(const SweepConfig& config, const std::string& out_path) {
  const auto rows = compute_surface(config);
  if (out_path == "-") {
    write_surface_csv(std::cout, rows);
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + out_path + "'");
  write_surface_csv(file, rows);
  file.close();
  if (!file) throw std::runtime_error("failed writing output file '" + out_path + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Franck-Condon factors and entropic inequalities for diatomic molecules"};
  app.require_subcommand(1);

  FcfArgs fcf_args;
  auto* fcf = app.add_subcommand("fcf", "Print the truncated FCF distribution P_0n(a, l)");
  fcf->add_option("--a", fcf_args.a, "Shift between the potential minima")->required();
  fcf->add_option("--l", fcf_args.l, "Final-state harmonic parameter (> 0)")->required();
  fcf->add_option("--tail-tol", fcf_args.tail_tol, "Tail mass tolerance")->capture_default_str();
  fcf->add_option("--n-cap", fcf_args.n_cap, "Maximum number of terms")->capture_default_str();
  fcf->add_option("--n-max", fcf_args.n_max, "Print exactly n = 0..N instead of truncating by tolerance");

  EntropyArgs ent_args;
  auto* entropy = app.add_subcommand("entropy", "Entropies and mutual information of a reshaped distribution");
  auto* opt_a = entropy->add_option("--a", ent_args.a, "Shift between the potential minima");
  auto* opt_l = entropy->add_option("--l", ent_args.l, "Final-state harmonic parameter (> 0)");
  entropy->add_option("--probs", ent_args.probs, "Comma-separated distribution to use instead of FCFs")
      ->excludes(opt_a)
      ->excludes(opt_l);
  entropy->add_option("--split", ent_args.split, "Subsystem sizes, e.g. 2,inf or 2,2,inf or 3,4")
      ->capture_default_str();
  entropy->add_option("--log-base", ent_args.log_base, "2, e or 10")->capture_default_str();
  entropy->add_option("--tail-tol", ent_args.tail_tol, "Tail mass tolerance")->capture_default_str();
  entropy->add_option("--n-cap", ent_args.n_cap, "Maximum number of terms")->capture_default_str();

  SweepConfig sweep;
  std::string split_text = "2";
  std::string base_text = "e";
  std::string out_path = "-";
  auto* surface = app.add_subcommand("surface", "Mutual-information surface over (a, l) as CSV");
  surface->add_option("--a-min", sweep.a.min)->capture_default_str();
  surface->add_option("--a-max", sweep.a.max)->capture_default_str();
  surface->add_option("--a-steps", sweep.a.steps)->capture_default_str();
  surface->add_option("--l-min", sweep.l.min)->capture_default_str();
  surface->add_option("--l-max", sweep.l.max)->capture_default_str();
  surface->add_option("--l-steps", sweep.l.steps)->capture_default_str();
  surface->add_option("--split", split_text, "Q1[,Q2]; Q1 alone means Q1,inf")->capture_default_str();
  surface->add_option("--tail-tol", sweep.tail_tolerance)->capture_default_str();
  surface->add_option("--n-cap", sweep.n_cap)->capture_default_str();
  surface->add_option("--log-base", base_text, "2, e or 10")->capture_default_str();
  surface->add_option("--out", out_path, "Output CSV path, '-' for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*fcf) return run_fcf(fcf_args);
    if (*entropy) return run_entropy(ent_args);
    if (*surface) {
      sweep.split = Factorization::parse(split_text);
      sweep.log_base = parse_log_base(base_text);
      return run_surface(sweep, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
