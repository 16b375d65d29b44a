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

#include "fcfinfo/surface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace fcfinfo {
namespace {

void validate_axis(const AxisRange& axis, const char* name) {
  if (axis.steps < 2) throw std::invalid_argument(std::string(name) + " axis needs at least 2 steps");
  if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || !(axis.min < axis.max)) {
    throw std::invalid_argument(std::string(name) + " axis needs finite bounds with min < max");
  }
}

TruncationOptions truncation_for(const SweepConfig& config) {
  TruncationOptions options;
  options.tail_tolerance = config.tail_tolerance;
  options.n_cap = config.n_cap;
  options.renormalize = true;
  return options;
}

MiRow to_row(const FcfDistribution& dist, const SweepConfig& config) {
  const auto joint = JointDistribution::from_fcf(dist, config.split);
  const auto report = entropy_report(joint, config.log_base);
  MiRow row;
  row.a = dist.params.a;
  row.l = dist.params.l;
  row.h_a = report.h_parts[0];
  row.h_b = report.h_parts[1];
  row.h_ab = report.h_joint;
  row.mi = report.mutual_information;
  row.tail_mass = dist.tail_mass;
  row.n_used = dist.n_used();
  return row;
}

void append_number(std::string& line, double v) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  line.append(buf, static_cast<std::size_t>(len));
}

}  // namespace

double AxisRange::at(std::size_t i) const noexcept {
  if (i + 1 >= steps) return max;
  return min + static_cast<double>(i) * (max - min) / static_cast<double>(steps - 1);
}

void SweepConfig::validate() const {
  validate_axis(a, "a");
  validate_axis(l, "l");
  if (!(l.min > 0.0)) throw std::invalid_argument("l axis must stay above 0");
  if (split.arity() != 2) throw std::invalid_argument("surface sweeps need a two-way split");
  if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0)) {
    throw std::invalid_argument("tail tolerance must lie in (0, 1)");
  }
}

MiRow evaluate_point(const OscillatorPair& pair, const SweepConfig& config) {
  return to_row(fcf_distribution(pair, truncation_for(config)), config);
}

std::vector<MiRow> compute_surface(const SweepConfig& config) {
  config.validate();
  const auto options = truncation_for(config);

  std::vector<MiRow> rows;
  rows.reserve(config.a.steps * config.l.steps);
  std::vector<OscillatorPair> batch(config.l.steps);
  for (std::size_t i = 0; i < config.a.steps; ++i) {
    for (std::size_t k = 0; k < config.l.steps; ++k) batch[k] = {config.a.at(i), config.l.at(k)};
    for (const auto& dist : fcf_distribution_batch(batch, options)) rows.push_back(to_row(dist, config));
  }
  return rows;
}

void write_surface_csv(std::ostream& os, const std::vector<MiRow>& rows) {
  os << "a,l,H_A,H_B,H_AB,MI,tail_mass,n_used\n";
  std::string line;
  for (const auto& row : rows) {
    line.clear();
    for (double v : {row.a, row.l, row.h_a, row.h_b, row.h_ab, std::max(0.0, row.mi), row.tail_mass}) {
      append_number(line, v);
      line += ',';
    }
    line += std::to_string(row.n_used);
    line += '\n';
    os << line;
  }
}

}  // namespace fcfinfo
