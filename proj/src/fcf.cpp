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

#include "fcfinfo/fcf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fcfinfo/simd/kernels.hpp"

namespace fcfinfo {
namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr std::size_t kSmallRun = 8;
constexpr std::size_t kChunk = 64;

std::string describe_failure(const OscillatorPair& pair, std::size_t n_cap) {
  std::ostringstream os;
  os.precision(17);
  os << "FCF distribution for a=" << pair.a << ", l=" << pair.l
     << " did not converge within n_cap=" << n_cap << " terms";
  return os.str();
}

double clamp_probability(double p) { return std::min(p, 1.0); }

double log_poisson(double a, long long n) {
  const double mean = 0.5 * a * a;
  return -mean + static_cast<double>(n) * std::log(mean) - std::lgamma(static_cast<double>(n) + 1.0);
}

// Incremental form of the stopping rule.
class StopRule {
 public:
  explicit StopRule(double tol) : tol_(tol), small_(tol / 100.0) {}

  // Returns true once the term just pushed completes the rule.
  bool push(double p) {
    cumulative_ += p;
    run_ = p < small_ ? run_ + 1 : 0;
    return cumulative_ >= 1.0 - tol_ && run_ >= kSmallRun;
  }

 private:
  double tol_;
  double small_;
  double cumulative_ = 0.0;
  std::size_t run_ = 0;
};

FcfDistribution finish(const OscillatorPair& pair, std::vector<double> probs,
                       const TruncationOptions& options) {
  while (probs.size() > 1 && probs.back() == 0.0) probs.pop_back();

  double sum = 0.0;
  for (double p : probs) sum += p;

  FcfDistribution dist;
  dist.params = pair;
  dist.tail_mass = std::clamp(1.0 - sum, 0.0, options.tail_tolerance);
  if (options.renormalize) {
    for (double& p : probs) p /= sum;
    dist.renormalized = true;
  }
  dist.probs = std::move(probs);
  return dist;
}

void validate_options(const TruncationOptions& options) {
  if (!(options.tail_tolerance > 0.0 && options.tail_tolerance < 1.0)) {
    throw std::invalid_argument("tail tolerance must lie in (0, 1)");
  }
  if (options.n_cap < 1) throw std::invalid_argument("n_cap must be at least 1");
}

FcfDistribution equal_freq_distribution(const OscillatorPair& pair, const TruncationOptions& options) {
  StopRule rule(options.tail_tolerance);
  std::vector<double> probs;
  for (std::size_t n = 0; n < options.n_cap; ++n) {
    probs.push_back(fcf_0n_equal_freq(pair.a, static_cast<long long>(n)));
    if (rule.push(probs.back())) return finish(pair, std::move(probs), options);
  }
  throw TruncationFailure(pair, options.n_cap);
}

}  // namespace

void OscillatorPair::validate() const {
  if (!std::isfinite(a)) throw std::invalid_argument("shift a must be finite");
  if (!std::isfinite(l) || !(l > 0.0)) {
    throw std::invalid_argument("harmonic parameter l must be finite and > 0");
  }
}

TruncationFailure::TruncationFailure(OscillatorPair pair, std::size_t n_cap)
    : std::runtime_error(describe_failure(pair, n_cap)), pair_(pair), n_cap_(n_cap) {}

ClosedFormArgs closed_form_args(const OscillatorPair& pair) {
  pair.validate();
  const double l2 = pair.l * pair.l;
  const double gap = std::fabs(l2 - 1.0);
  ClosedFormArgs out;
  out.arg.w = std::fabs(pair.a) * pair.l / std::sqrt((l2 + 1.0) * gap);
  out.arg.regime = l2 > 1.0 ? HermiteRegime::standard : HermiteRegime::modified;
  out.ratio = gap / (l2 + 1.0);
  return out;
}

HermiteCoefficients hermite_coefficients_for(const OscillatorPair& pair) {
  pair.validate();
  const double l2 = pair.l * pair.l;
  return {kSqrt2 * std::fabs(pair.a) * pair.l / (l2 + 1.0), (l2 - 1.0) / (l2 + 1.0)};
}

double log_fcf_prefactor(const OscillatorPair& pair) {
  const double l2p1 = pair.l * pair.l + 1.0;
  return std::log(2.0 * pair.l / l2p1) - pair.a * pair.a / l2p1;
}

double fcf_0n_equal_freq(double a, long long n) {
  if (!std::isfinite(a)) throw std::invalid_argument("shift a must be finite");
  if (n < 0) throw std::invalid_argument("quantum number n must be non-negative");
  if (a == 0.0) return n == 0 ? 1.0 : 0.0;
  return clamp_probability(std::exp(log_poisson(a, n)));
}

double fcf_0n(const OscillatorPair& pair, long long n) {
  pair.validate();
  if (n < 0) throw std::invalid_argument("quantum number n must be non-negative");
  if (uses_equal_freq_branch(pair)) return fcf_0n_equal_freq(pair.a, n);

  const auto log_g = log_normalized_hermite_sequence(hermite_coefficients_for(pair),
                                                     static_cast<std::size_t>(n));
  return clamp_probability(std::exp(log_fcf_prefactor(pair) + 2.0 * log_g.back()));
}

FcfDistribution fcf_distribution(const OscillatorPair& pair, const TruncationOptions& options) {
  return std::move(fcf_distribution_batch(std::span(&pair, 1), options).front());
}

std::vector<FcfDistribution> fcf_distribution_batch(std::span<const OscillatorPair> pairs,
                                                    const TruncationOptions& options) {
  validate_options(options);
  for (const auto& pair : pairs) pair.validate();

  std::vector<FcfDistribution> results(pairs.size());

  std::vector<std::size_t> closed;  // indices routed through the recurrence
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (uses_equal_freq_branch(pairs[i])) {
      results[i] = equal_freq_distribution(pairs[i], options);
    } else {
      closed.push_back(i);
    }
  }
  if (closed.empty()) return results;

  const std::size_t lanes = closed.size();
  std::vector<double> drive(lanes), coupling(lanes), prefactor(lanes);
  std::vector<double> u_prev(lanes, 0.0), u_cur(lanes, 1.0), blocks(lanes, 0.0);
  for (std::size_t k = 0; k < lanes; ++k) {
    const auto coeffs = hermite_coefficients_for(pairs[closed[k]]);
    drive[k] = coeffs.drive;
    coupling[k] = coeffs.coupling;
    prefactor[k] = log_fcf_prefactor(pairs[closed[k]]);
  }
  simd::HermiteLanes state{drive, coupling, u_prev, u_cur, blocks, 0};

  std::vector<StopRule> rules(lanes, StopRule(options.tail_tolerance));
  std::vector<std::vector<double>> probs(lanes);
  std::vector<bool> done(lanes, false);
  std::size_t remaining = lanes;

  std::vector<double> log_g;
  const auto& kernels = simd::active_kernels();
  while (remaining > 0) {
    if (state.step >= options.n_cap) {
      for (std::size_t k = 0; k < lanes; ++k) {
        if (!done[k]) throw TruncationFailure(pairs[closed[k]], options.n_cap);
      }
    }
    const std::size_t steps = std::min(kChunk, options.n_cap - state.step);
    log_g.resize(steps * lanes);
    kernels.hermite_advance(state, steps, log_g);

    for (std::size_t k = 0; k < lanes; ++k) {
      if (done[k]) continue;
      for (std::size_t s = 0; s < steps; ++s) {
        const double p = clamp_probability(std::exp(prefactor[k] + 2.0 * log_g[s * lanes + k]));
        probs[k].push_back(p);
        if (rules[k].push(p)) {
          done[k] = true;
          --remaining;
          break;
        }
      }
    }
  }

  for (std::size_t k = 0; k < lanes; ++k) {
    results[closed[k]] = finish(pairs[closed[k]], std::move(probs[k]), options);
  }
  return results;
}

}  // namespace fcfinfo
