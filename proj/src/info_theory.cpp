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

#include "fcfinfo/info_theory.hpp"

#include <cmath>
#include <numbers>

#include "fcfinfo/simd/kernels.hpp"

namespace fcfinfo {
namespace {

double checked_sum(std::span<const double> p, const char* what) {
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument(std::string(what) + " has a negative or non-finite entry");
    }
    sum += v;
  }
  return sum;
}

double entropy_unchecked(std::span<const double> p, LogBase base) {
  const double nats = -simd::active_kernels().sum_xlogx(p);
  // -0.0 for a deterministic distribution
  return nats == 0.0 ? 0.0 : nats / log_base_scale(base);
}

}  // namespace

double log_base_scale(LogBase base) noexcept {
  switch (base) {
    case LogBase::two:
      return std::numbers::ln2;
    case LogBase::ten:
      return std::numbers::ln10;
    case LogBase::e:
      break;
  }
  return 1.0;
}

LogBase parse_log_base(const std::string& text) {
  if (text == "2") return LogBase::two;
  if (text == "e") return LogBase::e;
  if (text == "10") return LogBase::ten;
  throw std::invalid_argument("log base must be one of 2, e, 10; got '" + text + "'");
}

std::string to_string(LogBase base) {
  switch (base) {
    case LogBase::two:
      return "2";
    case LogBase::ten:
      return "10";
    case LogBase::e:
      break;
  }
  return "e";
}

double shannon_entropy(std::span<const double> p, LogBase base) {
  const double sum = checked_sum(p, "probability vector");
  if (std::fabs(sum - 1.0) > kEntropyNormTolerance) {
    throw std::invalid_argument("probability vector sums to " + std::to_string(sum) + ", not 1");
  }
  return entropy_unchecked(p, base);
}

UnsupportedArity::UnsupportedArity(std::size_t arity)
    : std::invalid_argument("entropy reports need 2 or 3 subsystems, got " + std::to_string(arity)) {}

JointDistribution::JointDistribution(std::vector<double> probs, const Factorization& factorization)
    : factorization_(factorization.resolved(probs.size())), probs_(std::move(probs)) {
  const double sum = checked_sum(probs_, "joint distribution");
  if (std::fabs(sum - 1.0) > kJointNormTolerance) {
    throw std::invalid_argument("joint distribution sums to " + std::to_string(sum) +
                                "; renormalize before reshaping");
  }
  probs_.resize(*factorization_.capacity(), 0.0);
}

JointDistribution JointDistribution::from_fcf(const FcfDistribution& dist,
                                              const Factorization& factorization) {
  std::vector<double> probs = dist.probs;
  if (!dist.renormalized) {
    double sum = 0.0;
    for (double p : probs) sum += p;
    for (double& p : probs) p /= sum;
  }
  return JointDistribution(std::move(probs), factorization);
}

std::vector<double> marginal(const JointDistribution& j, std::span<const std::size_t> keep) {
  const Factorization& f = j.factorization();
  const std::size_t k = f.arity();
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= k || (i > 0 && keep[i] <= keep[i - 1])) {
      throw std::invalid_argument("marginal subsystems must be increasing and within the arity");
    }
  }

  std::vector<std::uint64_t> radix(k);
  for (std::size_t i = 0; i < k; ++i) radix[i] = *f.size(i);

  std::vector<std::uint64_t> out_stride(keep.size(), 1);
  std::uint64_t out_size = 1;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out_stride[i] = out_size;
    out_size *= radix[keep[i]];
  }

  // Walk the flat table with an odometer over the coordinates.
  std::vector<double> out(out_size, 0.0);
  std::vector<std::uint64_t> digit(k, 0);
  for (double p : j.probs()) {
    std::uint64_t target = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) target += digit[keep[i]] * out_stride[i];
    out[target] += p;
    for (std::size_t i = 0; i < k; ++i) {
      if (++digit[i] < radix[i]) break;
      digit[i] = 0;
    }
  }
  return out;
}

std::vector<std::vector<double>> marginals(const JointDistribution& j) {
  std::vector<std::vector<double>> out;
  out.reserve(j.factorization().arity());
  for (std::size_t i = 0; i < j.factorization().arity(); ++i) {
    const std::size_t keep[1] = {i};
    out.push_back(marginal(j, keep));
  }
  return out;
}

EntropyReport entropy_report(const JointDistribution& j, LogBase base) {
  const std::size_t k = j.factorization().arity();
  if (k != 2 && k != 3) throw UnsupportedArity(k);

  EntropyReport report;
  report.base = base;
  for (const auto& m : marginals(j)) report.h_parts.push_back(entropy_unchecked(m, base));
  report.h_joint = entropy_unchecked(j.probs(), base);

  double parts = 0.0;
  for (double h : report.h_parts) parts += h;
  report.mutual_information = parts - report.h_joint;

  if (k == 2) {
    report.inequality_slack = report.mutual_information;
  } else {
    const std::size_t ab[2] = {0, 1};
    const std::size_t bc[2] = {1, 2};
    report.h_ab = entropy_unchecked(marginal(j, ab), base);
    report.h_bc = entropy_unchecked(marginal(j, bc), base);
    report.inequality_slack = *report.h_ab + *report.h_bc - report.h_joint - report.h_parts[1];
  }
  return report;
}

}  // namespace fcfinfo
