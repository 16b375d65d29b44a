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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcfinfo/fcf.hpp"
#include "fcfinfo/index_map.hpp"

namespace fcfinfo {

enum class LogBase { two, e, ten };

// ln(base)
double log_base_scale(LogBase base) noexcept;
LogBase parse_log_base(const std::string& text);
std::string to_string(LogBase base);

// Tolerance on sum(p) = 1 accepted by shannon_entropy.
inline constexpr double kEntropyNormTolerance = 1e-10;
// Tolerance on sum(p) = 1 required of a JointDistribution.
inline constexpr double kJointNormTolerance = 1e-12;
// Inequality slacks below zero by less than this are rounding, not violations.
inline constexpr double kSlackTolerance = 1e-12;

// -sum p ln p / ln(base), with 0 ln 0 = 0. Throws std::invalid_argument on a
// negative or non-finite entry or when the sum is off 1 by more than
// kEntropyNormTolerance.
double shannon_entropy(std::span<const double> p, LogBase base = LogBase::e);

class UnsupportedArity : public std::invalid_argument {
 public:
  explicit UnsupportedArity(std::size_t arity);
};

// A probability table over a bounded factorization, flat index y - 1 in the
// mixed-radix order of encode().
class JointDistribution {
 public:
  // Zero-pads `probs` up to the (resolved) capacity. Throws
  // std::invalid_argument on a negative entry or a sum off 1 by more than
  // kJointNormTolerance, IndexOutOfRange when a bounded factorization is too
  // small for the input.
  JointDistribution(std::vector<double> probs, const Factorization& factorization);

  // Uses the distribution as is when it is renormalized, otherwise a
  // renormalized copy.
  static JointDistribution from_fcf(const FcfDistribution& dist, const Factorization& factorization);

  const Factorization& factorization() const noexcept { return factorization_; }
  std::span<const double> probs() const noexcept { return probs_; }

 private:
  Factorization factorization_;
  std::vector<double> probs_;
};

// Joint distribution of the listed subsystems (0-based, strictly increasing),
// flattened in the same mixed-radix order.
std::vector<double> marginal(const JointDistribution& j, std::span<const std::size_t> keep);

// One single-subsystem marginal per coordinate.
std::vector<std::vector<double>> marginals(const JointDistribution& j);

struct EntropyReport {
  std::vector<double> h_parts;  // H(A), H(B)[, H(C)]
  double h_joint = 0.0;         // H(AB) or H(ABC)
  double mutual_information = 0.0;  // sum(h_parts) - h_joint
  // H(A) + H(B) - H(AB) for two subsystems; H(AB) + H(BC) - H(ABC) - H(B)
  // for three.
  double inequality_slack = 0.0;
  std::optional<double> h_ab;  // three subsystems only
  std::optional<double> h_bc;
  LogBase base = LogBase::e;

  bool inequality_holds() const noexcept { return inequality_slack >= -kSlackTolerance; }
};

// Throws UnsupportedArity unless the factorization has 2 or 3 subsystems.
EntropyReport entropy_report(const JointDistribution& j, LogBase base = LogBase::e);

}  // namespace fcfinfo
