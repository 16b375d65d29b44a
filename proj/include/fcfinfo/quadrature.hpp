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
#include <vector>

#include "fcfinfo/fcf.hpp"

namespace fcfinfo {

// Gauss-Hermite rule for weight exp(-t^2). `scaled_weights` holds
// w_i * exp(t_i^2), which stays O(node spacing) for any node count and is what
// an integrand that already carries its own Gaussian needs.
struct GaussHermiteRule {
  std::vector<double> nodes;           // ascending
  std::vector<double> weights;         // may underflow to 0 at the edges
  std::vector<double> scaled_weights;  // w_i * exp(t_i^2)
};

GaussHermiteRule gauss_hermite_rule(std::size_t count);

// Orthonormal Hermite function psi_k(y) = H_k(y) exp(-y^2/2) / sqrt(2^k k! sqrt(pi)).
double hermite_function(std::size_t k, double y);

inline constexpr std::size_t kQuadratureMaxLevel = 200;

// P_mn = |I_mn|^2 with I_mn = integral of psi_m(x + a; 1) psi_n(x; l) dx, where
// psi_k(x; l) = psi_k(x / l) / sqrt(l). The rule is mapped onto the exact
// Gaussian envelope of the product, which turns the integrand into a
// polynomial of degree m + n, so the rule is exact up to rounding.
//
// Throws std::invalid_argument for l <= 0 or a level above
// kQuadratureMaxLevel.
double overlap_quadrature(std::size_t m, std::size_t n, const OscillatorPair& pair);

// The signed amplitude I_mn.
double overlap_amplitude(std::size_t m, std::size_t n, const OscillatorPair& pair);

}  // namespace fcfinfo
