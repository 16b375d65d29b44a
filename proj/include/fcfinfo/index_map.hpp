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
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fcfinfo {

class IndexOutOfRange : public std::out_of_range {
 public:
  // coordinate is the 0-based position of the offending entry of a tuple, or
  // nullopt when the flat index itself is out of range.
  IndexOutOfRange(const std::string& what, std::optional<std::size_t> coordinate);

  std::optional<std::size_t> coordinate() const noexcept { return coordinate_; }

 private:
  std::optional<std::size_t> coordinate_;
};

// Ordered subsystem sizes (X_1, ..., X_k) of a mixed-radix reshape. The last
// size may be unbounded, in which case the capacity is infinite and the last
// coordinate absorbs whatever the earlier radices leave over.
class Factorization {
 public:
  // Throws std::invalid_argument on an empty list, a zero size, or a capacity
  // that does not fit in 64 bits.
  explicit Factorization(std::vector<std::uint64_t> sizes, bool unbounded_last = false);

  // (Q1, unbounded): the even/odd split of vibrational levels for Q1 = 2.
  static Factorization parity_split(std::uint64_t q1 = 2);

  // Parses "3,4", "2,inf" or "2,2,inf". A single number "Q" means "Q,inf".
  static Factorization parse(const std::string& text);

  std::size_t arity() const noexcept { return sizes_.size(); }
  bool unbounded() const noexcept { return unbounded_last_; }

  // nullopt for the unbounded last coordinate.
  std::optional<std::uint64_t> size(std::size_t i) const;

  // prod_{j<i} X_j
  std::uint64_t stride(std::size_t i) const { return strides_.at(i); }

  // nullopt when unbounded.
  std::optional<std::uint64_t> capacity() const noexcept;

  // A bounded copy whose last size is the smallest that holds `length` flat
  // entries. For an already bounded factorization, returns *this if it can
  // hold `length` and throws IndexOutOfRange otherwise.
  Factorization resolved(std::uint64_t length) const;

  std::string to_string() const;

  bool operator==(const Factorization&) const = default;

 private:
  std::vector<std::uint64_t> sizes_;  // last entry is 0 when unbounded
  std::vector<std::uint64_t> strides_;
  bool unbounded_last_ = false;
};

// y = x_1 + sum_{k>=2} (x_k - 1) prod_{j<k} X_j, all indices 1-based.
std::uint64_t encode(std::span<const std::uint64_t> x, const Factorization& f);

// Inverse of encode by repeated division in mixed radix.
std::vector<std::uint64_t> decode(std::uint64_t y, const Factorization& f);

// Vibrational quantum numbers start at 0, map indices at 1.
constexpr std::uint64_t quantum_number_to_index(std::uint64_t n) noexcept { return n + 1; }

}  // namespace fcfinfo
