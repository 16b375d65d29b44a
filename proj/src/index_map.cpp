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

#include "fcfinfo/index_map.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace fcfinfo {
namespace {

bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return __builtin_mul_overflow(a, b, &out);
}

bool add_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return __builtin_add_overflow(a, b, &out);
}

}  // namespace

IndexOutOfRange::IndexOutOfRange(const std::string& what, std::optional<std::size_t> coordinate)
    : std::out_of_range(what), coordinate_(coordinate) {}

Factorization::Factorization(std::vector<std::uint64_t> sizes, bool unbounded_last)
    : sizes_(std::move(sizes)), unbounded_last_(unbounded_last) {
  if (sizes_.empty()) throw std::invalid_argument("factorization needs at least one subsystem");
  if (unbounded_last_) sizes_.back() = 0;

  strides_.assign(sizes_.size(), 1);
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    strides_[i] = product;
    const bool is_open = unbounded_last_ && i + 1 == sizes_.size();
    if (is_open) break;
    if (sizes_[i] == 0) {
      throw std::invalid_argument("subsystem size " + std::to_string(i + 1) + " must be >= 1");
    }
    if (mul_overflows(product, sizes_[i], product)) {
      throw std::invalid_argument("factorization capacity overflows 64 bits");
    }
  }
}

Factorization Factorization::parity_split(std::uint64_t q1) { return Factorization({q1, 0}, true); }

Factorization Factorization::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty split specification");
  std::vector<std::uint64_t> sizes;
  bool unbounded = false;
  for (std::size_t pos = 0, comma = 0; comma < text.size(); pos = comma + 1) {
    comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    if (unbounded) throw std::invalid_argument("'inf' may only appear as the last size");
    if (token == "inf" || token == "*") {
      unbounded = true;
      sizes.push_back(0);
    } else {
      std::uint64_t value = 0;
      const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || end != token.data() + token.size() || token.empty()) {
        throw std::invalid_argument("cannot parse subsystem size '" + token + "' in '" + text + "'");
      }
      sizes.push_back(value);
    }
  }
  if (sizes.size() == 1 && !unbounded) {
    sizes.push_back(0);
    unbounded = true;
  }
  if (unbounded && sizes.size() == 1) {
    throw std::invalid_argument("an unbounded split needs at least one bounded size");
  }
  return Factorization(std::move(sizes), unbounded);
}

std::optional<std::uint64_t> Factorization::size(std::size_t i) const {
  if (i >= sizes_.size()) throw std::out_of_range("subsystem index out of range");
  if (unbounded_last_ && i + 1 == sizes_.size()) return std::nullopt;
  return sizes_[i];
}

std::optional<std::uint64_t> Factorization::capacity() const noexcept {
  if (unbounded_last_) return std::nullopt;
  return strides_.back() * sizes_.back();
}

Factorization Factorization::resolved(std::uint64_t length) const {
  if (!unbounded_last_) {
    if (length > *capacity()) {
      throw IndexOutOfRange("distribution of length " + std::to_string(length) +
                                " does not fit factorization " + to_string(),
                            std::nullopt);
    }
    return *this;
  }
  const std::uint64_t block = strides_.back();
  std::vector<std::uint64_t> sizes = sizes_;
  sizes.back() = std::max<std::uint64_t>(1, (length + block - 1) / block);
  return Factorization(std::move(sizes), false);
}

std::string Factorization::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i > 0) os << ',';
    if (unbounded_last_ && i + 1 == sizes_.size()) {
      os << "inf";
    } else {
      os << sizes_[i];
    }
  }
  return os.str();
}

std::uint64_t encode(std::span<const std::uint64_t> x, const Factorization& f) {
  if (x.size() != f.arity()) {
    throw std::invalid_argument("tuple has " + std::to_string(x.size()) + " coordinates, factorization " +
                                f.to_string() + " has " + std::to_string(f.arity()));
  }
  std::uint64_t y = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto bound = f.size(i);
    if (x[i] < 1 || (bound && x[i] > *bound)) {
      throw IndexOutOfRange("coordinate " + std::to_string(i + 1) + " = " + std::to_string(x[i]) +
                                " outside [1, " + (bound ? std::to_string(*bound) : "inf") + "]",
                            i);
    }
    std::uint64_t term = 0;
    if (mul_overflows(x[i] - 1, f.stride(i), term) || add_overflows(y, term, y)) {
      throw IndexOutOfRange("coordinate " + std::to_string(i + 1) + " overflows the flat index", i);
    }
  }
  if (y == std::numeric_limits<std::uint64_t>::max()) {
    throw IndexOutOfRange("tuple overflows the flat index", x.size() - 1);
  }
  return y + 1;
}

std::vector<std::uint64_t> decode(std::uint64_t y, const Factorization& f) {
  const auto cap = f.capacity();
  if (y < 1 || (cap && y > *cap)) {
    throw IndexOutOfRange("flat index " + std::to_string(y) + " outside [1, " +
                              (cap ? std::to_string(*cap) : "inf") + "]",
                          std::nullopt);
  }
  std::vector<std::uint64_t> x(f.arity());
  std::uint64_t rest = y - 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto bound = f.size(i);
    if (bound) {
      x[i] = rest % *bound + 1;
      rest /= *bound;
    } else {
      x[i] = rest + 1;
      rest = 0;
    }
  }
  return x;
}

}  // namespace fcfinfo
