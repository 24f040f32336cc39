// Copyright 2026 The Ultraprox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ultraprox {

using Integer = boost::multiprecision::cpp_int;

/**
 * Exact non-negative rational number.
 *
 * Every distance value in the library is a Ratio, so equalities such as
 * d(x, y) == dist(A, B) are decided exactly. Values are always kept in
 * lowest terms with a positive denominator; zero is stored as 0/1, which
 * makes structural equality coincide with numeric equality.
 *
 * Only the operations needed by ultrametric geometry are provided: the total
 * order, max, and a few constructors (reciprocals and powers).
 */
class Ratio {
 public:
  /// Zero.
  Ratio() : num_(0), den_(1) {}

  /// Throws DomainError if `den` is not positive or `num` is negative.
  Ratio(Integer num, Integer den);

  /// The integer n as n/1.
  static Ratio whole(Integer n) { return Ratio(std::move(n), Integer(1)); }

  /// 1/n, n > 0.
  static Ratio reciprocal(Integer n) { return Ratio(Integer(1), std::move(n)); }

  /// base^-exponent, base >= 1.
  static Ratio inverse_power(std::uint64_t base, std::uint64_t exponent);

  /// Parses "p/q" or "p" (decimal digits only). Throws SpecError.
  static Ratio parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  /// Canonical "p/q" form; "0/1" for zero.
  std::string to_string() const;

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  Integer num_;
  Integer den_;
};

/// Reduced form of num/den. Same contract as the Ratio constructor.
Ratio ratio_make(Integer num, Integer den);

/// The larger of a and b under the exact order.
inline const Ratio& ratio_max(const Ratio& a, const Ratio& b) { return a < b ? b : a; }

inline const Ratio& ratio_min(const Ratio& a, const Ratio& b) { return b < a ? b : a; }

/// Parses a non-negative decimal integer. Throws SpecError.
Integer parse_integer(std::string_view text);

}  // namespace ultraprox
