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

#include "ultraprox/ratio.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "ultraprox/errors.hpp"

namespace ultraprox {

Ratio::Ratio(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ <= 0) throw DomainError("ratio: denominator must be positive");
  if (num_ < 0) throw DomainError("ratio: numerator must be non-negative");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Ratio Ratio::inverse_power(std::uint64_t base, std::uint64_t exponent) {
  if (base == 0) throw DomainError("ratio: inverse power of zero");
  Integer den = boost::multiprecision::pow(Integer(base), static_cast<unsigned>(exponent));
  return Ratio(Integer(1), std::move(den));
}

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw SpecError("integer: empty string");
  for (char c : text) {
    if (c < '0' || c > '9') throw SpecError("integer: invalid digit in '" + std::string(text) + "'");
  }
  return Integer(std::string(text));
}

Ratio Ratio::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Ratio(parse_integer(text), Integer(1));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw SpecError("ratio: zero denominator in '" + std::string(text) + "'");
  return Ratio(std::move(num), std::move(den));
}

std::string Ratio::to_string() const { return num_.str() + "/" + den_.str(); }

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  if (a.den_ == b.den_) return a.num_.compare(b.num_) <=> 0;
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  return lhs.compare(rhs) <=> 0;
}

Ratio ratio_make(Integer num, Integer den) { return Ratio(std::move(num), std::move(den)); }

}  // namespace ultraprox
