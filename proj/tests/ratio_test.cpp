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

#include <gtest/gtest.h>

#include "ultraprox/errors.hpp"

namespace ultraprox {
namespace {

TEST(RatioTest, LowestTerms) {
  const Ratio r(Integer(6), Integer(8));
  EXPECT_EQ(r.num(), 3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(r.to_string(), "3/4");
  EXPECT_EQ(Ratio(Integer(2), Integer(4)), Ratio(Integer(1), Integer(2)));
}

TEST(RatioTest, ZeroIsCanonical) {
  EXPECT_EQ(Ratio().to_string(), "0/1");
  EXPECT_EQ(Ratio(Integer(0), Integer(7)), Ratio());
  EXPECT_TRUE(Ratio(Integer(0), Integer(7)).is_zero());
}

TEST(RatioTest, RejectsBadDenominators) {
  EXPECT_THROW(Ratio(Integer(1), Integer(0)), DomainError);
  EXPECT_THROW(Ratio(Integer(-1), Integer(2)), DomainError);
  EXPECT_THROW(Ratio(Integer(1), Integer(-2)), DomainError);
}

TEST(RatioTest, Ordering) {
  EXPECT_LT(Ratio::reciprocal(3), Ratio::reciprocal(2));
  EXPECT_GT(Ratio::whole(1), Ratio(Integer(99), Integer(100)));
  EXPECT_EQ(ratio_max(Ratio::reciprocal(4), Ratio::reciprocal(9)), Ratio::reciprocal(4));
  EXPECT_EQ(ratio_min(Ratio::reciprocal(4), Ratio::reciprocal(9)), Ratio::reciprocal(9));
}

TEST(RatioTest, InversePower) {
  EXPECT_EQ(Ratio::inverse_power(3, 2).to_string(), "1/9");
  EXPECT_EQ(Ratio::inverse_power(3, 0), Ratio::whole(1));
  EXPECT_EQ(Ratio::inverse_power(2, 100).den(), Integer(1) << 100);
  EXPECT_THROW(Ratio::inverse_power(0, 1), DomainError);
}

TEST(RatioTest, Parse) {
  EXPECT_EQ(Ratio::parse("1/2"), Ratio::reciprocal(2));
  EXPECT_EQ(Ratio::parse("4/6").to_string(), "2/3");
  EXPECT_EQ(Ratio::parse("5"), Ratio::whole(5));
  EXPECT_EQ(Ratio::parse("123456789012345678901234567890/2").num(),
            Integer("61728394506172839450617283945"));
  EXPECT_THROW(Ratio::parse("1/0"), SpecError);
  EXPECT_THROW(Ratio::parse("-1/2"), SpecError);
  EXPECT_THROW(Ratio::parse("0.5"), SpecError);
  EXPECT_THROW(Ratio::parse(""), SpecError);
  EXPECT_THROW(Ratio::parse("1/"), SpecError);
}

TEST(RatioTest, ParseFormatRoundTrip) {
  for (int n = 0; n < 20; ++n) {
    for (int d = 1; d < 20; ++d) {
      const Ratio r{Integer(n), Integer(d)};
      EXPECT_EQ(Ratio::parse(r.to_string()), r);
    }
  }
}

}  // namespace
}  // namespace ultraprox
