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

#include "ultraprox/ultra_seq.hpp"

#include <gtest/gtest.h>

#include "ultraprox/errors.hpp"

namespace ultraprox {
namespace {

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

TEST(UltraSeqTest, BaseTerms) {
  const UltraSeq s = UltraSeq::from_prefix(ints({1, 2}), 7);
  EXPECT_EQ(s.terms(5), ints({1, 2, 7, 7, 7}));
  ASSERT_TRUE(s.stable_tail());
  EXPECT_EQ(s.stable_tail()->from, 2u);
  EXPECT_EQ(s.stable_tail()->value, 7);
}

TEST(UltraSeqTest, PrefixNormalization) {
  const UltraSeq a = UltraSeq::from_prefix(ints({3, 3, 3}), 3);
  const UltraSeq b = UltraSeq::constant(3);
  EXPECT_TRUE(a.same_representation(b));
  EXPECT_TRUE(a.base_prefix().empty());
}

TEST(UltraSeqTest, HeadFixedPartialProduct) {
  const UltraSeq t = UltraSeq::constant(2).apply_partial_product(2);
  EXPECT_EQ(t.terms(5), ints({2, 2, 8, 16, 32}));
  EXPECT_EQ(t.stack_depth(), 1u);
  EXPECT_FALSE(t.stable_tail());
}

TEST(UltraSeqTest, FullPartialProduct) {
  const UltraSeq t = UltraSeq::from_prefix(ints({1}), 2).apply_partial_product(0);
  EXPECT_EQ(t.terms(5), ints({1, 2, 4, 8, 16}));
}

TEST(UltraSeqTest, ZeroTailMakesProductsStable) {
  const UltraSeq z = UltraSeq::from_prefix(ints({5, 5}), 0);
  const UltraSeq t = z.apply_partial_product(2);
  EXPECT_EQ(t.terms(6), ints({5, 5, 0, 0, 0, 0}));
  ASSERT_TRUE(t.stable_tail());
  EXPECT_EQ(t.stable_tail()->value, 0);
  const SeqComparison c = compare_sequences(z, t, 8);
  EXPECT_TRUE(c.certified_equal);
  EXPECT_FALSE(c.first_difference);
}

TEST(UltraSeqTest, OneTailIsStableUnderProducts) {
  const UltraSeq t = UltraSeq::constant(1).apply_partial_product(0).apply_partial_product(2);
  ASSERT_TRUE(t.stable_tail());
  EXPECT_EQ(t.stable_tail()->value, 1);
  EXPECT_TRUE(compare_sequences(t, UltraSeq::constant(1), 4).certified_equal);
}

TEST(UltraSeqTest, FirstDifference) {
  const SeqComparison c =
      compare_sequences(UltraSeq::from_prefix(ints({1, 2, 3}), 0), UltraSeq::from_prefix(ints({1, 2, 4}), 0), 10);
  ASSERT_TRUE(c.first_difference);
  EXPECT_EQ(*c.first_difference, 2u);
  EXPECT_FALSE(c.certified_equal);
}

TEST(UltraSeqTest, DepthLimitedComparisonIsUndecided) {
  const UltraSeq x = UltraSeq::constant(2).apply_partial_product(2);
  const UltraSeq y = UltraSeq::from_prefix(ints({2, 2, 8, 16, 32, 64}), 0);
  const SeqComparison c = compare_sequences(x, y, 4);
  EXPECT_FALSE(c.first_difference);
  EXPECT_FALSE(c.certified_equal);
  EXPECT_EQ(c.agreed, 4u);
}

TEST(UltraSeqTest, BudgetIsEnforced) {
  UltraSeq s = UltraSeq::constant(2);
  for (int i = 0; i < 3; ++i) s = s.apply_partial_product(0);
  SeqBudget budget{2};
  EXPECT_THROW(s.term(50, budget), BudgetError);
}

TEST(UltraSeqTest, BigTermsStayExact) {
  const UltraSeq t = UltraSeq::constant(3).apply_partial_product(0);
  EXPECT_EQ(t.term(99), boost::multiprecision::pow(Integer(3), 100));
}

}  // namespace
}  // namespace ultraprox
