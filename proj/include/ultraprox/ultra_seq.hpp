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

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "ultraprox/ratio.hpp"

namespace ultraprox {

/// Terms at index >= `from` all equal `value`.
struct StableTail {
  std::size_t from = 0;
  Integer value;
};

/// Work limit for lazy term evaluation. Each term computed from scratch
/// (not served from a memo) consumes one unit.
struct SeqBudget {
  std::size_t remaining = 10'000'000;
};

/**
 * Infinite sequence of non-negative integers, evaluated lazily.
 *
 * A sequence is either a base sequence (explicit prefix followed by a
 * constant tail) or a partial-product map applied to another sequence:
 *
 *   (T x)(n) = x(n)                 for n < fixed_head
 *   (T x)(n) = x(0) * ... * x(n)    for n >= fixed_head
 *
 * Nodes are immutable and shared; applying a map pushes a new node on top of
 * the existing representation. Computed terms are memoized per node behind a
 * mutex, so a sequence may be read from several threads.
 */
class UltraSeq {
 public:
  /// The constant sequence (c, c, c, ...).
  static UltraSeq constant(Integer c);

  /// prefix followed by (tail, tail, ...). Trailing prefix entries equal to
  /// the tail are dropped so equal base sequences share one representation.
  static UltraSeq from_prefix(std::vector<Integer> prefix, Integer tail);

  /// T x for the partial-product map that keeps the first `fixed_head`
  /// coordinates. fixed_head = 2 is the head-fixed map, 0 the full one.
  UltraSeq apply_partial_product(std::size_t fixed_head) const;

  /// Term at index n. Throws BudgetError when the budget runs out.
  Integer term(std::size_t n, SeqBudget& budget) const;
  Integer term(std::size_t n) const;

  /// The first `count` terms.
  std::vector<Integer> terms(std::size_t count) const;

  /// Certificate that the sequence is eventually constant, if one can be
  /// derived from the representation.
  std::optional<StableTail> stable_tail() const;

  /// Number of applied maps above the base sequence.
  std::size_t stack_depth() const;

  bool is_base() const;
  /// Base sequence only: explicit prefix and tail value.
  const std::vector<Integer>& base_prefix() const;
  const Integer& base_tail() const;
  /// Applied node only: the map's fixed head and the sequence it acts on.
  std::size_t applied_fixed_head() const;
  const UltraSeq& applied_inner() const;

  /// True if both sequences have the same representation (same base after
  /// normalization, same stack of maps). Implies equality as sequences.
  bool same_representation(const UltraSeq& other) const;

 private:
  struct Node;
  explicit UltraSeq(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Outcome of comparing two sequences.
struct SeqComparison {
  /// Least index where the sequences differ; absent if none was found.
  std::optional<std::size_t> first_difference;
  /// True when the sequences are certified equal as infinite objects.
  bool certified_equal = false;
  /// Number of leading indices checked and found equal.
  std::size_t agreed = 0;
};

/// Compares x and y on indices [0, depth). When no difference shows up and
/// both carry stable-tail certificates the comparison is extended to the
/// point where it becomes exact.
SeqComparison compare_sequences(const UltraSeq& x, const UltraSeq& y, std::size_t depth);

}  // namespace ultraprox
