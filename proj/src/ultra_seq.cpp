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

#include <algorithm>
#include <mutex>

#include "ultraprox/errors.hpp"

namespace ultraprox {

struct UltraSeq::Node {
  // Base sequence.
  std::vector<Integer> prefix;
  Integer tail;

  // Applied map; `inner` is set iff this is an applied node.
  std::size_t fixed_head = 0;
  std::optional<UltraSeq> inner;
  std::size_t depth = 0;

  std::optional<StableTail> stable;

  // Memo for applied nodes: terms[k] is this node's term k, running the
  // product inner(0) * ... * inner(terms.size() - 1).
  mutable std::mutex mu;
  mutable std::vector<Integer> terms;
  mutable Integer running;
};

namespace {

std::optional<StableTail> applied_stable_tail(const UltraSeq& inner, std::size_t fixed_head) {
  auto base = inner.stable_tail();
  if (!base) return std::nullopt;
  const std::size_t from = std::max(base->from, fixed_head);
  Integer product = 1;
  for (std::size_t i = 0; i < from; ++i) {
    Integer v = inner.term(i);
    if (v == 0) return StableTail{std::max(i, fixed_head), Integer(0)};
    product *= v;
  }
  if (base->value == 0) return StableTail{from, Integer(0)};
  if (base->value == 1) return StableTail{from, product};
  return std::nullopt;
}

}  // namespace

UltraSeq UltraSeq::constant(Integer c) { return from_prefix({}, std::move(c)); }

UltraSeq UltraSeq::from_prefix(std::vector<Integer> prefix, Integer tail) {
  if (tail < 0) throw DomainError("sequence: negative tail");
  for (const auto& v : prefix) {
    if (v < 0) throw DomainError("sequence: negative term");
  }
  while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
  auto node = std::make_shared<Node>();
  node->stable = StableTail{prefix.size(), tail};
  node->prefix = std::move(prefix);
  node->tail = std::move(tail);
  return UltraSeq(std::move(node));
}

UltraSeq UltraSeq::apply_partial_product(std::size_t fixed_head) const {
  auto node = std::make_shared<Node>();
  node->fixed_head = fixed_head;
  node->inner = *this;
  node->depth = node_->depth + 1;
  node->stable = applied_stable_tail(*this, fixed_head);
  return UltraSeq(std::move(node));
}

Integer UltraSeq::term(std::size_t n) const {
  SeqBudget budget;
  return term(n, budget);
}

Integer UltraSeq::term(std::size_t n, SeqBudget& budget) const {
  const Node& node = *node_;
  if (!node.inner) return n < node.prefix.size() ? node.prefix[n] : node.tail;

  std::lock_guard<std::mutex> lock(node.mu);
  while (node.terms.size() <= n) {
    if (budget.remaining == 0) throw BudgetError("sequence: term evaluation budget exhausted");
    --budget.remaining;
    const std::size_t k = node.terms.size();
    Integer v = node.inner->term(k, budget);
    node.running = k == 0 ? v : node.running * v;
    node.terms.push_back(k < node.fixed_head ? std::move(v) : node.running);
  }
  return node.terms[n];
}

std::vector<Integer> UltraSeq::terms(std::size_t count) const {
  SeqBudget budget;
  std::vector<Integer> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(term(i, budget));
  return out;
}

std::optional<StableTail> UltraSeq::stable_tail() const { return node_->stable; }

std::size_t UltraSeq::stack_depth() const { return node_->depth; }

bool UltraSeq::is_base() const { return !node_->inner.has_value(); }

const std::vector<Integer>& UltraSeq::base_prefix() const {
  if (!is_base()) throw DomainError("sequence: not a base sequence");
  return node_->prefix;
}

const Integer& UltraSeq::base_tail() const {
  if (!is_base()) throw DomainError("sequence: not a base sequence");
  return node_->tail;
}

std::size_t UltraSeq::applied_fixed_head() const {
  if (is_base()) throw DomainError("sequence: not an applied sequence");
  return node_->fixed_head;
}

const UltraSeq& UltraSeq::applied_inner() const {
  if (is_base()) throw DomainError("sequence: not an applied sequence");
  return *node_->inner;
}

bool UltraSeq::same_representation(const UltraSeq& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.depth != b.depth) return false;
  if (!a.inner) return a.prefix == b.prefix && a.tail == b.tail;
  return a.fixed_head == b.fixed_head && a.inner->same_representation(*b.inner);
}

SeqComparison compare_sequences(const UltraSeq& x, const UltraSeq& y, std::size_t depth) {
  SeqComparison out;
  if (x.same_representation(y)) {
    out.certified_equal = true;
    out.agreed = depth;
    return out;
  }
  std::optional<std::size_t> horizon;
  auto sx = x.stable_tail();
  auto sy = y.stable_tail();
  if (sx && sy) horizon = std::max(sx->from, sy->from);

  SeqBudget budget;
  for (std::size_t n = 0;; ++n) {
    if (horizon && n > *horizon) {
      out.certified_equal = true;
      break;
    }
    if (!horizon && n >= depth) break;
    if (x.term(n, budget) != y.term(n, budget)) {
      out.first_difference = n;
      break;
    }
    out.agreed = n + 1;
  }
  return out;
}

}  // namespace ultraprox
