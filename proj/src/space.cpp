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

#include "ultraprox/space.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_set>

#include "ultraprox/detail/overloaded.hpp"
#include "ultraprox/errors.hpp"

namespace ultraprox {

namespace {

std::atomic<std::uint64_t> next_space_id{1};

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Point

std::uint64_t Point::index() const {
  if (const auto* i = std::get_if<std::uint64_t>(&rep_)) return *i;
  throw DomainError("point: not an indexed point");
}

const UltraSeq& Point::seq() const {
  if (const auto* s = std::get_if<UltraSeq>(&rep_)) return *s;
  throw DomainError("point: not a sequence point");
}

// ---------------------------------------------------------------------------
// Space

Space::Space(SpaceKind kind) : kind_(kind), id_(next_space_id.fetch_add(1)) {}

std::size_t Space::size() const { throw UnsupportedError("space: infinite space has no size"); }

void Space::check_index(std::size_t i) const {
  if (i >= size()) throw DomainError("space: point index out of range");
}

Point Space::point(std::size_t i) const {
  check_index(i);
  return Point(id_, static_cast<std::uint64_t>(i));
}

std::vector<Point> Space::points() const {
  const std::size_t n = size();
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(id_, static_cast<std::uint64_t>(i));
  return out;
}

void Space::check_owned(const Point& p) const {
  if (p.owner() != id_) throw CrossSpaceError("point does not belong to this space");
}

Ratio Space::distance(const Point& x, const Point& y) const {
  Measurement m = measure(x, y);
  if (!m.value) {
    throw IndistinguishableError("points " + label(x) + " and " + label(y) + " agree to depth " +
                                 std::to_string(m.agreed_depth) + " without an equality certificate");
  }
  return *std::move(m.value);
}

bool Space::same_point(const Point& x, const Point& y) const {
  Measurement m = measure(x, y);
  return m.value && m.value->is_zero();
}

bool Space::satisfies(const PredicateSubset&, const Point&) const {
  throw UnsupportedError("space: predicate not supported for this space");
}

bool Space::contains(const SubsetSpec& subset, const Point& p) const {
  check_owned(p);
  return std::visit(detail::Overloaded{
                        [&](const PointList& list) {
                          return std::any_of(list.points.begin(), list.points.end(),
                                             [&](const Point& q) { return same_point(p, q); });
                        },
                        [&](const Ball& ball) { return distance(ball.center, p) <= ball.radius; },
                        [&](const PredicateSubset& pred) { return satisfies(pred, p); },
                    },
                    subset);
}

namespace {

// Enumeration shared by the finite-like spaces: filter all points.
Enumeration enumerate_finite(const Space& space, const SubsetSpec& subset) {
  Enumeration out;
  if (const auto* list = std::get_if<PointList>(&subset)) {
    for (const auto& p : list->points) space.check_owned(p);
    out.points = list->points;
    return out;
  }
  for (std::size_t i = 0; i < space.size(); ++i) {
    Point p = space.point(i);
    if (space.contains(subset, p)) out.points.push_back(std::move(p));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteSpace

FiniteSpace::FiniteSpace(std::vector<std::string> labels, std::vector<std::vector<Ratio>> matrix)
    : Space(SpaceKind::kFinite), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw SpecError("finite space: at least one point required");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw SpecError("finite space: duplicate label '" + l + "'");
  }
  if (matrix.size() != n) throw SpecError("finite space: matrix row count differs from point count");
  matrix_.reserve(n * n);
  for (auto& row : matrix) {
    if (row.size() != n) throw SpecError("finite space: matrix is not square");
    for (auto& v : row) matrix_.push_back(std::move(v));
  }
}

Measurement FiniteSpace::measure(const Point& x, const Point& y) const {
  check_owned(x);
  check_owned(y);
  return Measurement{at(x.index(), y.index()), 0};
}

std::string FiniteSpace::label(const Point& p) const {
  check_owned(p);
  return labels_.at(p.index());
}

std::optional<std::size_t> FiniteSpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Enumeration FiniteSpace::enumerate(const SubsetSpec& subset, std::size_t) const {
  return enumerate_finite(*this, subset);
}

// ---------------------------------------------------------------------------
// PAdicSpace

PAdicSpace::PAdicSpace(std::uint64_t p, std::uint64_t m) : Space(SpaceKind::kPAdic), p_(p), m_(m) {
  if (!is_prime(p)) throw SpecError("padic space: p must be a prime");
  if (m < 1) throw SpecError("padic space: precision must be at least 1");
  modulus_ = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (modulus_ > (std::uint64_t{1} << 40) / p) throw SpecError("padic space: p^m too large");
    modulus_ *= p;
  }
  levels_.reserve(m);
  for (std::uint64_t v = 0; v < m; ++v) levels_.push_back(Ratio::inverse_power(p, v));
}

std::uint64_t PAdicSpace::valuation(std::uint64_t residue) const {
  residue %= modulus_;
  if (residue == 0) return m_;
  std::uint64_t v = 0;
  while (residue % p_ == 0) {
    residue /= p_;
    ++v;
  }
  return v;
}

Measurement PAdicSpace::measure(const Point& x, const Point& y) const {
  check_owned(x);
  check_owned(y);
  const std::uint64_t a = x.index();
  const std::uint64_t b = y.index();
  if (a == b) return Measurement{Ratio(), 0};
  return Measurement{levels_[valuation(a > b ? a - b : b - a)], 0};
}

std::string PAdicSpace::label(const Point& p) const {
  check_owned(p);
  return std::to_string(p.index());
}

bool PAdicSpace::satisfies(const PredicateSubset& pred, const Point& p) const {
  switch (pred.kind) {
    case Predicate::kEven:
      return p.index() % 2 == 0;
    case Predicate::kOdd:
      return p.index() % 2 == 1;
    case Predicate::kCoord0:
      break;
  }
  throw UnsupportedError("padic space: coord0 predicate applies to sequence spaces only");
}

Enumeration PAdicSpace::enumerate(const SubsetSpec& subset, std::size_t) const {
  return enumerate_finite(*this, subset);
}

// ---------------------------------------------------------------------------
// NatReciprocalSpace

NatReciprocalSpace::NatReciprocalSpace(std::uint64_t bound)
    : Space(SpaceKind::kNatReciprocal), bound_(bound) {
  if (bound < 1) throw SpecError("nat_reciprocal space: bound must be at least 1");
}

Point NatReciprocalSpace::point_of(std::uint64_t n) const {
  if (n < 1) throw DomainError("nat_reciprocal space: points start at 1");
  return Point(id(), n);
}

Measurement NatReciprocalSpace::measure(const Point& x, const Point& y) const {
  check_owned(x);
  check_owned(y);
  const std::uint64_t a = x.index();
  const std::uint64_t b = y.index();
  if (a == b) return Measurement{Ratio(), 0};
  return Measurement{Ratio::reciprocal(Integer(std::min(a, b))), 0};
}

std::string NatReciprocalSpace::label(const Point& p) const {
  check_owned(p);
  return std::to_string(p.index());
}

bool NatReciprocalSpace::satisfies(const PredicateSubset& pred, const Point& p) const {
  switch (pred.kind) {
    case Predicate::kEven:
      return p.index() % 2 == 0;
    case Predicate::kOdd:
      return p.index() % 2 == 1;
    case Predicate::kCoord0:
      break;
  }
  throw UnsupportedError("nat_reciprocal space: coord0 predicate applies to sequence spaces only");
}

Enumeration NatReciprocalSpace::enumerate(const SubsetSpec& subset, std::size_t bound) const {
  Enumeration out;
  if (const auto* list = std::get_if<PointList>(&subset)) {
    for (const auto& p : list->points) check_owned(p);
    out.points = list->points;
    return out;
  }
  if (const auto* ball = std::get_if<Ball>(&subset)) {
    // B(n, r) is {n} when r < 1/n, otherwise the tail {k : k >= ceil(1/r)}.
    check_owned(ball->center);
    const std::uint64_t n = ball->center.index();
    if (ball->radius < Ratio::reciprocal(Integer(n))) {
      out.points.push_back(ball->center);
      return out;
    }
  }
  if (bound < 1) throw DomainError("nat_reciprocal space: enumeration bound must be at least 1");
  const std::uint64_t limit = std::min<std::uint64_t>(bound, bound_);
  for (std::uint64_t k = 1; k <= limit; ++k) {
    Point p(id(), k);
    if (contains(subset, p)) out.points.push_back(std::move(p));
  }
  out.truncated = true;
  return out;
}

// ---------------------------------------------------------------------------
// BaireSpace

BaireSpace::BaireSpace(std::size_t depth_bound) : Space(SpaceKind::kBaire), depth_bound_(depth_bound) {
  if (depth_bound < 1) throw SpecError("baire space: depth_bound must be at least 1");
}

Point BaireSpace::point_of(UltraSeq seq) const { return Point(id(), std::move(seq)); }

Ratio BaireSpace::distance_at(std::size_t k) { return Ratio::reciprocal(Integer(k) + 1); }

std::optional<std::size_t> BaireSpace::cylinder_length(const Ratio& radius) {
  if (radius.is_zero()) return std::nullopt;
  if (radius >= Ratio::whole(1)) return 0;
  // least k with 1/(1+k) <= num/den, i.e. k = ceil(den/num) - 1
  Integer q = (radius.den() + radius.num() - 1) / radius.num();
  if (q > Integer(std::numeric_limits<std::uint32_t>::max())) {
    throw UnsupportedError("baire space: ball radius too small to represent");
  }
  return static_cast<std::size_t>(q) - 1;
}

Measurement BaireSpace::measure(const Point& x, const Point& y) const {
  check_owned(x);
  check_owned(y);
  SeqComparison c = compare_sequences(x.seq(), y.seq(), depth_bound_);
  if (c.first_difference) return Measurement{distance_at(*c.first_difference), c.agreed};
  if (c.certified_equal) return Measurement{Ratio(), c.agreed};
  return Measurement{std::nullopt, c.agreed};
}

std::string BaireSpace::label(const Point& p) const {
  check_owned(p);
  const UltraSeq& s = p.seq();
  std::size_t shown = 6;
  if (auto st = s.stable_tail()) shown = std::max<std::size_t>(st->from + 2, 3);
  std::string out = "(";
  for (std::size_t i = 0; i < shown; ++i) {
    out += s.term(i).str();
    out += ",";
  }
  out += "...)";
  return out;
}

bool BaireSpace::satisfies(const PredicateSubset& pred, const Point& p) const {
  if (pred.kind != Predicate::kCoord0) {
    throw UnsupportedError("baire space: only the coord0 predicate is supported");
  }
  return p.seq().term(0) == pred.value;
}

Enumeration BaireSpace::enumerate(const SubsetSpec& subset, std::size_t bound) const {
  Enumeration out;
  if (const auto* list = std::get_if<PointList>(&subset)) {
    for (const auto& p : list->points) check_owned(p);
    out.points = list->points;
    return out;
  }
  if (bound < 1) throw DomainError("baire space: enumeration bound must be at least 1");

  std::vector<Integer> prefix;
  std::optional<Point> center;
  if (const auto* ball = std::get_if<Ball>(&subset)) {
    check_owned(ball->center);
    auto k = cylinder_length(ball->radius);
    if (!k) {
      out.points.push_back(ball->center);
      return out;
    }
    prefix = ball->center.seq().terms(*k);
    center = ball->center;
  } else {
    const auto& pred = std::get<PredicateSubset>(subset);
    if (pred.kind != Predicate::kCoord0) {
      throw UnsupportedError("baire space: only the coord0 predicate is enumerable");
    }
    prefix.push_back(pred.value);
  }

  // Sample members: the center first, then prefix ++ (i) ++ (j, j, ...).
  if (center) out.points.push_back(*center);
  const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(bound))));
  for (std::size_t idx = 0; out.points.size() < bound; ++idx) {
    std::vector<Integer> terms = prefix;
    terms.emplace_back(idx % std::max<std::size_t>(side, 2));
    out.points.push_back(point_of(UltraSeq::from_prefix(std::move(terms), Integer(idx / std::max<std::size_t>(side, 2)))));
  }
  out.truncated = true;
  return out;
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_ultrametric(const FiniteSpace& space) {
  const std::size_t n = space.size();
  const auto& labels = space.labels();
  ValidationReport report;
  auto fail = [&](std::string axiom, std::vector<std::size_t> witness, std::string message) {
    report.valid = false;
    report.axiom = std::move(axiom);
    report.witness = std::move(witness);
    report.message = std::move(message);
    return report;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool zero = space.at(i, j).is_zero();
      if ((i == j) != zero) {
        return fail("identity", {i, j},
                    "d(" + labels[i] + "," + labels[j] + ") = " + space.at(i, j).to_string() +
                        (i == j ? " on the diagonal" : " between distinct points"));
      }
      if (space.at(i, j) != space.at(j, i)) {
        return fail("symmetry", {i, j},
                    "d(" + labels[i] + "," + labels[j] + ") != d(" + labels[j] + "," + labels[i] + ")");
      }
    }
  }

  // Rank-compress the matrix so the triple loop compares machine integers.
  std::set<Ratio> distinct;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) distinct.insert(space.at(i, j));
  }
  std::vector<Ratio> levels(distinct.begin(), distinct.end());
  std::vector<std::uint32_t> rank(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = std::lower_bound(levels.begin(), levels.end(), space.at(i, j));
      rank[i * n + j] = static_cast<std::uint32_t>(it - levels.begin());
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::uint32_t dxy = rank[x * n + y];
      for (std::size_t z = 0; z < n; ++z) {
        if (dxy > std::max(rank[x * n + z], rank[z * n + y])) {
          return fail("strong_triangle", {x, y, z},
                      "d(" + labels[x] + "," + labels[y] + ") = " + space.at(x, y).to_string() +
                          " > max(d(" + labels[x] + "," + labels[z] + "), d(" + labels[z] + "," +
                          labels[y] + ")) = " + ratio_max(space.at(x, z), space.at(z, y)).to_string());
        }
      }
    }
  }
  return report;
}

FiniteSpace materialize(const Space& space) {
  const std::size_t n = space.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  const auto pts = space.points();
  for (const auto& p : pts) labels.push_back(space.label(p));
  std::vector<std::vector<Ratio>> matrix(n, std::vector<Ratio>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) matrix[i][j] = space.distance(pts[i], pts[j]);
  }
  return FiniteSpace(std::move(labels), std::move(matrix));
}

std::vector<Ratio> distance_levels(const Space& space) {
  std::set<Ratio> distinct{Ratio()};
  if (const auto* padic = dynamic_cast<const PAdicSpace*>(&space)) {
    for (std::uint64_t v = 0; v < padic->precision(); ++v) {
      distinct.insert(Ratio::inverse_power(padic->prime(), v));
    }
  } else {
    const auto pts = space.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) distinct.insert(space.distance(pts[i], pts[j]));
    }
  }
  return {distinct.begin(), distinct.end()};
}

DistanceTable::DistanceTable(const Space& space) : n_(space.size()), levels_(distance_levels(space)) {
  const auto pts = space.points();
  rank_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Ratio d = space.distance(pts[i], pts[j]);
      auto it = std::lower_bound(levels_.begin(), levels_.end(), d);
      const auto r = static_cast<std::uint32_t>(it - levels_.begin());
      rank_[i * n_ + j] = r;
      rank_[j * n_ + i] = r;
    }
  }
}

}  // namespace ultraprox
