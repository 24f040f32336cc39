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
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ultraprox/ratio.hpp"
#include "ultraprox/ultra_seq.hpp"

namespace ultraprox {

/// Handle to a point of a particular space. Finite spaces and residue rings
/// use an index; the Baire space uses a lazily evaluated sequence; the
/// reciprocal space on positive integers uses the integer itself.
class Point {
 public:
  Point(std::uint64_t owner, std::uint64_t index) : owner_(owner), rep_(index) {}
  Point(std::uint64_t owner, UltraSeq seq) : owner_(owner), rep_(std::move(seq)) {}

  std::uint64_t owner() const noexcept { return owner_; }
  bool has_index() const noexcept { return std::holds_alternative<std::uint64_t>(rep_); }
  std::uint64_t index() const;
  const UltraSeq& seq() const;

 private:
  std::uint64_t owner_;
  std::variant<std::uint64_t, UltraSeq> rep_;
};

/// Closed ball {y : d(center, y) <= radius}.
struct Ball {
  Point center;
  Ratio radius;
};

enum class Predicate { kEven, kOdd, kCoord0 };

struct PredicateSubset {
  Predicate kind;
  Integer value;  // coordinate value for kCoord0
};

struct PointList {
  std::vector<Point> points;
};

/// Description of a subset A of a space.
using SubsetSpec = std::variant<PointList, Ball, PredicateSubset>;

/// Points produced from a subset description. `truncated` is set when the
/// subset is infinite and only part of it was listed.
struct Enumeration {
  std::vector<Point> points;
  bool truncated = false;
};

/// Result of comparing two points. `value` is absent when the points could
/// not be told apart within the comparison depth and no certificate of
/// equality exists.
struct Measurement {
  std::optional<Ratio> value;
  std::size_t agreed_depth = 0;

  bool exact() const noexcept { return value.has_value(); }
};

enum class SpaceKind { kFinite, kPAdic, kBaire, kNatReciprocal };

/// Uniform interface over the concrete ultrametric spaces.
class Space {
 public:
  virtual ~Space() = default;
  Space(const Space&) = delete;
  Space& operator=(const Space&) = delete;

  SpaceKind kind() const noexcept { return kind_; }
  std::uint64_t id() const noexcept { return id_; }

  /// True for spaces with finitely many points (matrix spaces, residue rings).
  virtual bool is_finite() const = 0;
  /// Number of points. Throws UnsupportedError for infinite spaces.
  virtual std::size_t size() const;
  /// i-th point of a finite space.
  Point point(std::size_t i) const;
  std::vector<Point> points() const;

  /// Throws CrossSpaceError if `p` was not produced by this space.
  void check_owned(const Point& p) const;

  virtual Measurement measure(const Point& x, const Point& y) const = 0;
  /// Exact distance. Throws IndistinguishableError when measure() is inexact.
  Ratio distance(const Point& x, const Point& y) const;
  /// True only when x and y are certified equal.
  bool same_point(const Point& x, const Point& y) const;

  virtual std::string label(const Point& p) const = 0;

  /// Exact membership test.
  bool contains(const SubsetSpec& subset, const Point& p) const;
  /// Lists a subset. `bound` caps the listing for infinite subsets and is
  /// ignored for finite spaces. Throws UnsupportedError for predicates the
  /// space cannot decide.
  virtual Enumeration enumerate(const SubsetSpec& subset, std::size_t bound) const = 0;

 protected:
  explicit Space(SpaceKind kind);

  virtual bool satisfies(const PredicateSubset& pred, const Point& p) const;
  void check_index(std::size_t i) const;

 private:
  SpaceKind kind_;
  std::uint64_t id_;
};

/// Finite space given by labels and a full distance matrix. Construction
/// checks shape only; the metric axioms are reported by validate_ultrametric.
class FiniteSpace final : public Space {
 public:
  FiniteSpace(std::vector<std::string> labels, std::vector<std::vector<Ratio>> matrix);

  bool is_finite() const override { return true; }
  std::size_t size() const override { return labels_.size(); }
  Measurement measure(const Point& x, const Point& y) const override;
  std::string label(const Point& p) const override;
  Enumeration enumerate(const SubsetSpec& subset, std::size_t bound) const override;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  const Ratio& at(std::size_t i, std::size_t j) const { return matrix_[i * labels_.size() + j]; }

 private:
  std::vector<std::string> labels_;
  std::vector<Ratio> matrix_;
};

/// Residues modulo p^m with d(x, y) = p^-v(x - y) and d(x, x) = 0.
class PAdicSpace final : public Space {
 public:
  PAdicSpace(std::uint64_t p, std::uint64_t m);

  bool is_finite() const override { return true; }
  std::size_t size() const override { return static_cast<std::size_t>(modulus_); }
  Measurement measure(const Point& x, const Point& y) const override;
  std::string label(const Point& p) const override;
  Enumeration enumerate(const SubsetSpec& subset, std::size_t bound) const override;

  std::uint64_t prime() const noexcept { return p_; }
  std::uint64_t precision() const noexcept { return m_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// p-adic valuation of a residue; m for zero.
  std::uint64_t valuation(std::uint64_t residue) const;

 protected:
  bool satisfies(const PredicateSubset& pred, const Point& p) const override;

 private:
  std::uint64_t p_;
  std::uint64_t m_;
  std::uint64_t modulus_;
  std::vector<Ratio> levels_;  // levels_[v] = p^-v
};

/// Positive integers with d(n, m) = max(1/n, 1/m) for n != m. `bound` is the
/// largest integer listed by enumerations.
class NatReciprocalSpace final : public Space {
 public:
  explicit NatReciprocalSpace(std::uint64_t bound);

  bool is_finite() const override { return false; }
  Measurement measure(const Point& x, const Point& y) const override;
  std::string label(const Point& p) const override;
  Enumeration enumerate(const SubsetSpec& subset, std::size_t bound) const override;

  std::uint64_t bound() const noexcept { return bound_; }
  Point point_of(std::uint64_t n) const;

 protected:
  bool satisfies(const PredicateSubset& pred, const Point& p) const override;

 private:
  std::uint64_t bound_;
};

/// Sequences of non-negative integers with d(x, y) = 1/(1 + k), k the
/// length of the longest common prefix (0-based indexing).
class BaireSpace final : public Space {
 public:
  explicit BaireSpace(std::size_t depth_bound);

  bool is_finite() const override { return false; }
  Measurement measure(const Point& x, const Point& y) const override;
  std::string label(const Point& p) const override;
  Enumeration enumerate(const SubsetSpec& subset, std::size_t bound) const override;

  std::size_t depth_bound() const noexcept { return depth_bound_; }
  Point point_of(UltraSeq seq) const;

  /// Length k of the prefix shared by all members of a ball of radius r:
  /// the least k with 1/(1+k) <= r. Absent for r = 0 (singleton ball).
  static std::optional<std::size_t> cylinder_length(const Ratio& radius);
  /// Distance for a first difference at index k.
  static Ratio distance_at(std::size_t k);

 protected:
  bool satisfies(const PredicateSubset& pred, const Point& p) const override;

 private:
  std::size_t depth_bound_;
};

/// Outcome of the axiom check of a finite space.
struct ValidationReport {
  bool valid = true;
  /// "identity", "symmetry" or "strong_triangle" for the first violation.
  std::string axiom;
  /// Indices of the violating pair or triple (x, y, z), where the strong
  /// triangle violation reads d(x, y) > max(d(x, z), d(z, y)).
  std::vector<std::size_t> witness;
  std::string message;
};

ValidationReport validate_ultrametric(const FiniteSpace& space);

/// Copies a finite space (e.g. a residue ring) into a matrix space, labels
/// taken from Space::label.
FiniteSpace materialize(const Space& space);

/// Distinct distance values of a finite space, ascending, always starting with 0.
std::vector<Ratio> distance_levels(const Space& space);

/// All pairwise distances of a finite space, rank-compressed against
/// distance_levels() so comparisons are integer comparisons.
class DistanceTable {
 public:
  explicit DistanceTable(const Space& space);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t rank(std::size_t i, std::size_t j) const { return rank_[i * n_ + j]; }
  const Ratio& value(std::size_t i, std::size_t j) const { return levels_[rank(i, j)]; }
  const std::vector<Ratio>& levels() const noexcept { return levels_; }

 private:
  std::size_t n_;
  std::vector<Ratio> levels_;
  std::vector<std::uint32_t> rank_;
};

/// Convenience: the subset consisting of exactly these points.
inline SubsetSpec subset_of(std::vector<Point> points) { return PointList{std::move(points)}; }

}  // namespace ultraprox
