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

#include <cstdint>
#include <variant>
#include <vector>

#include "ultraprox/space.hpp"

namespace ultraprox {

/// Total point-to-point table on a finite space: x -> image[x].
struct TableMap {
  std::vector<std::uint64_t> image;
  bool operator==(const TableMap&) const = default;
};

/// x -> x + shift (mod p^m) on a residue ring.
struct PAdicTranslation {
  std::uint64_t shift = 0;
  bool operator==(const PAdicTranslation&) const = default;
};

/// Partial products on sequences: (Tx)(n) = x(0) * ... * x(n), except that
/// the first two coordinates are copied when head_fixed is set.
struct PartialProductMap {
  bool head_fixed = true;
  bool operator==(const PartialProductMap&) const = default;

  std::size_t fixed_head() const noexcept { return head_fixed ? 2 : 0; }
};

struct MapSpec;

/// maps[0] is applied first.
struct ComposeMap {
  std::vector<MapSpec> maps;
  bool operator==(const ComposeMap&) const;
};

/// A self-map of a space.
struct MapSpec {
  std::variant<TableMap, PAdicTranslation, PartialProductMap, ComposeMap> kind;
  bool operator==(const MapSpec&) const = default;
};

inline bool ComposeMap::operator==(const ComposeMap& other) const { return maps == other.maps; }

/// Throws SpecError when the map cannot act on the space (wrong kind, table
/// of the wrong size or with out-of-range images).
void check_compatible(const Space& space, const MapSpec& map);

/// T x. Throws CrossSpaceError when x belongs to another space.
Point apply(const Space& space, const MapSpec& map, const Point& x);

/// True when coordinate n of Tx depends only on coordinates 0..n of x.
/// Such maps are nonexpansive on the sequence space.
bool is_causal(const MapSpec& map);

/// The table of a map on a finite space: image[i] = index of T(point i).
std::vector<std::uint64_t> tabulate(const Space& space, const MapSpec& map);

}  // namespace ultraprox
