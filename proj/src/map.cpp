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

#include "ultraprox/map.hpp"

#include "ultraprox/detail/overloaded.hpp"
#include "ultraprox/errors.hpp"

namespace ultraprox {

void check_compatible(const Space& space, const MapSpec& map) {
  std::visit(detail::Overloaded{
                 [&](const TableMap& t) {
                   if (!space.is_finite()) throw SpecError("table map requires a finite space");
                   if (t.image.size() != space.size()) throw SpecError("table map must list every point");
                   for (auto v : t.image) {
                     if (v >= space.size()) throw SpecError("table map image out of range");
                   }
                 },
                 [&](const PAdicTranslation&) {
                   if (space.kind() != SpaceKind::kPAdic) {
                     throw SpecError("padic_translation requires a padic space");
                   }
                 },
                 [&](const PartialProductMap&) {
                   if (space.kind() != SpaceKind::kBaire) {
                     throw SpecError("baire_partial_product requires a baire space");
                   }
                 },
                 [&](const ComposeMap& c) {
                   for (const auto& m : c.maps) check_compatible(space, m);
                 },
             },
             map.kind);
}

Point apply(const Space& space, const MapSpec& map, const Point& x) {
  space.check_owned(x);
  return std::visit(
      detail::Overloaded{
          [&](const TableMap& t) {
            if (t.image.size() != space.size()) throw SpecError("table map size differs from space size");
            return space.point(t.image.at(x.index()));
          },
          [&](const PAdicTranslation& t) {
            const auto* padic = dynamic_cast<const PAdicSpace*>(&space);
            if (!padic) throw SpecError("padic_translation requires a padic space");
            const std::uint64_t n = padic->modulus();
            return space.point((x.index() + t.shift % n) % n);
          },
          [&](const PartialProductMap& pp) {
            const auto* baire = dynamic_cast<const BaireSpace*>(&space);
            if (!baire) throw SpecError("baire_partial_product requires a baire space");
            return baire->point_of(x.seq().apply_partial_product(pp.fixed_head()));
          },
          [&](const ComposeMap& c) {
            Point y = x;
            for (const auto& m : c.maps) y = apply(space, m, y);
            return y;
          },
      },
      map.kind);
}

bool is_causal(const MapSpec& map) {
  return std::visit(detail::Overloaded{
                        [](const TableMap&) { return false; },
                        [](const PAdicTranslation&) { return false; },
                        [](const PartialProductMap&) { return true; },
                        [](const ComposeMap& c) {
                          for (const auto& m : c.maps) {
                            if (!is_causal(m)) return false;
                          }
                          return true;
                        },
                    },
                    map.kind);
}

std::vector<std::uint64_t> tabulate(const Space& space, const MapSpec& map) {
  const std::size_t n = space.size();
  std::vector<std::uint64_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = apply(space, map, space.point(i)).index();
  return image;
}

}  // namespace ultraprox
