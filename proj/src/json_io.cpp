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

#include "ultraprox/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "ultraprox/detail/overloaded.hpp"
#include "ultraprox/errors.hpp"

namespace ultraprox {

namespace {

const Json& require(const Json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) {
    throw SpecError(std::string(context) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

std::string require_string(const Json& j, const char* context) {
  if (!j.is_string()) throw SpecError(std::string(context) + ": expected a string, got " + j.dump());
  return j.get<std::string>();
}

Integer integer_from_json(const Json& j, const char* context) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0) throw SpecError(std::string(context) + ": negative integer");
    return Integer(v);
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const SpecError& e) {
      throw SpecError(std::string(context) + ": " + e.what());
    }
  }
  throw SpecError(std::string(context) + ": expected a non-negative integer, got " + j.dump());
}

std::uint64_t u64_from_json(const Json& j, const char* context) {
  Integer v = integer_from_json(j, context);
  if (v > Integer(std::numeric_limits<std::uint64_t>::max())) {
    throw SpecError(std::string(context) + ": integer too large");
  }
  return static_cast<std::uint64_t>(v);
}

Json integer_to_json(const Integer& v) {
  if (v <= Integer(std::numeric_limits<std::uint64_t>::max())) return Json(static_cast<std::uint64_t>(v));
  return Json(v.str());
}

std::shared_ptr<Space> finite_from_json(const Json& j) {
  const Json& pts = require(j, "points", "finite space");
  if (!pts.is_array()) throw SpecError("finite space: 'points' must be an array");
  std::vector<std::string> labels;
  for (const auto& p : pts) labels.push_back(require_string(p, "finite space point"));
  const std::size_t n = labels.size();
  auto index = [&](const std::string& l) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i) {
      if (labels[i] == l) return i;
    }
    throw SpecError("finite space: unknown point '" + l + "' in distances");
  };

  std::vector<std::vector<std::optional<Ratio>>> given(n, std::vector<std::optional<Ratio>>(n));
  const Json& dists = require(j, "distances", "finite space");
  if (!dists.is_array()) throw SpecError("finite space: 'distances' must be an array");
  for (const auto& entry : dists) {
    if (!entry.is_array() || entry.size() != 3) {
      throw SpecError("finite space: distance entries must be [x, y, \"p/q\"], got " + entry.dump());
    }
    const std::size_t a = index(require_string(entry[0], "finite space distance"));
    const std::size_t b = index(require_string(entry[1], "finite space distance"));
    Ratio r = ratio_from_json(entry[2]);
    if (given[a][b] && *given[a][b] != r) {
      throw SpecError("finite space: conflicting distances for (" + labels[a] + "," + labels[b] + ")");
    }
    given[a][b] = std::move(r);
  }

  std::vector<std::vector<Ratio>> matrix(n, std::vector<Ratio>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (given[a][b]) {
        matrix[a][b] = *given[a][b];
      } else if (given[b][a]) {
        matrix[a][b] = *given[b][a];
      } else if (a != b) {
        throw SpecError("finite space: missing distance for pair (" + labels[a] + "," + labels[b] + ")");
      }
    }
  }
  return std::make_shared<FiniteSpace>(std::move(labels), std::move(matrix));
}

}  // namespace

Json ratio_to_json(const Ratio& r) { return r.to_string(); }

Ratio ratio_from_json(const Json& j) {
  if (j.is_string()) return Ratio::parse(j.get<std::string>());
  return Ratio::whole(integer_from_json(j, "ratio"));
}

std::shared_ptr<Space> space_from_json(const Json& j) {
  const std::string type = require_string(require(j, "type", "space"), "space type");
  if (type == "finite") return finite_from_json(j);
  if (type == "padic") {
    return std::make_shared<PAdicSpace>(u64_from_json(require(j, "p", "padic space"), "padic p"),
                                        u64_from_json(require(j, "m", "padic space"), "padic m"));
  }
  if (type == "baire") {
    std::size_t depth = 64;
    if (j.contains("depth_bound")) depth = u64_from_json(j.at("depth_bound"), "baire depth_bound");
    return std::make_shared<BaireSpace>(depth);
  }
  if (type == "nat_reciprocal") {
    std::uint64_t bound = 10000;
    if (j.contains("bound")) bound = u64_from_json(j.at("bound"), "nat_reciprocal bound");
    return std::make_shared<NatReciprocalSpace>(bound);
  }
  throw SpecError("space: unknown type '" + type + "'");
}

Json space_to_json(const Space& space) {
  if (const auto* f = dynamic_cast<const FiniteSpace*>(&space)) {
    Json dists = Json::array();
    const auto& labels = f->labels();
    for (std::size_t a = 0; a < f->size(); ++a) {
      for (std::size_t b = a; b < f->size(); ++b) {
        if (a == b) {
          if (!f->at(a, a).is_zero()) dists.push_back({labels[a], labels[a], f->at(a, a).to_string()});
          continue;
        }
        dists.push_back({labels[a], labels[b], f->at(a, b).to_string()});
        if (f->at(b, a) != f->at(a, b)) dists.push_back({labels[b], labels[a], f->at(b, a).to_string()});
      }
    }
    return {{"type", "finite"}, {"points", labels}, {"distances", std::move(dists)}};
  }
  if (const auto* p = dynamic_cast<const PAdicSpace*>(&space)) {
    return {{"type", "padic"}, {"p", p->prime()}, {"m", p->precision()}};
  }
  if (const auto* b = dynamic_cast<const BaireSpace*>(&space)) {
    return {{"type", "baire"}, {"depth_bound", b->depth_bound()}};
  }
  const auto& n = dynamic_cast<const NatReciprocalSpace&>(space);
  return {{"type", "nat_reciprocal"}, {"bound", n.bound()}};
}

Point point_from_json(const Space& space, const Json& j) {
  switch (space.kind()) {
    case SpaceKind::kFinite: {
      const auto& f = static_cast<const FiniteSpace&>(space);
      const std::string label = require_string(j, "finite point");
      auto i = f.index_of(label);
      if (!i) throw SpecError("point: unknown label '" + label + "'");
      return f.point(*i);
    }
    case SpaceKind::kPAdic: {
      const std::uint64_t r = u64_from_json(j, "padic point");
      if (r >= space.size()) throw SpecError("point: residue out of range");
      return space.point(r);
    }
    case SpaceKind::kNatReciprocal: {
      const std::uint64_t n = u64_from_json(j, "nat_reciprocal point");
      if (n < 1) throw SpecError("point: nat_reciprocal points start at 1");
      return static_cast<const NatReciprocalSpace&>(space).point_of(n);
    }
    case SpaceKind::kBaire: {
      const auto& b = static_cast<const BaireSpace&>(space);
      if (!j.is_object()) throw SpecError("baire point: expected {\"prefix\":[...],\"tail\":n}");
      std::vector<Integer> prefix;
      if (j.contains("prefix")) {
        if (!j.at("prefix").is_array()) throw SpecError("baire point: 'prefix' must be an array");
        for (const auto& t : j.at("prefix")) prefix.push_back(integer_from_json(t, "baire prefix term"));
      }
      Integer tail = integer_from_json(require(j, "tail", "baire point"), "baire tail");
      UltraSeq seq = UltraSeq::from_prefix(std::move(prefix), std::move(tail));
      if (j.contains("applied")) {
        for (const auto& m : j.at("applied")) {
          MapSpec spec = map_from_json(space, m);
          if (!std::holds_alternative<PartialProductMap>(spec.kind)) {
            throw SpecError("baire point: 'applied' entries must be baire_partial_product maps");
          }
          seq = seq.apply_partial_product(std::get<PartialProductMap>(spec.kind).fixed_head());
        }
      }
      return b.point_of(std::move(seq));
    }
  }
  throw SpecError("point: unsupported space");
}

Json point_to_json(const Space& space, const Point& p) {
  space.check_owned(p);
  switch (space.kind()) {
    case SpaceKind::kFinite:
      return space.label(p);
    case SpaceKind::kPAdic:
    case SpaceKind::kNatReciprocal:
      return p.index();
    case SpaceKind::kBaire: {
      std::vector<std::size_t> heads;
      const UltraSeq* s = &p.seq();
      while (!s->is_base()) {
        heads.push_back(s->applied_fixed_head());
        s = &s->applied_inner();
      }
      Json prefix = Json::array();
      for (const auto& t : s->base_prefix()) prefix.push_back(integer_to_json(t));
      Json out{{"prefix", std::move(prefix)}, {"tail", integer_to_json(s->base_tail())}};
      if (!heads.empty()) {
        Json applied = Json::array();
        for (auto it = heads.rbegin(); it != heads.rend(); ++it) {
          applied.push_back({{"type", "baire_partial_product"}, {"head_fixed", *it == 2}});
        }
        out["applied"] = std::move(applied);
      }
      return out;
    }
  }
  return nullptr;
}

SubsetSpec subset_from_json(const Space& space, const Json& j) {
  if (!j.is_object()) throw SpecError("subset: expected an object");
  if (j.contains("points")) {
    if (!j.at("points").is_array()) throw SpecError("subset: 'points' must be an array");
    PointList list;
    for (const auto& p : j.at("points")) list.points.push_back(point_from_json(space, p));
    return list;
  }
  if (j.contains("ball")) {
    const Json& b = j.at("ball");
    return Ball{point_from_json(space, require(b, "center", "ball")), ratio_from_json(require(b, "radius", "ball"))};
  }
  if (j.contains("predicate")) {
    const Json& p = j.at("predicate");
    if (p.is_string()) {
      const std::string name = p.get<std::string>();
      if (name == "even") return PredicateSubset{Predicate::kEven, 0};
      if (name == "odd") return PredicateSubset{Predicate::kOdd, 0};
      throw SpecError("subset: unknown predicate '" + name + "'");
    }
    if (p.is_object() && p.contains("coord0")) {
      return PredicateSubset{Predicate::kCoord0, integer_from_json(p.at("coord0"), "coord0 predicate")};
    }
    throw SpecError("subset: malformed predicate " + p.dump());
  }
  throw SpecError("subset: expected 'points', 'ball' or 'predicate'");
}

Json subset_to_json(const Space& space, const SubsetSpec& subset) {
  return std::visit(detail::Overloaded{
                        [&](const PointList& list) {
                          Json pts = Json::array();
                          for (const auto& p : list.points) pts.push_back(point_to_json(space, p));
                          return Json{{"points", std::move(pts)}};
                        },
                        [&](const Ball& ball) {
                          return Json{{"ball",
                                       {{"center", point_to_json(space, ball.center)},
                                        {"radius", ratio_to_json(ball.radius)}}}};
                        },
                        [&](const PredicateSubset& pred) {
                          switch (pred.kind) {
                            case Predicate::kEven:
                              return Json{{"predicate", "even"}};
                            case Predicate::kOdd:
                              return Json{{"predicate", "odd"}};
                            case Predicate::kCoord0:
                              break;
                          }
                          return Json{{"predicate", {{"coord0", integer_to_json(pred.value)}}}};
                        },
                    },
                    subset);
}

MapSpec map_from_json(const Space& space, const Json& j) {
  const std::string type = require_string(require(j, "type", "map"), "map type");
  MapSpec out;
  if (type == "table") {
    if (!space.is_finite()) throw SpecError("table map requires a finite space");
    const Json& table = require(j, "map", "table map");
    if (!table.is_object()) throw SpecError("table map: 'map' must be an object");
    std::vector<std::optional<std::uint64_t>> image(space.size());
    for (const auto& [key, value] : table.items()) {
      const Point from = point_from_json(space, Json(key));
      const Point to = point_from_json(space, value);
      image[from.index()] = to.index();
    }
    TableMap t;
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (!image[i]) throw SpecError("table map: no image for point '" + space.label(space.point(i)) + "'");
      t.image.push_back(*image[i]);
    }
    out.kind = std::move(t);
  } else if (type == "padic_translation") {
    out.kind = PAdicTranslation{u64_from_json(require(j, "t", "padic_translation"), "translation t")};
  } else if (type == "baire_partial_product") {
    bool head_fixed = true;
    if (j.contains("head_fixed")) {
      if (!j.at("head_fixed").is_boolean()) throw SpecError("baire_partial_product: head_fixed must be boolean");
      head_fixed = j.at("head_fixed").get<bool>();
    }
    out.kind = PartialProductMap{head_fixed};
  } else if (type == "compose") {
    const Json& maps = require(j, "maps", "compose map");
    if (!maps.is_array()) throw SpecError("compose map: 'maps' must be an array");
    ComposeMap c;
    for (const auto& m : maps) c.maps.push_back(map_from_json(space, m));
    out.kind = std::move(c);
  } else {
    throw SpecError("map: unknown type '" + type + "'");
  }
  check_compatible(space, out);
  return out;
}

Json map_to_json(const Space& space, const MapSpec& map) {
  return std::visit(detail::Overloaded{
                        [&](const TableMap& t) {
                          Json table = Json::object();
                          for (std::size_t i = 0; i < t.image.size(); ++i) {
                            table[space.label(space.point(i))] = point_to_json(space, space.point(t.image[i]));
                          }
                          return Json{{"type", "table"}, {"map", std::move(table)}};
                        },
                        [&](const PAdicTranslation& t) {
                          return Json{{"type", "padic_translation"}, {"t", t.shift}};
                        },
                        [&](const PartialProductMap& pp) {
                          return Json{{"type", "baire_partial_product"}, {"head_fixed", pp.head_fixed}};
                        },
                        [&](const ComposeMap& c) {
                          Json maps = Json::array();
                          for (const auto& m : c.maps) maps.push_back(map_to_json(space, m));
                          return Json{{"type", "compose"}, {"maps", std::move(maps)}};
                        },
                    },
                    map.kind);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw SpecError(path + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace ultraprox
