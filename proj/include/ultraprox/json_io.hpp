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

// JSON encodings of spaces, points, subsets and maps.
//
//   space:  {"type":"finite","points":[...],"distances":[["a","b","1/2"],...]}
//           {"type":"padic","p":3,"m":5}
//           {"type":"baire","depth_bound":64}
//           {"type":"nat_reciprocal","bound":10000}
//   point:  label string (finite), integer (padic, nat_reciprocal),
//           {"prefix":[...],"tail":n,"applied":[map,...]} (baire)
//   subset: {"points":[...]} | {"ball":{"center":pt,"radius":"1/2"}}
//           | {"predicate":"even"|"odd"|{"coord0":n}}
//   map:    {"type":"table","map":{"a":"b",...}}
//           {"type":"padic_translation","t":9}
//           {"type":"baire_partial_product","head_fixed":true}
//           {"type":"compose","maps":[...]}          (maps[0] applied first)
//
// Ratios are written as "p/q" strings; large integers may be given as
// decimal strings.

#pragma once

#include <memory>
#include <string>

#include "json.hpp"
#include "ultraprox/map.hpp"
#include "ultraprox/space.hpp"

namespace ultraprox {

using Json = nlohmann::json;

std::shared_ptr<Space> space_from_json(const Json& j);
Json space_to_json(const Space& space);

Point point_from_json(const Space& space, const Json& j);
Json point_to_json(const Space& space, const Point& p);

SubsetSpec subset_from_json(const Space& space, const Json& j);
Json subset_to_json(const Space& space, const SubsetSpec& subset);

MapSpec map_from_json(const Space& space, const Json& j);
Json map_to_json(const Space& space, const MapSpec& map);

Json ratio_to_json(const Ratio& r);
Ratio ratio_from_json(const Json& j);

/// Reads and parses a JSON file; parse failures become SpecError carrying
/// the file name and byte offset.
Json read_json_file(const std::string& path);

}  // namespace ultraprox
