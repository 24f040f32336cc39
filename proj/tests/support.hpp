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

#include <memory>
#include <ostream>
#include <string>

#include "ultraprox/json_io.hpp"
#include "ultraprox/map.hpp"
#include "ultraprox/space.hpp"

namespace ultraprox {

inline void PrintTo(const Ratio& r, std::ostream* os) { *os << r.to_string(); }

}  // namespace ultraprox

namespace ultraprox::testing {

inline std::string fixture(const std::string& name) { return std::string(ULTRAPROX_FIXTURE_DIR) + "/" + name; }

inline std::shared_ptr<Space> fixture_space(const std::string& name) {
  return space_from_json(read_json_file(fixture(name)));
}

inline SubsetSpec fixture_subset(const Space& space, const std::string& name) {
  return subset_from_json(space, read_json_file(fixture(name)));
}

inline MapSpec fixture_map(const Space& space, const std::string& name) {
  return map_from_json(space, read_json_file(fixture(name)));
}

inline Point at(const Space& space, const std::string& label) {
  return point_from_json(space, Json(label));
}

inline Point seq_point(const Space& space, std::vector<Integer> prefix, Integer tail) {
  return dynamic_cast<const BaireSpace&>(space).point_of(UltraSeq::from_prefix(std::move(prefix), std::move(tail)));
}

inline Ratio R(long long n, long long d) { return Ratio(Integer(n), Integer(d)); }

}  // namespace ultraprox::testing
