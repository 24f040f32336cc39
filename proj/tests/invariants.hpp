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

// Exhaustive invariant checks on finite spaces, shared by the property
// tests and the acceptance suite. Each check returns an empty string on
// success and a description of the first violation otherwise.

#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ultraprox/dynamics.hpp"
#include "ultraprox/harness.hpp"
#include "ultraprox/map.hpp"
#include "ultraprox/proximity.hpp"
#include "ultraprox/space.hpp"

namespace ultraprox::invariants {

using Members = std::vector<std::size_t>;

/// Random dendrogram space with up to 12 points and 1-7 levels.
inline std::shared_ptr<FiniteSpace> random_space(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<Ratio> pool{Ratio::whole(1), Ratio(1, 2), Ratio(1, 3), Ratio(1, 4),
                                Ratio(1, 6),     Ratio(1, 8), Ratio(1, 9)};
  std::vector<Ratio> levels;
  for (const auto& r : pool) {
    if (levels.empty() || rng() % 2) levels.push_back(r);
  }
  DendrogramGenConfig cfg;
  cfg.n = 1 + rng() % 12;
  cfg.levels = levels;
  cfg.seed = rng();
  return generate_space(cfg);
}

/// All distinct closed balls B(x, r), r ranging over the distance levels.
inline std::vector<std::pair<Ball, Members>> all_balls(const Space& space) {
  const DistanceTable t(space);
  std::set<Members> seen;
  std::vector<std::pair<Ball, Members>> out;
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::uint32_t r = 0; r < t.levels().size(); ++r) {
      Members m;
      for (std::size_t y = 0; y < t.size(); ++y) {
        if (t.rank(x, y) <= r) m.push_back(y);
      }
      if (seen.insert(m).second) out.push_back({Ball{space.point(x), t.levels()[r]}, m});
    }
  }
  return out;
}

inline std::string check_centrality(const Space& space) {
  for (const auto& [ball, members] : all_balls(space)) {
    const CentralityReport c = is_central(space, ball);
    if (!c.central) return "ball around " + space.label(ball.center) + " not central at " + space.label(*c.witness);
  }
  return {};
}

inline std::string check_radius_is_diameter(const Space& space) {
  for (const auto& [ball, members] : all_balls(space)) {
    std::vector<Point> pts;
    for (auto i : members) pts.push_back(space.point(i));
    if (actual_radius(space, ball) != diameter(space, pts)) {
      return "ball around " + space.label(ball.center) + ": actual radius differs from diameter";
    }
  }
  return {};
}

inline std::string check_isosceles(const Space& space) {
  const DistanceTable t(space);
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        std::uint32_t d[3] = {t.rank(x, y), t.rank(y, z), t.rank(x, z)};
        std::sort(d, d + 3);
        if (d[1] != d[2]) {
          return "triangle " + space.label(space.point(x)) + "," + space.label(space.point(y)) + "," +
                 space.label(space.point(z)) + " is not isosceles with a short base";
        }
      }
    }
  }
  return {};
}

inline std::string check_disjoint_cross_distance(const Space& space) {
  const auto balls = all_balls(space);
  const DistanceTable t(space);
  for (std::size_t i = 0; i < balls.size(); ++i) {
    for (std::size_t j = i + 1; j < balls.size(); ++j) {
      const Members& p = balls[i].second;
      const Members& q = balls[j].second;
      const bool disjoint =
          std::none_of(p.begin(), p.end(), [&](auto x) { return std::find(q.begin(), q.end(), x) != q.end(); });
      if (!disjoint) continue;
      const auto r = t.rank(p[0], q[0]);
      for (auto x : p) {
        for (auto y : q) {
          if (t.rank(x, y) != r) return "disjoint balls with two cross distances";
        }
      }
    }
  }
  return {};
}

/// T nonexpansive and d(x, Tx) <= r imply T(B(x, r)) inside B(x, r).
inline std::string check_nonexpansive_ball_invariance(const Space& space, const MapSpec& map) {
  const DistanceTable t(space);
  const auto image = tabulate(space, map);
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::uint32_t r = t.rank(x, image[x]); r < t.levels().size(); ++r) {
      for (std::size_t y = 0; y < t.size(); ++y) {
        if (t.rank(x, y) <= r && t.rank(x, image[y]) > r) {
          return "T moves " + space.label(space.point(y)) + " out of B(" + space.label(space.point(x)) + ", " +
                 t.levels()[r].to_string() + ")";
        }
      }
    }
  }
  return {};
}

/// Strictly contractive T reaches its fixed point within |levels| steps.
inline std::string check_strict_orbit_termination(const Space& space, const MapSpec& map) {
  const std::size_t levels = distance_levels(space).size();
  for (const auto& x : space.points()) {
    const OrbitTrace tr = orbit(space, map, x, levels);
    if (tr.end != OrbitEnd::kFixedPoint) {
      return "orbit of " + space.label(x) + " did not reach a fixed point in " + std::to_string(levels) + " steps";
    }
  }
  return {};
}

inline bool is_nonexpansive(const DistanceTable& t, const std::vector<std::uint64_t>& img) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (t.rank(img[x], img[y]) > t.rank(x, y)) return false;
    }
  }
  return true;
}

inline bool is_strict(const DistanceTable& t, const std::vector<std::uint64_t>& img) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (x != y && t.rank(img[x], img[y]) >= t.rank(x, y)) return false;
    }
  }
  return true;
}

/// Random map: each point keeps a random image if the partial table stays
/// within the constraint, otherwise it falls back to a point that does.
/// Strict mode falls back to a constant map when stuck.
inline MapSpec random_map(const Space& space, std::mt19937_64& rng, bool strict) {
  const DistanceTable t(space);
  const std::size_t n = t.size();
  std::vector<std::uint64_t> img(n, 0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int attempt = 0; attempt < 20; ++attempt) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      bool placed = false;
      for (auto c : order) {
        bool fits = true;
        for (std::size_t y = 0; y < x && fits; ++y) {
          const auto before = t.rank(x, y);
          const auto after = t.rank(c, img[y]);
          fits = strict ? after < before : after <= before;
        }
        if (fits) {
          img[x] = c;
          placed = true;
          break;
        }
      }
      ok = placed;
    }
    if (ok && (strict ? is_strict(t, img) : is_nonexpansive(t, img))) return MapSpec{TableMap{img}};
  }
  std::fill(img.begin(), img.end(), pick(rng));
  return MapSpec{TableMap{img}};
}

}  // namespace ultraprox::invariants
