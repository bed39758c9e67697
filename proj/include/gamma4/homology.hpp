// Copyright 2026 The gamma4 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Homology of finitely generated free graded chain complexes over F_2[U].
//
// deg U = -2 and every matrix entry of a homogeneous differential is a single
// monomial U^e whose exponent is fixed by the gradings,
//     e(y <- x) = (gr(y) - gr(x) + 1) / 2,
// so a complex is stored as a 0/1 incidence structure plus gradings.
//
// Reduction: repeatedly pick an entry with globally minimal exponent L.  All
// other entries in its row and column are divisible by U^L, so the pair
// (x, y) with dx = U^L y splits off as a direct summand after the rank-one
// update  D[c][b] += D[c][x] D[y][b] / U^L.  L = 0 pairs are acyclic; L > 0
// pairs contribute torsion F_2[U]/U^L generated in degree gr(y).  What is
// left when no entry remains is free homology.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gamma4/errors.hpp"

namespace gamma4 {

struct GradedFreeComplex {
  std::vector<std::int64_t> gradings;
  /// targets[x] lists every y with a nonzero entry U^e in dx.
  std::vector<std::vector<int>> targets;
};

struct TorsionSummand {
  std::int64_t order;    // F_2[U]/U^order
  std::int64_t grading;  // grading of the generator
  friend bool operator==(const TorsionSummand&, const TorsionSummand&) = default;
};

struct HomologySummary {
  std::vector<std::int64_t> free_gradings;  // one entry per F_2[U] summand
  std::vector<TorsionSummand> torsion;

  std::size_t free_rank() const noexcept { return free_gradings.size(); }

  /// Grading of the generator of the unique free summand.
  std::int64_t tower_grading() const {
    if (free_gradings.size() != 1)
      throw NotSingleTower("homology has free rank " + std::to_string(free_gradings.size()));
    return free_gradings.front();
  }
};

namespace detail {

inline bool sorted_contains(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

/// Toggles x in a sorted vector; returns true when x was inserted.
inline bool sorted_toggle(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) {
    v.erase(it);
    return false;
  }
  v.insert(it, x);
  return true;
}

inline void sorted_erase(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

}  // namespace detail

inline HomologySummary homology_over_polynomial_ring(const GradedFreeComplex& c) {
  const int n = static_cast<int>(c.gradings.size());
  if (c.targets.size() != c.gradings.size()) throw InvalidArgument("targets/gradings size mismatch");
  const auto& gr = c.gradings;

  auto exponent = [&](int y, int x) -> std::int64_t {
    const std::int64_t twice = gr[y] - gr[x] + 1;
    if (twice < 0 || twice % 2 != 0)
      throw InvalidComplex("entry " + std::to_string(x) + " -> " + std::to_string(y) +
                           " is not a U-power of the right degree");
    return twice / 2;
  };

  std::vector<std::vector<int>> cols(static_cast<std::size_t>(n)), rows(static_cast<std::size_t>(n));
  std::map<std::int64_t, std::vector<std::pair<int, int>>> buckets;  // exponent -> (x, y)
  for (int x = 0; x < n; ++x) {
    for (int y : c.targets[static_cast<std::size_t>(x)]) {
      if (y < 0 || y >= n) throw InvalidArgument("target out of range");
      // Mod 2: repeated arrows cancel.
      detail::sorted_toggle(cols[static_cast<std::size_t>(x)], y);
      detail::sorted_toggle(rows[static_cast<std::size_t>(y)], x);
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y : cols[static_cast<std::size_t>(x)]) buckets[exponent(y, x)].emplace_back(x, y);

  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  HomologySummary out;

  auto remove_generator = [&](int g) {
    for (int t : cols[static_cast<std::size_t>(g)]) detail::sorted_erase(rows[static_cast<std::size_t>(t)], g);
    for (int s : rows[static_cast<std::size_t>(g)]) detail::sorted_erase(cols[static_cast<std::size_t>(s)], g);
    cols[static_cast<std::size_t>(g)].clear();
    rows[static_cast<std::size_t>(g)].clear();
    alive[static_cast<std::size_t>(g)] = 0;
  };

  while (!buckets.empty()) {
    auto first = buckets.begin();
    if (first->second.empty()) {
      buckets.erase(first);
      continue;
    }
    const std::int64_t level = first->first;
    auto [x, y] = first->second.back();
    first->second.pop_back();
    if (!alive[static_cast<std::size_t>(x)] || !alive[static_cast<std::size_t>(y)] ||
        !detail::sorted_contains(cols[static_cast<std::size_t>(x)], y))
      continue;

    std::vector<int> sources = rows[static_cast<std::size_t>(y)];
    std::vector<int> sinks = cols[static_cast<std::size_t>(x)];
    for (int b : sources) {
      if (b == x) continue;
      for (int t : sinks) {
        if (t == y) continue;
        if (detail::sorted_toggle(cols[static_cast<std::size_t>(b)], t)) {
          detail::sorted_toggle(rows[static_cast<std::size_t>(t)], b);
          buckets[exponent(t, b)].emplace_back(b, t);
        } else {
          detail::sorted_toggle(rows[static_cast<std::size_t>(t)], b);
        }
      }
    }
    remove_generator(x);
    remove_generator(y);
    if (level > 0) out.torsion.push_back({level, gr[y]});
  }

  for (int g = 0; g < n; ++g)
    if (alive[static_cast<std::size_t>(g)]) out.free_gradings.push_back(gr[g]);
  std::sort(out.free_gradings.begin(), out.free_gradings.end(), std::greater<>());
  std::sort(out.torsion.begin(), out.torsion.end(), [](const TorsionSummand& a, const TorsionSummand& b) {
    return a.grading != b.grading ? a.grading > b.grading : a.order < b.order;
  });
  return out;
}

}  // namespace gamma4
