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

// Bifiltered chain complexes over F_2[U] modelling CFK^-.
//
// A generator x sits at filtration level (i, j) = (0, A(x)) with Maslov
// grading M(x); U^e x sits at (-e, A(x) - e) with grading M(x) - 2e.  An
// arrow (e, y) in dx means the term U^e y and must satisfy
//     M(y) - 2e = M(x) - 1        (grading)
//     A(y) - e <= A(x)            (filtration)
// Every constructor checks both rules and d^2 = 0.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gamma4/errors.hpp"
#include "gamma4/homology.hpp"
#include "gamma4/knot_expr.hpp"
#include "gamma4/semigroup.hpp"
#include "gamma4/torus_knot.hpp"
#include "gamma4/vi_sequence.hpp"

namespace gamma4 {

struct CfkGenerator {
  std::int64_t maslov;
  std::int64_t alexander;
  friend bool operator==(const CfkGenerator&, const CfkGenerator&) = default;
};

struct CfkArrow {
  std::int64_t power;  // U-exponent
  int target;
  friend auto operator<=>(const CfkArrow&, const CfkArrow&) = default;
};

class BifilteredComplex {
 public:
  /// Generator ids are positions in `generators`.
  BifilteredComplex(std::vector<CfkGenerator> generators, std::vector<std::vector<CfkArrow>> differential)
      : gens_(std::move(generators)), diff_(std::move(differential)) {
    if (diff_.size() != gens_.size()) throw InvalidComplex("differential/generator count mismatch");
    for (auto& arrows : diff_) reduce_mod2(arrows);
    validate();
  }

  /// One generator in bigrading (0, 0), zero differential.
  static BifilteredComplex unknot() { return BifilteredComplex({CfkGenerator{0, 0}}, {{}}); }

  std::size_t size() const noexcept { return gens_.size(); }
  const CfkGenerator& generator(std::size_t i) const { return gens_.at(i); }
  const std::vector<CfkGenerator>& generators() const noexcept { return gens_; }
  const std::vector<CfkArrow>& arrows(std::size_t i) const { return diff_.at(i); }
  const std::vector<std::vector<CfkArrow>>& differential() const noexcept { return diff_; }

  std::int64_t max_alexander() const {
    std::int64_t m = gens_.front().alexander;
    for (const auto& g : gens_) m = std::max(m, g.alexander);
    return m;
  }

  friend bool operator==(const BifilteredComplex&, const BifilteredComplex&) = default;

 private:
  static void reduce_mod2(std::vector<CfkArrow>& arrows) {
    std::sort(arrows.begin(), arrows.end());
    std::vector<CfkArrow> kept;
    for (std::size_t i = 0; i < arrows.size();) {
      std::size_t j = i;
      while (j < arrows.size() && arrows[j] == arrows[i]) ++j;
      if ((j - i) % 2 == 1) kept.push_back(arrows[i]);
      i = j;
    }
    arrows = std::move(kept);
  }

  void validate() const {
    const auto n = static_cast<int>(gens_.size());
    if (n == 0) throw InvalidComplex("complex has no generators");
    for (int x = 0; x < n; ++x) {
      const auto& gx = gens_[static_cast<std::size_t>(x)];
      for (const auto& [e, y] : diff_[static_cast<std::size_t>(x)]) {
        if (y < 0 || y >= n) throw InvalidComplex("arrow target out of range");
        const auto& gy = gens_[static_cast<std::size_t>(y)];
        if (e < 0) throw InvalidComplex("negative U-power");
        if (gy.maslov - 2 * e != gx.maslov - 1)
          throw InvalidComplex("grading rule fails on arrow " + std::to_string(x) + " -> " + std::to_string(y));
        if (gy.alexander - e > gx.alexander)
          throw InvalidComplex("filtration rule fails on arrow " + std::to_string(x) + " -> " + std::to_string(y));
      }
    }
    // d^2 = 0: exponents are determined by gradings, so parity counts suffice.
    std::vector<int> parity(static_cast<std::size_t>(n), 0);
    std::vector<int> touched;
    for (int x = 0; x < n; ++x) {
      touched.clear();
      for (const auto& a : diff_[static_cast<std::size_t>(x)])
        for (const auto& b : diff_[static_cast<std::size_t>(a.target)]) {
          if (parity[static_cast<std::size_t>(b.target)] == 0) touched.push_back(b.target);
          parity[static_cast<std::size_t>(b.target)] ^= 1;
          if (parity[static_cast<std::size_t>(b.target)] == 0) parity[static_cast<std::size_t>(b.target)] = 2;
        }
      for (int z : touched) {
        if (parity[static_cast<std::size_t>(z)] == 1)
          throw InvalidComplex("d^2 != 0 at generator " + std::to_string(x));
        parity[static_cast<std::size_t>(z)] = 0;
      }
    }
  }

  std::vector<CfkGenerator> gens_;
  std::vector<std::vector<CfkArrow>> diff_;
};

/// Staircase with Alexander gradings alpha_0 > alpha_1 > ... > alpha_2r,
/// alpha_i = -alpha_{2r-i}:  d y_{2i} = U^{alpha_{2i-2} - alpha_{2i-1}} y_{2i-1} + y_{2i+1}
/// (1-based), odd generators are cycles, and M(y_1) = 0.
inline BifilteredComplex staircase(const std::vector<std::int64_t>& exponents) {
  const std::size_t len = exponents.size();
  if (len % 2 == 0) throw MalformedExponents("staircase needs an odd number of exponents");
  for (std::size_t i = 0; i + 1 < len; ++i)
    if (exponents[i] <= exponents[i + 1]) throw MalformedExponents("staircase exponents must strictly decrease");
  for (std::size_t i = 0; i < len; ++i)
    if (exponents[i] != -exponents[len - 1 - i]) throw MalformedExponents("staircase exponents must be symmetric");

  std::vector<CfkGenerator> gens(len);
  std::vector<std::vector<CfkArrow>> diff(len);
  gens[0] = {0, exponents[0]};
  for (std::size_t i = 1; i < len; i += 2) {
    // 0-based: generator i has a horizontal arrow to i-1 and a vertical one to i+1.
    const std::int64_t horizontal = exponents[i - 1] - exponents[i];
    gens[i] = {gens[i - 1].maslov - 2 * horizontal + 1, exponents[i]};
    gens[i + 1] = {gens[i].maslov - 1, exponents[i + 1]};
    diff[i] = {CfkArrow{horizontal, static_cast<int>(i - 1)}, CfkArrow{0, static_cast<int>(i + 1)}};
  }
  return BifilteredComplex(std::move(gens), std::move(diff));
}

/// Staircase exponents of a formal semigroup: the support of
/// (1 - t) * sum_{s in S, s <= 2g} t^s truncated at degree 2g, shifted by -g,
/// highest first.
inline std::vector<std::int64_t> staircase_exponents(const FormalSemigroup& s) {
  const std::int64_t g = s.genus();
  std::vector<std::int64_t> out;
  for (std::int64_t j = 2 * g; j >= 0; --j) {
    const int c = (s.contains(j) ? 1 : 0) - (j >= 1 && s.contains(j - 1) ? 1 : 0);
    if (c != 0) out.push_back(j - g);
  }
  return out;
}

inline BifilteredComplex staircase(const FormalSemigroup& s) { return staircase(staircase_exponents(s)); }

inline BifilteredComplex staircase(const TorusKnot& k) { return staircase(from_generators(k.p(), k.q())); }

/// Dual complex (the mirror): x -> x*, gradings negated, arrows reversed.
inline BifilteredComplex dual(const BifilteredComplex& c) {
  std::vector<CfkGenerator> gens;
  gens.reserve(c.size());
  for (const auto& g : c.generators()) gens.push_back({-g.maslov, -g.alexander});
  std::vector<std::vector<CfkArrow>> diff(c.size());
  for (std::size_t x = 0; x < c.size(); ++x)
    for (const auto& [e, y] : c.arrows(x)) diff[static_cast<std::size_t>(y)].push_back({e, static_cast<int>(x)});
  return BifilteredComplex(std::move(gens), std::move(diff));
}

/// Tensor product; generator (i, j) has id i * |D| + j.
inline BifilteredComplex tensor(const BifilteredComplex& c, const BifilteredComplex& d) {
  const std::size_t m = d.size();
  std::vector<CfkGenerator> gens(c.size() * m);
  std::vector<std::vector<CfkArrow>> diff(c.size() * m);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t id = i * m + j;
      gens[id] = {c.generator(i).maslov + d.generator(j).maslov,
                  c.generator(i).alexander + d.generator(j).alexander};
      auto& out = diff[id];
      for (const auto& [e, y] : c.arrows(i)) out.push_back({e, static_cast<int>(static_cast<std::size_t>(y) * m + j)});
      for (const auto& [e, y] : d.arrows(j)) out.push_back({e, static_cast<int>(i * m + static_cast<std::size_t>(y))});
    }
  return BifilteredComplex(std::move(gens), std::move(diff));
}

/// The free F_2[U]-complex A_s^- = C{i <= 0, j <= s}, generated by
/// U^{max(0, A(x) - s)} x.
inline GradedFreeComplex sublevel_complex(const BifilteredComplex& c, std::int64_t s) {
  GradedFreeComplex out;
  out.gradings.reserve(c.size());
  out.targets.resize(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    const auto& g = c.generator(x);
    out.gradings.push_back(g.maslov - 2 * std::max<std::int64_t>(0, g.alexander - s));
    for (const auto& a : c.arrows(x)) out.targets[x].push_back(a.target);
  }
  return out;
}

/// V_s = -1/2 (grading of the tower generator of H_*(A_s^-)).
inline std::int64_t v_invariant(const BifilteredComplex& c, std::int64_t s) {
  if (s < 0) throw InvalidArgument("v_invariant needs s >= 0");
  const std::int64_t top = homology_over_polynomial_ring(sublevel_complex(c, s)).tower_grading();
  if (top > 0 || top % 2 != 0)
    throw InvalidComplex("tower generator in grading " + std::to_string(top) + " is not a knot complex tower");
  return -top / 2;
}

/// V_0, V_1, ... until the first zero.
inline ViSequence vi_sequence(const BifilteredComplex& c) {
  std::vector<std::int64_t> v;
  const std::int64_t last = std::max<std::int64_t>(0, c.max_alexander());
  for (std::int64_t s = 0;; ++s) {
    v.push_back(v_invariant(c, s));
    if (v.back() == 0) break;
    if (s >= last) throw InvalidComplex("V_s does not vanish at the top Alexander grading");
  }
  return ViSequence::from_values(std::move(v));
}

/// Full tensor product of the staircases of every summand (duals for
/// negative coefficients).  Throws Unsupported past `max_generators`.
inline BifilteredComplex knot_complex(const KnotExpression& e, std::size_t max_generators = 50000) {
  std::size_t total = 1;
  for (const auto& t : e.terms()) {
    const auto copies = static_cast<std::size_t>(t.coefficient < 0 ? -t.coefficient : t.coefficient);
    const std::size_t stairs = staircase_exponents(from_generators(t.knot.p(), t.knot.q())).size();
    for (std::size_t i = 0; i < copies; ++i) {
      total *= stairs;
      if (total > max_generators)
        throw Unsupported("full knot complex of " + render(e) + " exceeds " + std::to_string(max_generators) +
                          " generators");
    }
  }
  BifilteredComplex out = BifilteredComplex::unknot();
  bool first = true;
  for (const auto& t : e.terms()) {
    BifilteredComplex piece = staircase(t.knot);
    if (t.coefficient < 0) piece = dual(piece);
    const std::int64_t copies = t.coefficient < 0 ? -t.coefficient : t.coefficient;
    for (std::int64_t i = 0; i < copies; ++i) {
      out = first ? piece : tensor(out, piece);
      first = false;
    }
  }
  return out;
}

/// The full complex with every c T(p,p+1) block replaced by the staircase of
/// T(p,pc+1).  The block is that staircase plus an acyclic summand, which
/// stays acyclic under tensor products, so every V_s is unchanged.
inline BifilteredComplex reduced_complex(const KnotExpression& e, std::size_t max_generators = 50000) {
  std::vector<std::pair<BifilteredComplex, std::int64_t>> blocks;  // (piece, copies)
  std::size_t total = 1;
  for (const auto& t : e.terms()) {
    const std::int64_t copies = t.coefficient < 0 ? -t.coefficient : t.coefficient;
    const bool adjacent = t.knot.q() == t.knot.p() + 1;
    BifilteredComplex piece = staircase(adjacent ? representative(copies, t.knot.p()) : t.knot);
    if (t.coefficient < 0) piece = dual(piece);
    const std::int64_t reps = adjacent ? 1 : copies;
    for (std::int64_t i = 0; i < reps; ++i) {
      total *= piece.size();
      if (total > max_generators)
        throw Unsupported("reduced knot complex of " + render(e) + " exceeds " + std::to_string(max_generators) +
                          " generators");
    }
    blocks.emplace_back(std::move(piece), reps);
  }
  BifilteredComplex out = BifilteredComplex::unknot();
  bool first = true;
  for (const auto& [piece, reps] : blocks)
    for (std::int64_t i = 0; i < reps; ++i) {
      out = first ? piece : tensor(out, piece);
      first = false;
    }
  return out;
}

/// Debug dump: "id M A" per generator, then "src -> U^e tgt" per arrow, in
/// id order.
inline std::string dump(const BifilteredComplex& c) {
  std::ostringstream os;
  for (std::size_t x = 0; x < c.size(); ++x)
    os << x << ' ' << c.generator(x).maslov << ' ' << c.generator(x).alexander << '\n';
  for (std::size_t x = 0; x < c.size(); ++x)
    for (const auto& [e, y] : c.arrows(x)) os << x << " -> U^" << e << ' ' << y << '\n';
  return os.str();
}

}  // namespace gamma4
