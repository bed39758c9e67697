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

// Mechanical check that staircase(T(2,2j+1)) (x) staircase(T(2,3)) splits as
// a copy of staircase(T(2,2j+3)) plus acyclic rank-4 blocks, for j = 1..n-1.
// Chained over j this exhibits n T(2,3) as staircase(T(2,2n+1)) plus an
// acyclic summand.
//
// Over F_2[U, U^-1] every basis element used here is homogeneous, so a
// homogeneous element is determined by its support: the U-power on each
// generator is fixed by the Maslov grading.  Spans, closure and rank are
// therefore F_2 linear algebra on supports, restricted to a Maslov parity
// class.  A square family of homogeneous elements is a basis over the Laurent
// ring iff its support matrix is invertible over F_2.

#pragma once

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamma4/cfk.hpp"
#include "gamma4/errors.hpp"
#include "gamma4/homology.hpp"

namespace gamma4 {

using Support = boost::dynamic_bitset<>;

/// Which fourth generator to use for the blocks W_2i.
enum class BlockBasis {
  /// x_{2i-1} c + x_{2i+1} a; closed under d and complementary to V.
  corrected,
  /// x_{2i+1} c as printed; lies in V and leaves x_{2i+1} a uncovered.
  literal,
};

struct Staircase2nStep {
  std::int64_t j = 0;  // input is staircase(T(2,2j+1)) (x) trefoil
  bool homogeneous = false;
  bool v_closed = false;
  bool w_closed = false;
  bool direct_sum = false;
  bool w_acyclic = false;
  bool isomorphism = false;
  std::string failure;  // first failed check, empty on success

  bool pass() const noexcept {
    return homogeneous && v_closed && w_closed && direct_sum && w_acyclic && isomorphism;
  }
};

struct Staircase2nReport {
  std::int64_t n = 0;
  std::vector<Staircase2nStep> steps;
  /// V-sequence of the actual n-fold tensor power equals that of staircase(T(2,2n+1)).
  bool tower_matches = false;

  bool pass() const noexcept {
    if (!tower_matches) return false;
    for (const auto& s : steps)
      if (!s.pass()) return false;
    return true;
  }
};

namespace detail {

/// Row-echelon F_2 basis keyed by lowest set bit, tracking combinations.
class F2Span {
 public:
  F2Span(std::size_t width, std::size_t members) : width_(width), members_(members), pivot_row_(width, -1) {}

  /// Adds `v` as member `index`; false when dependent on earlier members.
  bool insert(const Support& v, std::size_t index) {
    Support combo(members_);
    combo.set(index);
    Support r = v;
    reduce(r, combo);
    if (r.none()) return false;
    pivot_row_[r.find_first()] = static_cast<int>(rows_.size());
    rows_.push_back({std::move(r), std::move(combo)});
    return true;
  }

  /// Member combination equal to `v`, if `v` is in the span.
  std::optional<Support> solve(const Support& v) const {
    Support combo(members_);
    Support r = v;
    reduce(r, combo);
    if (r.any()) return std::nullopt;
    return combo;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  struct Row {
    Support vec;
    Support combo;
  };

  void reduce(Support& r, Support& combo) const {
    for (auto b = r.find_first(); b != Support::npos; b = r.find_next(b)) {
      const int row = pivot_row_[b];
      if (row < 0) continue;
      r ^= rows_[static_cast<std::size_t>(row)].vec;
      combo ^= rows_[static_cast<std::size_t>(row)].combo;
    }
  }

  std::size_t width_;
  std::size_t members_;
  std::vector<int> pivot_row_;
  std::vector<Row> rows_;
};

inline Support boundary_support(const BifilteredComplex& c, const Support& x) {
  Support out(c.size());
  for (auto g = x.find_first(); g != Support::npos; g = x.find_next(g))
    for (const auto& a : c.arrows(g)) out.flip(static_cast<std::size_t>(a.target));
  return out;
}

/// Common bigrading of the support, or nullopt if it is not homogeneous.
inline std::optional<CfkGenerator> homogeneous_grading(const BifilteredComplex& c, const Support& x) {
  const auto first = x.find_first();
  if (first == Support::npos) return std::nullopt;
  const CfkGenerator g = c.generator(first);
  for (auto i = x.find_next(first); i != Support::npos; i = x.find_next(i))
    if (!(c.generator(i) == g)) return std::nullopt;
  return g;
}

inline bool same_parity(std::int64_t a, std::int64_t b) { return ((a - b) % 2 + 2) % 2 == 0; }

/// d of each family member as a combination of family members in the right
/// parity class; nullopt for a member whose boundary leaves the span.
inline std::vector<std::optional<std::vector<int>>> boundary_in_family(const BifilteredComplex& c,
                                                                       const std::vector<Support>& family,
                                                                       const std::vector<std::int64_t>& maslov) {
  std::vector<std::optional<std::vector<int>>> out(family.size());
  F2Span spans[2] = {F2Span(c.size(), family.size()), F2Span(c.size(), family.size())};
  for (std::size_t k = 0; k < family.size(); ++k)
    spans[same_parity(maslov[k], 0) ? 0 : 1].insert(family[k], k);
  for (std::size_t k = 0; k < family.size(); ++k) {
    const Support d = boundary_support(c, family[k]);
    const auto combo = spans[same_parity(maslov[k] - 1, 0) ? 0 : 1].solve(d);
    if (!combo) continue;
    std::vector<int> idx;
    for (auto b = combo->find_first(); b != Support::npos; b = combo->find_next(b)) idx.push_back(static_cast<int>(b));
    out[k] = std::move(idx);
  }
  return out;
}

}  // namespace detail

/// One inductive step: staircase(T(2,2j+1)) (x) trefoil, j >= 1.
inline Staircase2nStep verify_staircase2n_step(std::int64_t j, BlockBasis basis = BlockBasis::corrected) {
  if (j < 1) throw InvalidArgument("staircase step needs j >= 1");
  Staircase2nStep step;
  step.j = j;
  const BifilteredComplex x = staircase(TorusKnot(2, 2 * j + 1));
  const BifilteredComplex product = tensor(x, staircase(TorusKnot(2, 3)));
  const std::size_t width = product.size();
  const std::int64_t len = 2 * j + 1;  // x_1 .. x_len

  // Tensor ids: x_i (1-based) with a, b, c at offsets 0, 1, 2.
  auto gen = [&](std::int64_t i, int abc) { return static_cast<std::size_t>((i - 1) * 3 + abc); };
  auto element = [&](std::initializer_list<std::size_t> ids) {
    Support s(width);
    for (auto id : ids) s.flip(id);
    return s;
  };
  constexpr int a = 0, b = 1, c = 2;

  std::vector<Support> v_basis;
  v_basis.push_back(element({gen(1, a)}));
  v_basis.push_back(element({gen(1, b)}));
  for (std::int64_t i = 1; i <= len; ++i) v_basis.push_back(element({gen(i, c)}));

  std::vector<std::vector<Support>> w_blocks;
  for (std::int64_t i = 1; i <= j; ++i) {
    std::vector<Support> w;
    w.push_back(element({gen(2 * i, b)}));
    w.push_back(element({gen(2 * i - 1, b), gen(2 * i, a)}));
    w.push_back(element({gen(2 * i + 1, b), gen(2 * i, c)}));
    if (basis == BlockBasis::corrected)
      w.push_back(element({gen(2 * i - 1, c), gen(2 * i + 1, a)}));
    else
      w.push_back(element({gen(2 * i + 1, c)}));
    w_blocks.push_back(std::move(w));
  }

  auto fail = [&](std::string why) {
    if (step.failure.empty()) step.failure = std::move(why);
  };

  // Gradings of every family member.
  auto gradings_of = [&](const std::vector<Support>& family, std::vector<CfkGenerator>& out) {
    out.clear();
    for (const auto& s : family) {
      const auto g = detail::homogeneous_grading(product, s);
      if (!g) return false;
      out.push_back(*g);
    }
    return true;
  };
  auto maslovs = [](const std::vector<CfkGenerator>& g) {
    std::vector<std::int64_t> m;
    for (const auto& x : g) m.push_back(x.maslov);
    return m;
  };

  std::vector<CfkGenerator> v_grades;
  std::vector<std::vector<CfkGenerator>> w_grades(w_blocks.size());
  step.homogeneous = gradings_of(v_basis, v_grades);
  for (std::size_t i = 0; i < w_blocks.size(); ++i) step.homogeneous = gradings_of(w_blocks[i], w_grades[i]) && step.homogeneous;
  if (!step.homogeneous) {
    fail("inhomogeneous basis element");
    return step;
  }

  const auto v_diff = detail::boundary_in_family(product, v_basis, maslovs(v_grades));
  step.v_closed = std::all_of(v_diff.begin(), v_diff.end(), [](const auto& d) { return d.has_value(); });
  if (!step.v_closed) fail("V is not closed under d");

  std::vector<std::vector<std::optional<std::vector<int>>>> w_diff;
  step.w_closed = true;
  for (std::size_t i = 0; i < w_blocks.size(); ++i) {
    w_diff.push_back(detail::boundary_in_family(product, w_blocks[i], maslovs(w_grades[i])));
    for (std::size_t k = 0; k < w_diff.back().size(); ++k)
      if (!w_diff.back()[k]) {
        step.w_closed = false;
        fail("W_" + std::to_string(2 * (i + 1)) + " is not closed under d (member " + std::to_string(k) + ")");
      }
  }

  // Direct sum: supports of V and all W together form an F_2 basis.
  {
    std::size_t members = v_basis.size();
    for (const auto& w : w_blocks) members += w.size();
    detail::F2Span all(width, members);
    std::size_t idx = 0;
    bool independent = true;
    for (const auto& s : v_basis) independent = all.insert(s, idx++) && independent;
    for (const auto& w : w_blocks)
      for (const auto& s : w) independent = all.insert(s, idx++) && independent;
    step.direct_sum = independent && members == width && all.rank() == width;
    if (!step.direct_sum)
      fail("V and W blocks do not decompose the product (rank " + std::to_string(all.rank()) + " of " +
           std::to_string(width) + ", " + std::to_string(members) + " members)");
  }

  // Acyclicity over F_2[U] of each closed block.
  step.w_acyclic = step.w_closed;
  for (std::size_t i = 0; i < w_blocks.size() && step.w_closed; ++i) {
    GradedFreeComplex block;
    block.gradings = maslovs(w_grades[i]);
    for (const auto& d : w_diff[i]) block.targets.push_back(*d);
    try {
      const auto h = homology_over_polynomial_ring(block);
      if (h.free_rank() != 0 || !h.torsion.empty()) {
        step.w_acyclic = false;
        fail("W_" + std::to_string(2 * (i + 1)) + " has nonzero homology");
      }
    } catch (const InvalidComplex& e) {
      step.w_acyclic = false;
      fail("W_" + std::to_string(2 * (i + 1)) + ": " + e.what());
    }
  }
  if (!step.w_closed) fail("acyclicity not checked: some W block is not a subcomplex");

  // x_1 a -> x'_1, x_1 b -> x'_2, x_i c -> x'_{i+2}: the V basis order is the target order.
  const BifilteredComplex target = staircase(TorusKnot(2, 2 * j + 3));
  step.isomorphism = step.v_closed && target.size() == v_basis.size();
  for (std::size_t k = 0; step.isomorphism && k < v_basis.size(); ++k) {
    if (!(v_grades[k] == target.generator(k))) {
      step.isomorphism = false;
      fail("isomorphism moves the bigrading of V member " + std::to_string(k));
      break;
    }
    std::vector<int> image;
    for (const auto& arrow : target.arrows(k)) image.push_back(arrow.target);
    std::sort(image.begin(), image.end());
    if (*v_diff[k] != image) {
      step.isomorphism = false;
      fail("isomorphism does not commute with d at V member " + std::to_string(k));
    }
  }
  if (!step.v_closed) fail("isomorphism not checked: V is not a subcomplex");
  return step;
}

inline Staircase2nReport verify_staircase2n(std::int64_t n, BlockBasis basis = BlockBasis::corrected) {
  if (n < 1) throw InvalidArgument("verify_staircase2n needs n >= 1");
  Staircase2nReport report;
  report.n = n;
  for (std::int64_t j = 1; j < n; ++j) report.steps.push_back(verify_staircase2n_step(j, basis));

  const BifilteredComplex trefoil = staircase(TorusKnot(2, 3));
  BifilteredComplex power = trefoil;
  for (std::int64_t i = 1; i < n; ++i) power = tensor(power, trefoil);
  report.tower_matches = vi_sequence(power) == vi_sequence(staircase(TorusKnot(2, 2 * n + 1)));
  return report;
}

}  // namespace gamma4
