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

// nu^+_v, V-sequences and t(K) for formal sums of torus knots.
//
// Every expression is routed as E = P # -N with P, N sums of positive torus
// knots.  Each part is replaced by one formal semigroup whose staircase
// carries the same V-sequence:
//   * a single T(p,q) uses <p,q>;
//   * c T(p,p+1) uses <p, pc+1>;
//   * any other positive sum is reduced by tensoring one staircase at a time
//     and rebuilding a staircase from the V-sequence of each product.
// The two semigroups then feed the closed form for nu^+_v of A # -B.  An
// iterated staircase only matches its part in V, so it is used on its own
// but never against a nontrivial opposite part; those expressions go to the
// reduced knot complex instead.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gamma4/cfk.hpp"
#include "gamma4/errors.hpp"
#include "gamma4/knot_expr.hpp"
#include "gamma4/semigroup.hpp"
#include "gamma4/torus_knot.hpp"
#include "gamma4/vi_sequence.hpp"

namespace gamma4 {

struct RouterConfig {
  /// Largest positive-part genus reduced by iterated tensoring.  Single
  /// knots and c T(p,p+1) are exempt.
  std::int64_t genus_cap = 60;
  /// Largest full knot complex built when the closed form is unavailable.
  std::size_t complex_generator_cap = 20000;
};

/// nu^+_v(A # -B) = ( max_{0<=k<=g_B} { g_A - g_B + Gamma_B(k) - Gamma_A(k+v) } )_+.
/// Past k = g_B, Gamma_B grows by exactly 1 and Gamma_A by at least 1, so
/// larger k never raise the maximum.
inline std::int64_t nu_plus_v(const FormalSemigroup& a, const FormalSemigroup& b, std::int64_t v) {
  if (v < 0) throw InvalidArgument("nu_plus_v needs v >= 0");
  const std::int64_t ga = a.genus(), gb = b.genus();
  std::int64_t best = 0;
  for (std::int64_t k = 0; k <= gb; ++k) best = std::max(best, ga - gb + b.enumerate(k) - a.enumerate(k + v));
  return best;
}

/// nu^+_0, nu^+_1, ... up to the first zero (reached by v = g_A).
inline std::vector<std::int64_t> nu_plus_sequence(const FormalSemigroup& a, const FormalSemigroup& b) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = 0;; ++v) {
    out.push_back(nu_plus_v(a, b, v));
    if (out.back() == 0) break;
  }
  return out;
}

/// V_m = min{ v : nu^+_v <= m }.
inline ViSequence vi_from_nu_plus(const std::vector<std::int64_t>& nu) {
  std::vector<std::int64_t> v;
  const std::int64_t top = nu.front();
  // {v : nu_v <= m} is a suffix that grows as m does.
  std::size_t idx = nu.size() - 1;
  for (std::int64_t m = 0; m <= top; ++m) {
    while (idx > 0 && nu[idx - 1] <= m) --idx;
    v.push_back(static_cast<std::int64_t>(idx));
  }
  return ViSequence::from_values(std::move(v));
}

inline ViSequence vi_from_nuplus(const FormalSemigroup& a, const FormalSemigroup& b) {
  return vi_from_nu_plus(nu_plus_sequence(a, b));
}

/// t = min_{0 <= m <= 2 V_0} { m + 2 V_m } applied to the V-sequence of the mirror.
inline std::int64_t t_from_vi(const ViSequence& mirror_v) {
  std::int64_t best = 2 * mirror_v[0];
  for (std::int64_t m = 1; m <= 2 * mirror_v[0]; ++m) best = std::min(best, m + 2 * mirror_v[m]);
  return best;
}

/// The same minimum as min_{0 <= v <= V_0} { nu^+_v + 2v }.
inline std::int64_t t_from_nu_plus(const std::vector<std::int64_t>& nu) {
  std::int64_t best = nu.front();
  for (std::size_t v = 1; v < nu.size(); ++v) best = std::min(best, nu[v] + 2 * static_cast<std::int64_t>(v));
  return best;
}

/// How one positive part was reduced to a formal semigroup.
struct PartReduction {
  FormalSemigroup semigroup;
  std::string method;  // "unknot", "torus", "representative" or "iterated"
};

struct ClosedForm {
  PartReduction positive;  // A
  PartReduction negative;  // B
};
struct ComplexPath {
  std::int64_t genus;
  std::string reason;
};
struct UnsupportedRoute {
  std::string reason;
};
using VRoute = std::variant<ClosedForm, ComplexPath, UnsupportedRoute>;

namespace detail {

struct ReductionFailure {
  bool over_cap;
  std::string reason;
};

inline std::variant<PartReduction, ReductionFailure> reduce_positive(const KnotExpression& part,
                                                                     const RouterConfig& cfg) {
  const auto terms = part.terms();
  if (terms.empty()) return PartReduction{FormalSemigroup(), "unknot"};
  if (terms.size() == 1) {
    const auto& [knot, c] = terms.front();
    if (c == 1) return PartReduction{from_generators(knot.p(), knot.q()), "torus"};
    if (knot.q() == knot.p() + 1) {
      const TorusKnot rep = representative(c, knot.p());
      return PartReduction{from_generators(rep.p(), rep.q()), "representative"};
    }
  }
  if (part.total_genus() > cfg.genus_cap)
    return ReductionFailure{true, "iterated reduction of " + render(part) + " needs genus " +
                                      std::to_string(part.total_genus()) + " > cap " +
                                      std::to_string(cfg.genus_cap)};
  FormalSemigroup current;
  for (const auto& [knot, c] : terms)
    for (std::int64_t i = 0; i < c; ++i) {
      const BifilteredComplex product = tensor(staircase(current), staircase(knot));
      const ViSequence v = vi_sequence(product);
      FormalSemigroup next;
      try {
        next = from_vi(v);
      } catch (const MalformedSequence&) {
        return ReductionFailure{false, "V-sequence " + to_string(v) + " of a partial sum is not a staircase"};
      }
      if (vi_of(next) != v)
        return ReductionFailure{false, "staircase rebuilt from " + to_string(v) + " does not round-trip"};
      current = std::move(next);
    }
  return PartReduction{std::move(current), "iterated"};
}

}  // namespace detail

inline VRoute route(const KnotExpression& e, const RouterConfig& cfg = {}) {
  const auto [p, n] = split_parts(e);
  auto a = detail::reduce_positive(p, cfg);
  auto b = detail::reduce_positive(n, cfg);
  if (std::holds_alternative<PartReduction>(a) && std::holds_alternative<PartReduction>(b)) {
    ClosedForm cf{std::get<PartReduction>(std::move(a)), std::get<PartReduction>(std::move(b))};
    // An iterated staircase only shares V with its part; against a nontrivial
    // other part the rest of the complex matters (T(2,3) + T(5,6) - T(3,4)
    // is a counterexample), so only torus and representative parts combine.
    const bool mixed = cf.positive.method != "unknot" && cf.negative.method != "unknot";
    if (mixed && (cf.positive.method == "iterated" || cf.negative.method == "iterated"))
      return ComplexPath{e.total_genus(), "iterated staircases do not combine with a nontrivial opposite part"};
    return cf;
  }
  const auto& failure =
      std::holds_alternative<detail::ReductionFailure>(a) ? std::get<detail::ReductionFailure>(a) : std::get<detail::ReductionFailure>(b);
  if (failure.over_cap) return UnsupportedRoute{failure.reason};
  return ComplexPath{e.total_genus(), failure.reason};
}

/// V-sequence of E.
inline ViSequence vi_expr(const KnotExpression& e, const RouterConfig& cfg = {}) {
  const VRoute r = route(e, cfg);
  if (const auto* cf = std::get_if<ClosedForm>(&r)) {
    if (cf->negative.semigroup.genus() == 0) return vi_of(cf->positive.semigroup);
    // Mirrors of staircases have V identically zero.
    if (cf->positive.semigroup.genus() == 0) return ViSequence();
    return vi_from_nuplus(cf->positive.semigroup, cf->negative.semigroup);
  }
  if (std::holds_alternative<ComplexPath>(r)) return vi_sequence(reduced_complex(e, cfg.complex_generator_cap));
  throw Unsupported(std::get<UnsupportedRoute>(r).reason);
}

/// t(E) = min_m { m + 2 V_m(mirror E) }.
inline std::int64_t t_invariant(const KnotExpression& e, const RouterConfig& cfg = {}) {
  return t_from_vi(vi_expr(mirror(e), cfg));
}

/// nu^+(E) = min{ m : V_m(E) = 0 }.
inline std::int64_t hom_wu_nu_plus(const KnotExpression& e, const RouterConfig& cfg = {}) {
  return vi_expr(e, cfg).first_zero();
}

}  // namespace gamma4
