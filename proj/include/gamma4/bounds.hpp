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

// Lower bounds for the non-orientable slice genus gamma_4.
//
// With V = V(mirror E) and sigma = sigma(E):
//   main       sigma/2 - t(E) = max_m { sigma/2 - m - 2 V_m }
//   batson     the m = 0 row
//   nu_plus    sigma/2 - nu^+(mirror E), the row at m = nu^+
//   upsilon    |sigma/2 - upsilon(E)|
//   stable     sigma/2 - min_{n<=N} t(nE)/n
// final_gamma4_lower = max(1, main, ceil(stable)); gamma_4 >= 1 by convention.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamma4/errors.hpp"
#include "gamma4/knot_expr.hpp"
#include "gamma4/nu_plus.hpp"
#include "gamma4/rational.hpp"
#include "gamma4/torus_knot.hpp"
#include "gamma4/vi_sequence.hpp"

namespace gamma4 {

/// sigma/2 - m - 2 V_m for any m >= 0.
inline std::int64_t table_value(std::int64_t sigma, const ViSequence& mirror_v, std::int64_t m) {
  return sigma / 2 - m - 2 * mirror_v[m];
}

/// Rows m = 0 .. 2 V_0 of sigma/2 - m - 2 V_m.
inline std::vector<std::int64_t> bound_table(std::int64_t sigma, const ViSequence& mirror_v) {
  std::vector<std::int64_t> rows;
  for (std::int64_t m = 0; m <= 2 * mirror_v[0]; ++m) rows.push_back(table_value(sigma, mirror_v, m));
  return rows;
}

struct MainBound {
  std::int64_t value;
  std::vector<std::int64_t> table;
  std::int64_t argmax;  // smallest maximizing m
};

inline MainBound main_bound_from(std::int64_t sigma, const ViSequence& mirror_v) {
  MainBound out{0, bound_table(sigma, mirror_v), 0};
  const auto it = std::max_element(out.table.begin(), out.table.end());
  out.value = *it;
  out.argmax = it - out.table.begin();
  return out;
}

inline MainBound main_bound(const KnotExpression& e, const RouterConfig& cfg = {}) {
  return main_bound_from(signature_expr(e), vi_expr(mirror(e), cfg));
}

inline std::int64_t batson_bound(const KnotExpression& e, const RouterConfig& cfg = {}) {
  return table_value(signature_expr(e), vi_expr(mirror(e), cfg), 0);
}

inline std::int64_t nu_plus_bound(const KnotExpression& e, const RouterConfig& cfg = {}) {
  return signature_expr(e) / 2 - hom_wu_nu_plus(mirror(e), cfg);
}

/// upsilon(T(p,q)) = -min_n { n + 2 V_n(T(p,q)) }.
inline std::int64_t upsilon(const TorusKnot& k) { return -t_from_vi(vi_lspace(k)); }

/// Additive extension with upsilon(mirror) = -upsilon.
inline std::int64_t upsilon(const KnotExpression& e) {
  std::int64_t u = 0;
  for (const auto& t : e.terms()) u += t.coefficient * upsilon(t.knot);
  return u;
}

inline std::int64_t upsilon_bound(const KnotExpression& e) {
  const std::int64_t d = signature_expr(e) / 2 - upsilon(e);
  return d < 0 ? -d : d;
}

struct OmegaRow {
  std::int64_t n;
  std::int64_t t;
  Rational ratio;
  Rational running_min;
};

struct OmegaScan {
  std::vector<OmegaRow> rows;
  Rational minimum;
  std::int64_t witness;  // smallest n attaining the minimum
  /// t(nE)/n is strictly decreasing over the whole horizon.
  bool strictly_decreasing;
};

/// min_{1<=n<=N} t(nE)/n; an upper bound for omega(E) by subadditivity.
inline OmegaScan omega_upper(const KnotExpression& e, std::int64_t horizon, const RouterConfig& cfg = {}) {
  if (horizon < 1) throw InvalidArgument("omega horizon must be at least 1");
  OmegaScan scan{{}, Rational(0), 1, true};
  for (std::int64_t n = 1; n <= horizon; ++n) {
    const std::int64_t t = t_invariant(multiply(e, n), cfg);
    const Rational ratio(t, n);
    if (n == 1 || ratio < scan.minimum) {
      scan.minimum = ratio;
      scan.witness = n;
    }
    if (n > 1 && !(ratio < scan.rows.back().ratio)) scan.strictly_decreasing = false;
    scan.rows.push_back({n, t, ratio, scan.minimum});
  }
  if (horizon == 1) scan.strictly_decreasing = false;
  return scan;
}

inline Rational stable_bound(const KnotExpression& e, std::int64_t horizon, const RouterConfig& cfg = {}) {
  return Rational(signature_expr(e), 2) - omega_upper(e, horizon, cfg).minimum;
}

struct BoundReport {
  std::int64_t sigma = 0;
  std::int64_t t = 0;
  ViSequence mirror_v;
  std::vector<std::int64_t> table;  // sigma/2 - m - 2 V_m(mirror), m = 0 .. 2 V_0
  std::int64_t argmax = 0;
  std::int64_t main = 0;
  std::int64_t batson = 0;
  std::int64_t nu_plus = 0;  // the nu^+ bound
  std::optional<std::int64_t> upsilon;
  std::optional<Rational> stable;
  std::optional<std::int64_t> stable_witness;
  std::int64_t final_gamma4_lower = 1;
};

inline std::int64_t final_lower(std::int64_t main, const std::optional<Rational>& stable) {
  std::int64_t out = std::max<std::int64_t>(1, main);
  if (stable) out = std::max(out, ceil(*stable));
  return out;
}

/// All bounds for E; the stable bound only when a horizon is given.
inline BoundReport bound_report(const KnotExpression& e, std::optional<std::int64_t> horizon = std::nullopt,
                                const RouterConfig& cfg = {}) {
  BoundReport r;
  r.sigma = signature_expr(e);
  r.mirror_v = vi_expr(mirror(e), cfg);
  const MainBound mb = main_bound_from(r.sigma, r.mirror_v);
  r.table = mb.table;
  r.argmax = mb.argmax;
  r.main = mb.value;
  r.t = r.sigma / 2 - r.main;
  r.batson = r.table.front();
  r.nu_plus = r.sigma / 2 - r.mirror_v.first_zero();
  r.upsilon = upsilon_bound(e);
  if (horizon) {
    const OmegaScan scan = omega_upper(e, *horizon, cfg);
    r.stable = Rational(r.sigma, 2) - scan.minimum;
    r.stable_witness = scan.witness;
  }
  r.final_gamma4_lower = final_lower(r.main, r.stable);
  return r;
}

/// Bounds for the mirror of a Floer-thin knot K with tau(K) = tau >= 0 and
/// sigma(K) = sigma.  V(K) is modelled by V(T(2,2 tau+1)).
inline BoundReport thin_bounds(std::int64_t tau, std::int64_t sigma) {
  if (tau < 0) throw InvalidArgument("thin_bounds needs tau >= 0");
  if (sigma % 2 != 0) throw InvalidArgument("signature must be even");
  BoundReport r;
  r.sigma = -sigma;
  r.mirror_v = tau == 0 ? ViSequence() : vi_lspace(2, 2 * tau + 1);
  const MainBound mb = main_bound_from(r.sigma, r.mirror_v);
  r.table = mb.table;
  r.argmax = mb.argmax;
  r.main = mb.value;
  r.t = r.sigma / 2 - r.main;
  r.batson = r.table.front();
  r.nu_plus = r.sigma / 2 - r.mirror_v.first_zero();
  // upsilon(mirror K) = -upsilon(K) = tau.
  const std::int64_t d = r.sigma / 2 - tau;
  r.upsilon = d < 0 ? -d : d;
  r.final_gamma4_lower = final_lower(r.main, std::nullopt);
  return r;
}

// ---------------------------------------------------------------------------
// (h, e) obstruction grids.  Odd n in [1, n_max], k in [-2n, 0], [k] = k mod n
// in [0, n), W = 8 max{V_[k], V_{n-[k]}} with V = V(mirror E), and
// Q = 4(n+k)^2 - (2[k]-n)^2.  Both inequalities are compared after
// multiplying through by n.

struct ObstructionResult {
  bool feasible = true;
  std::int64_t n = 0;  // first violating pair when !feasible
  std::int64_t k = 0;
  Rational lhs;
  Rational rhs;
};

namespace detail {

template <class Check>
ObstructionResult scan_grid(const ViSequence& v, std::int64_t n_max, Check check) {
  if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
  for (std::int64_t n = 1; n <= n_max; n += 2)
    for (std::int64_t k = -2 * n; k <= 0; ++k) {
      const std::int64_t r = ((k % n) + n) % n;
      const std::int64_t w = 8 * std::max(v[r], v[n - r]);
      const std::int64_t q = 4 * (n + k) * (n + k) - (2 * r - n) * (2 * r - n);
      const auto [lhs, rhs] = check(n, w, q);
      if (lhs < rhs) return ObstructionResult{false, n, k, lhs, rhs};
    }
  return ObstructionResult{};
}

}  // namespace detail

/// 2h + W >= e - n - Q/n for every grid point; e is the normal Euler number.
inline ObstructionResult euler_obstruction(const ViSequence& mirror_v, std::int64_t h, std::int64_t e,
                                           std::int64_t n_max) {
  if (e % 2 != 0) throw OddEulerNumber("normal Euler number " + std::to_string(e) + " is odd");
  return detail::scan_grid(mirror_v, n_max, [&](std::int64_t n, std::int64_t w, std::int64_t q) {
    return std::pair{Rational(2 * h + w), Rational(e - n) - Rational(q, n)};
  });
}

inline ObstructionResult euler_obstruction(const KnotExpression& k, std::int64_t h, std::int64_t e,
                                           std::int64_t n_max, const RouterConfig& cfg = {}) {
  if (e % 2 != 0) throw OddEulerNumber("normal Euler number " + std::to_string(e) + " is odd");
  return euler_obstruction(vi_expr(mirror(k), cfg), h, e, n_max);
}

/// 4h + W >= 2 sigma - n - Q/n for every grid point; a violation certifies gamma_4 > h.
inline ObstructionResult genus_obstruction(std::int64_t sigma, const ViSequence& mirror_v, std::int64_t h,
                                           std::int64_t n_max) {
  return detail::scan_grid(mirror_v, n_max, [&](std::int64_t n, std::int64_t w, std::int64_t q) {
    return std::pair{Rational(4 * h + w), Rational(2 * sigma - n) - Rational(q, n)};
  });
}

inline ObstructionResult genus_obstruction(const KnotExpression& k, std::int64_t h, std::int64_t n_max,
                                           const RouterConfig& cfg = {}) {
  return genus_obstruction(signature_expr(k), vi_expr(mirror(k), cfg), h, n_max);
}

/// Smallest h >= 0 that the genus grid does not exclude.
inline std::int64_t smallest_feasible_h(std::int64_t sigma, const ViSequence& mirror_v, std::int64_t n_max) {
  for (std::int64_t h = 0;; ++h)
    if (genus_obstruction(sigma, mirror_v, h, n_max).feasible) return h;
}

}  // namespace gamma4
