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

// Reproduction suite behind `gamma4 verify`.  Each subset is a list of named
// checks comparing a computed value against a published one.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gamma4/bounds.hpp"
#include "gamma4/errors.hpp"
#include "gamma4/knot_expr.hpp"
#include "gamma4/nu_plus.hpp"
#include "gamma4/polynomial.hpp"
#include "gamma4/rational.hpp"
#include "gamma4/semigroup.hpp"
#include "gamma4/staircase2n.hpp"
#include "gamma4/surgery.hpp"
#include "gamma4/torus_knot.hpp"

namespace gamma4 {

struct VerifyCheck {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  bool pass;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool pass() const noexcept {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline const std::vector<std::string>& verify_subsets() {
  static const std::vector<std::string> names = {"example-section", "nu-grid", "staircase2n",
                                                 "sharpness",       "surgery",    "superadditivity"};
  return names;
}

namespace detail {

inline KnotExpression headline_knot() { return parse("T(2,3) - T(5,6)"); }

inline void add_check(VerifyReport& r, std::string id, std::string description, std::string expected,
                      std::string computed) {
  const bool pass = expected == computed;
  r.checks.push_back({std::move(id), std::move(description), std::move(expected), std::move(computed), pass});
}

inline void verify_example_section(VerifyReport& r, const RouterConfig& cfg) {
  const KnotExpression k = headline_knot();
  add_check(r, "t-K", "t(T(2,3) - T(5,6))", "6", std::to_string(t_invariant(k, cfg)));
  add_check(r, "t-mirror-K", "t of the mirror", "0", std::to_string(t_invariant(mirror(k), cfg)));
  add_check(r, "main-K", "main bound", "1", std::to_string(main_bound(k, cfg).value));
  add_check(r, "upsilon-K", "upsilon bound", "2", std::to_string(upsilon_bound(k)));

  std::string first_bad = "all";
  for (std::int64_t l = 1; l <= 50; ++l) {
    const std::int64_t t = t_invariant(multiply(k, 5 * l), cfg);
    if (t != 26 * l + 1) {
      first_bad = "l=" + std::to_string(l) + ": " + std::to_string(t);
      break;
    }
  }
  add_check(r, "t-L5l", "t(5l K) = 26l + 1 for l = 1..50", "all", first_bad);

  first_bad = "all";
  for (std::int64_t n = 1; n <= 50; ++n) {
    const Rational ratio(t_invariant(multiply(k, n), cfg), n);
    if (!(ratio > Rational(26, 5))) {
      first_bad = "n=" + std::to_string(n) + ": " + to_string(ratio);
      break;
    }
  }
  add_check(r, "omega-not-attained", "t(nK)/n > 26/5 for n = 1..50", "all", first_bad);
}

inline void verify_nu_grid(VerifyReport& r) {
  std::string top = "all", low = "all", mid = "all", v0 = "all";
  for (std::int64_t l = 1; l <= 25; ++l) {
    const FormalSemigroup a = from_generators(5, 25 * l + 1);
    const FormalSemigroup b = from_generators(2, 10 * l + 1);
    const auto nu = nu_plus_sequence(a, b);
    auto at = [&](std::int64_t v) { return v < static_cast<std::int64_t>(nu.size()) ? nu[static_cast<std::size_t>(v)] : 0; };
    const std::string tag = "l=" + std::to_string(l);
    if (top == "all" && at(13 * l) != 1) top = tag;
    for (std::int64_t v = 0; low == "all" && v <= 5 * l - 1; ++v)
      if (at(v) != 45 * l - 5 * v) low = tag + ", v=" + std::to_string(v);
    for (std::int64_t s = 1; mid == "all" && s <= 8 * l; ++s)
      if (at(13 * l - s) < 2 * s + 1) mid = tag + ", s=" + std::to_string(s);
    if (v0 == "all" && vi_from_nu_plus(nu)[0] != 13 * l + 1) v0 = tag;
  }
  add_check(r, "nu-13l", "nu+_{13l} = 1 for l = 1..25", "all", top);
  add_check(r, "nu-low", "nu+_v = 45l - 5v for 0 <= v < 5l, l = 1..25", "all", low);
  add_check(r, "nu-mid", "nu+_{13l-s} >= 2s+1 for 0 < s <= 8l, l = 1..25", "all", mid);
  add_check(r, "V0-13l", "V_0 = 13l + 1 for l = 1..25", "all", v0);
}

inline void verify_staircase(VerifyReport& r) {
  for (std::int64_t n = 1; n <= 6; ++n) {
    const Staircase2nReport rep = verify_staircase2n(n);
    std::string computed = rep.pass() ? "pass" : "fail";
    for (const auto& s : rep.steps)
      if (!s.pass()) computed += " (j=" + std::to_string(s.j) + ": " + s.failure + ")";
    if (!rep.tower_matches) computed += " (tower mismatch)";
    add_check(r, "staircase2n-" + std::to_string(n),
              std::to_string(n) + " T(2,3) = staircase(T(2," + std::to_string(2 * n + 1) + ")) + acyclic", "pass",
              computed);
  }
}

inline void verify_sharpness(VerifyReport& r, const RouterConfig& cfg) {
  const KnotExpression k = parse("T(3,-5)");
  const MainBound mb = main_bound(k, cfg);
  add_check(r, "main-T3-5", "main bound of T(3,-5)", "1", std::to_string(mb.value));
  add_check(r, "argmax-T3-5", "table maximum of T(3,-5) at m", "1", std::to_string(mb.argmax));
  add_check(r, "alexander-T35", "Alexander polynomial of T(3,5)", "t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4",
            to_string(alexander(3, 5)));
  add_check(r, "V1-T35", "V_1(T(3,5))", "1", std::to_string(vi_lspace(3, 5)[1]));
  std::string first_bad = "all";
  for (std::int64_t m = 1; m <= 8; ++m) {
    const std::int64_t b = main_bound(multiply(k, m), cfg).value;
    if (b != m) {
      first_bad = "m=" + std::to_string(m) + ": " + std::to_string(b);
      break;
    }
  }
  add_check(r, "main-mT3-5", "main bound of m T(3,-5) equals m, m = 1..8", "all", first_bad);
  add_check(r, "batson-T3-4", "Batson bound of T(3,-4)", "1", std::to_string(batson_bound(parse("T(3,-4)"), cfg)));
}

inline void verify_surgery(VerifyReport& r, const RouterConfig& cfg) {
  std::string bad = "all";
  for (std::int64_t n = 1; n <= 50 && bad == "all"; ++n) {
    const auto row = d_table(KnotExpression(), n, cfg);
    for (std::int64_t k = 0; k < n; ++k)
      if (row[static_cast<std::size_t>(k)] != Rational((2 * k - n) * (2 * k - n) - n, 4 * n))
        bad = "n=" + std::to_string(n) + ", k=" + std::to_string(k);
  }
  add_check(r, "lens", "unknot d-invariants equal the lens quadratic, n <= 50", "all", bad);

  bad = "all";
  for (const char* text : {"T(2,3)", "T(3,-5)", "T(2,3) - T(5,6)", "2*T(2,5) - T(3,4)", "T(3,4) + T(2,-3)"}) {
    const KnotExpression e = parse(text);
    const Rational anchor = d_invariant_negative(e, -1, 0, cfg);
    const std::int64_t v0 = vi_expr(mirror(e), cfg)[0];
    if (anchor != Rational(2 * v0)) bad = text;
  }
  add_check(r, "d-minus-one", "d(S^3_{-1}(K)) = 2 V_0(mirror K) on samples", "all", bad);
}

inline void verify_superadditivity(VerifyReport& r, const RouterConfig& cfg) {
  const BoundReport rep = bound_report(headline_knot(), 50, cfg);
  add_check(r, "final-K", "final lower bound with horizon 50", "2", std::to_string(rep.final_gamma4_lower));
  add_check(r, "stable-beats-main", "ceil(stable bound) > main bound", "true",
            ceil(*rep.stable) > rep.main ? "true" : "false (stable " + to_string(*rep.stable) + ")");
}

}  // namespace detail

/// Runs one subset or "all"; throws InvalidArgument for unknown names.
inline VerifyReport run_verify(std::string_view subset, const RouterConfig& cfg = {}) {
  VerifyReport r;
  const bool all = subset == "all";
  bool known = all;
  auto want = [&](std::string_view name) {
    if (all || subset == name) {
      known = true;
      return true;
    }
    return false;
  };
  if (want("example-section")) detail::verify_example_section(r, cfg);
  if (want("nu-grid")) detail::verify_nu_grid(r);
  if (want("staircase2n")) detail::verify_staircase(r);
  if (want("sharpness")) detail::verify_sharpness(r, cfg);
  if (want("surgery")) detail::verify_surgery(r, cfg);
  if (want("superadditivity")) detail::verify_superadditivity(r, cfg);
  if (!known) throw InvalidArgument("unknown verify subset '" + std::string(subset) + "'");
  return r;
}

}  // namespace gamma4
