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

// Correction terms of integer surgeries on formal sums of torus knots.
//
// For n > 0 and 0 <= k < n,
//   d(S^3_n(K), t_k) = ((2k - n)^2 - n) / (4n) - 2 max{V_k, V_{n-k}},
// and negative framings go through the mirror:
//   d(S^3_{-n}(K), t_k) = -d(S^3_n(mirror K), t_k).

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gamma4/errors.hpp"
#include "gamma4/knot_expr.hpp"
#include "gamma4/nu_plus.hpp"
#include "gamma4/rational.hpp"
#include "gamma4/vi_sequence.hpp"

namespace gamma4 {

/// Spin^c structure t_k on S^3_n(K), 0 <= k < |n|.
class SpincLabel {
 public:
  SpincLabel(std::int64_t n, std::int64_t k) : n_(n), k_(k) {
    if (n == 0) throw InvalidArgument("surgery framing must be nonzero");
    const std::int64_t m = n < 0 ? -n : n;
    if (k < 0 || k >= m)
      throw InvalidArgument("spin^c label " + std::to_string(k) + " outside [0, " + std::to_string(m) + ")");
  }

  std::int64_t framing() const noexcept { return n_; }
  std::int64_t label() const noexcept { return k_; }

 private:
  std::int64_t n_;
  std::int64_t k_;
};

/// d of the lens space L(n,1) = S^3_n(unknot), n > 0.
inline Rational lens_term(std::int64_t n, std::int64_t k) {
  (void)SpincLabel(n, k);  // validates the label
  if (n < 0) throw InvalidArgument("lens_term needs n > 0");
  return Rational((2 * k - n) * (2 * k - n) - n, 4 * n);
}

/// Ni-Wu formula from a V-sequence, n > 0.
inline Rational d_from_vi(const ViSequence& v, std::int64_t n, std::int64_t k) {
  return lens_term(n, k) - Rational(2 * std::max(v[k], v[n - k]));
}

inline Rational d_invariant(const KnotExpression& e, std::int64_t n, std::int64_t k, const RouterConfig& cfg = {}) {
  if (n <= 0) throw InvalidArgument("d_invariant needs n > 0; use d_invariant_negative");
  (void)SpincLabel(n, k);  // validates the label
  return d_from_vi(vi_expr(e, cfg), n, k);
}

inline Rational d_invariant_negative(const KnotExpression& e, std::int64_t n, std::int64_t k,
                                     const RouterConfig& cfg = {}) {
  if (n >= 0) throw InvalidArgument("d_invariant_negative needs n < 0");
  (void)SpincLabel(n, k);  // validates the label
  return -d_invariant(mirror(e), -n, k, cfg);
}

inline Rational d_invariant(const KnotExpression& e, const SpincLabel& s, const RouterConfig& cfg = {}) {
  return s.framing() > 0 ? d_invariant(e, s.framing(), s.label(), cfg)
                         : d_invariant_negative(e, s.framing(), s.label(), cfg);
}

/// d(S^3_n(E), t_k) for k = 0 .. |n|-1, one V-sequence evaluation.
inline std::vector<Rational> d_table(const KnotExpression& e, std::int64_t n, const RouterConfig& cfg = {}) {
  if (n == 0) throw InvalidArgument("surgery framing must be nonzero");
  const std::int64_t m = n < 0 ? -n : n;
  const ViSequence v = vi_expr(n > 0 ? e : mirror(e), cfg);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) out.push_back(n > 0 ? d_from_vi(v, m, k) : -d_from_vi(v, m, k));
  return out;
}

}  // namespace gamma4
