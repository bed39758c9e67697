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

// Classical and Floer-theoretic data of positive torus knots, plus the
// additive extensions to expressions.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "gamma4/errors.hpp"
#include "gamma4/knot_expr.hpp"
#include "gamma4/polynomial.hpp"
#include "gamma4/vi_sequence.hpp"

namespace gamma4 {

namespace detail {

using IntPoly = std::vector<std::int64_t>;  // index = exponent

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline IntPoly power_minus_one(std::int64_t n) {  // t^n - 1
  IntPoly p(static_cast<std::size_t>(n + 1), 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  return p;
}

/// Exact division by a monic polynomial; any remainder is an internal error.
inline IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (den.back() != 1) throw InternalError("divisor must be monic");
  if (num.size() < den.size()) throw InternalError("non-exact polynomial division");
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw InternalError("non-exact polynomial division");
  return quot;
}

}  // namespace detail

/// Symmetrized Alexander polynomial of T(p,q):
/// t^-g (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)).  T(1,q) gives 1.
inline LaurentPolynomial alexander(std::int64_t p, std::int64_t q) {
  if (p > q) std::swap(p, q);
  if (p == 1) return LaurentPolynomial::monomial(0);
  TorusKnot k(p, q);
  using namespace detail;
  IntPoly num = poly_mul(power_minus_one(p * q), power_minus_one(1));
  IntPoly den = poly_mul(power_minus_one(p), power_minus_one(q));
  IntPoly quot = poly_divide_exact(std::move(num), den);
  return LaurentPolynomial::from_coefficients(-k.genus(), quot);
}

inline LaurentPolynomial alexander(const TorusKnot& k) { return alexander(k.p(), k.q()); }

/// a_0, ..., a_g with  Delta = a_0 + sum_{j>0} a_j (t^j + t^-j).
inline std::vector<std::int64_t> torsion_coefficients(const LaurentPolynomial& delta) {
  if (!delta.is_symmetric()) throw AsymmetricPolynomial("Alexander polynomial is not symmetric");
  std::int64_t g = delta.max_exponent();
  std::vector<std::int64_t> a(static_cast<std::size_t>(g + 1));
  for (std::int64_t j = 0; j <= g; ++j) a[static_cast<std::size_t>(j)] = delta.coefficient(j);
  return a;
}

/// V_i of an L-space knot from its torsion coefficients: V_i = sum_{j>0} j a_{j+i}.
inline ViSequence vi_from_torsion(const std::vector<std::int64_t>& a) {
  const auto g = static_cast<std::int64_t>(a.size()) - 1;
  std::vector<std::int64_t> v(static_cast<std::size_t>(g + 1), 0);
  for (std::int64_t i = 0; i <= g; ++i) {
    std::int64_t sum = 0;
    for (std::int64_t j = 1; i + j <= g; ++j) sum += j * a[static_cast<std::size_t>(i + j)];
    v[static_cast<std::size_t>(i)] = sum;
  }
  return ViSequence::from_values(std::move(v));
}

/// V_i of the positive torus knot T(p,q).
inline ViSequence vi_lspace(std::int64_t p, std::int64_t q) {
  return vi_from_torsion(torsion_coefficients(alexander(p, q)));
}

inline ViSequence vi_lspace(const TorusKnot& k) { return vi_lspace(k.p(), k.q()); }

/// Seifert matrix of the fence surface of the closure of (s_1 ... s_{p-1})^q.
///
/// Basis: one loop per pair of consecutive crossings on the same level,
/// ordered level-major.  The convention makes V - V^T unimodular and
/// det(V - t V^T) = +-t^g Delta(t); positive knots get V(a,a) = -1.
inline std::vector<std::vector<std::int64_t>> seifert_matrix(const TorusKnot& k) {
  struct Loop {
    std::int64_t level, first, last;
  };
  const std::int64_t p = k.p(), q = k.q();
  std::vector<Loop> loops;
  for (std::int64_t level = 1; level < p; ++level)
    for (std::int64_t r = 0; r + 1 < q; ++r)
      loops.push_back({level, r * (p - 1) + level, (r + 1) * (p - 1) + level});
  const std::size_t n = loops.size();
  std::vector<std::vector<std::int64_t>> v(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    const Loop& x = loops[a];
    v[a][a] = -1;
    for (std::size_t b = 0; b < n; ++b) {
      const Loop& y = loops[b];
      if (y.level == x.level && y.first == x.last) {
        v[a][b] = 1;
      } else if (y.level == x.level + 1) {
        if (x.first < y.first && y.first < x.last && x.last < y.last) v[a][b] = -1;
        if (y.first < x.first && x.first < y.last && y.last < x.last) v[a][b] = 1;
      }
    }
  }
  return v;
}

/// Signature of an integer symmetric matrix by exact congruence
/// diagonalization over Q.
inline std::int64_t signature_of_symmetric(const std::vector<std::vector<std::int64_t>>& m) {
  using Q = boost::multiprecision::cpp_rational;
  const std::size_t n = m.size();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  std::int64_t sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i)
      if (a[i][i] != 0) piv = i;
    if (piv == n) {
      // Zero diagonal: make one by adding row/column j to row/column i.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // remaining block is zero
      for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      piv = pi;
    }
    if (piv != k) {
      std::swap(a[piv], a[k]);
      for (auto& row : a) std::swap(row[piv], row[k]);
    }
    const Q d = a[k][k];
    sig += d > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Q f = a[i][k] / d;
      for (std::size_t c = k; c < n; ++c) a[i][c] -= f * a[k][c];
      for (std::size_t r = k; r < n; ++r) a[r][i] -= f * a[r][k];
    }
  }
  return sig;
}

/// Reference signature: signature of V + V^T for the braid Seifert matrix.
inline std::int64_t signature_seifert(const TorusKnot& k) {
  auto v = seifert_matrix(k);
  const std::size_t n = v.size();
  std::vector<std::vector<std::int64_t>> s(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = v[i][j] + v[j][i];
  return signature_of_symmetric(s);
}

/// Counting formula: for 0<i<p, 0<j<q, x = i/p + j/q contributes -1 when
/// 1/2 < x < 3/2 and +1 otherwise.  By coprimality x = 1/2 or 3/2 needs
/// j = 0 or j = q, so the boundary never occurs.
inline std::int64_t signature(const TorusKnot& k) {
  const std::int64_t p = k.p(), q = k.q(), pq = k.p() * k.q();
  std::int64_t sig = 0;
  for (std::int64_t i = 1; i < p; ++i)
    for (std::int64_t j = 1; j < q; ++j) {
      const std::int64_t twice = 2 * (i * q + j * p);  // 2 x pq
      sig += (twice > pq && twice < 3 * pq) ? -1 : 1;
    }
  return sig;
}

inline std::int64_t signature(std::int64_t p, std::int64_t q) { return signature(TorusKnot(p, q)); }

/// Additive extension; mirroring negates.
inline std::int64_t signature_expr(const KnotExpression& e) {
  std::int64_t s = 0;
  for (const auto& t : e.terms()) s += t.coefficient * signature(t.knot);
  return s;
}

/// T(p, pn+1): the representative staircase of n T(p,p+1).
inline TorusKnot representative(std::int64_t n, std::int64_t p) {
  if (n < 1 || p < 2) throw InvalidArgument("representative needs n >= 1 and p >= 2");
  return TorusKnot(p, p * n + 1);
}

}  // namespace gamma4
