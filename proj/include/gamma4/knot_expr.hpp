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

// Formal connected sums of torus knots.
//
// An expression is an integer combination  c_1 T(p_1,q_1) + ... + c_r T(p_r,q_r)
// of positive torus knots; a negative coefficient stands for copies of the
// mirror.  The empty combination is the unknot.  Values are normalized on
// construction (sorted by (p,q), merged, zero terms dropped), so equality of
// expressions is structural equality.

#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gamma4/errors.hpp"

namespace gamma4 {

/// Positive torus knot T(p,q) with 2 <= p < q and gcd(p,q) = 1.
class TorusKnot {
 public:
  /// Accepts either order of the arguments; T(q,p) is the same knot.
  TorusKnot(std::int64_t p, std::int64_t q) {
    if (p > q) std::swap(p, q);
    if (p < 2) throw InvalidKnot("T(" + std::to_string(p) + "," + std::to_string(q) +
                                 "): strand count must be at least 2");
    if (p == q || std::gcd(p, q) != 1)
      throw InvalidKnot("T(" + std::to_string(p) + "," + std::to_string(q) +
                        "): parameters must be coprime");
    p_ = p;
    q_ = q;
  }

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::int64_t genus() const noexcept { return (p_ - 1) * (q_ - 1) / 2; }

  friend auto operator<=>(const TorusKnot&, const TorusKnot&) = default;

 private:
  std::int64_t p_ = 2;
  std::int64_t q_ = 3;
};

struct Term {
  TorusKnot knot;
  std::int64_t coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

class KnotExpression {
 public:
  KnotExpression() = default;

  explicit KnotExpression(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

  static KnotExpression single(const TorusKnot& k, std::int64_t coefficient = 1) {
    return KnotExpression({Term{k, coefficient}});
  }

  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_unknot() const noexcept { return terms_.empty(); }

  /// Sum of |c| * g over all terms.
  std::int64_t total_genus() const noexcept {
    std::int64_t g = 0;
    for (const auto& t : terms_) g += (t.coefficient < 0 ? -t.coefficient : t.coefficient) * t.knot.genus();
    return g;
  }

  friend bool operator==(const KnotExpression&, const KnotExpression&) = default;

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.knot < b.knot; });
    std::vector<Term> merged;
    for (const auto& t : terms_) {
      if (!merged.empty() && merged.back().knot == t.knot)
        merged.back().coefficient += t.coefficient;
      else
        merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return t.coefficient == 0; });
    terms_ = std::move(merged);
  }

  std::vector<Term> terms_;
};

inline KnotExpression mirror(const KnotExpression& e) {
  std::vector<Term> terms(e.terms().begin(), e.terms().end());
  for (auto& t : terms) t.coefficient = -t.coefficient;
  return KnotExpression(std::move(terms));
}

inline KnotExpression add(const KnotExpression& a, const KnotExpression& b) {
  std::vector<Term> terms(a.terms().begin(), a.terms().end());
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return KnotExpression(std::move(terms));
}

inline KnotExpression multiply(const KnotExpression& e, std::int64_t n) {
  if (n < 1) throw InvalidArgument("multiply: factor must be positive");
  std::vector<Term> terms(e.terms().begin(), e.terms().end());
  for (auto& t : terms) t.coefficient *= n;
  return KnotExpression(std::move(terms));
}

/// E = positive # mirror(negative), both parts sums of positive torus knots.
struct ExpressionParts {
  KnotExpression positive;
  KnotExpression negative;
};

inline ExpressionParts split_parts(const KnotExpression& e) {
  std::vector<Term> pos, neg;
  for (const auto& t : e.terms()) {
    if (t.coefficient > 0)
      pos.push_back(t);
    else
      neg.push_back(Term{t.knot, -t.coefficient});
  }
  return {KnotExpression(std::move(pos)), KnotExpression(std::move(neg))};
}

/// Canonical printer: "5*T(2,3) - T(5,6)"; the unknot prints as "".
inline std::string render(const KnotExpression& e) {
  std::string out;
  bool first = true;
  for (const auto& t : e.terms()) {
    std::int64_t c = t.coefficient;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "T(" + std::to_string(t.knot.p()) + "," + std::to_string(t.knot.q()) + ")";
    first = false;
  }
  return out;
}

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  KnotExpression parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) return {};
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    parse_term(sign, terms);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      parse_term(op == '-' ? -1 : 1, terms);
    }
    return KnotExpression(std::move(terms));
  }

 private:
  void parse_term(int sign, std::vector<Term>& out) {
    skip_ws();
    std::int64_t coefficient = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = parse_unsigned();
      skip_ws();
      expect('*');
    }
    skip_ws();
    expect('T');
    skip_ws();
    expect('(');
    std::int64_t p = parse_signed();
    skip_ws();
    expect(',');
    std::int64_t q = parse_signed();
    skip_ws();
    expect(')');

    if (p == 0 || q == 0) throw InvalidKnot("T(p,q) needs nonzero parameters");
    std::int64_t orientation = (p < 0) != (q < 0) ? -1 : 1;
    std::int64_t ap = p < 0 ? -p : p;
    std::int64_t aq = q < 0 ? -q : q;
    // T(1,q) and T(p,1) are unknots.
    if (ap == 1 || aq == 1) return;
    out.push_back(Term{TorusKnot(ap, aq), sign * orientation * coefficient});
  }

  std::int64_t parse_signed() {
    skip_ws();
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    std::int64_t v = parse_unsigned();
    return negative ? -v : v;
  }

  std::int64_t parse_unsigned() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("integer too large");
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `expr := ['-'] term (('+'|'-') term)*`, `term := [INT '*'] 'T(' INT ',' INT ')'`.
/// Whitespace is ignored and the empty string is the unknot.
inline KnotExpression parse(std::string_view text) { return detail::ExpressionParser(text).parse(); }

}  // namespace gamma4
