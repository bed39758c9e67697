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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gamma4 {

/// Integer Laurent polynomial in t with finite support.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(std::int64_t exponent, std::int64_t coefficient = 1) {
    LaurentPolynomial p;
    p.add_term(exponent, coefficient);
    return p;
  }

  /// coefficients[i] is the coefficient of t^(lowest + i).
  static LaurentPolynomial from_coefficients(std::int64_t lowest, const std::vector<std::int64_t>& coefficients) {
    LaurentPolynomial p;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
      p.add_term(lowest + static_cast<std::int64_t>(i), coefficients[i]);
    return p;
  }

  void add_term(std::int64_t exponent, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int64_t coefficient(std::int64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  std::int64_t min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  const std::map<std::int64_t, std::int64_t>& terms() const& noexcept { return terms_; }
  /// By value on temporaries, so `for (... : alexander(k).terms())` is safe.
  std::map<std::int64_t, std::int64_t> terms() && { return std::move(terms_); }

  bool is_symmetric() const {
    for (const auto& [e, c] : terms_)
      if (coefficient(-e) != c) return false;
    return true;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::map<std::int64_t, std::int64_t> terms_;
};

/// Highest power first, e.g. "t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4".
inline std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto [e, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace gamma4
