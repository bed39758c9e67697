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

// Numerical semigroups <a,b> and formal (symmetric, cofinite) semigroups.
//
// A formal semigroup of genus g is determined by its gap set, a g-element
// subset of [0, 2g-1] containing exactly one of s, 2g-1-s for every s.  The
// enumerating function lists its elements in increasing order; past the
// conductor 2g it is k -> g + k.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gamma4/errors.hpp"
#include "gamma4/vi_sequence.hpp"

namespace gamma4 {

class FormalSemigroup {
 public:
  /// The semigroup N (genus 0).
  FormalSemigroup() = default;

  static FormalSemigroup from_gaps(std::vector<std::int64_t> gaps) {
    std::sort(gaps.begin(), gaps.end());
    if (std::adjacent_find(gaps.begin(), gaps.end()) != gaps.end())
      throw MalformedSequence("duplicate gap");
    const auto g = static_cast<std::int64_t>(gaps.size());
    std::vector<char> is_gap(static_cast<std::size_t>(2 * g), 0);
    for (auto s : gaps) {
      if (s < 0 || s >= 2 * g)
        throw MalformedSequence("gap " + std::to_string(s) + " outside [0, 2g-1]");
      is_gap[static_cast<std::size_t>(s)] = 1;
    }
    if (g > 0 && is_gap[0]) throw MalformedSequence("0 is always an element");
    for (std::int64_t s = 0; s < 2 * g; ++s) {
      if (is_gap[static_cast<std::size_t>(s)] == is_gap[static_cast<std::size_t>(2 * g - 1 - s)])
        throw MalformedSequence("gap set is not symmetric at " + std::to_string(s));
    }
    FormalSemigroup out;
    out.gaps_ = std::move(gaps);
    out.elements_.reserve(static_cast<std::size_t>(g));
    for (std::int64_t s = 0; s < 2 * g; ++s)
      if (!is_gap[static_cast<std::size_t>(s)]) out.elements_.push_back(s);
    return out;
  }

  std::int64_t genus() const noexcept { return static_cast<std::int64_t>(gaps_.size()); }
  std::int64_t conductor() const noexcept { return 2 * genus(); }
  std::span<const std::int64_t> gaps() const noexcept { return gaps_; }

  bool contains(std::int64_t s) const {
    if (s < 0) return false;
    if (s >= conductor()) return true;
    return !std::binary_search(gaps_.begin(), gaps_.end(), s);
  }

  /// Gamma(k): the k-th smallest element (0-indexed).
  std::int64_t enumerate(std::int64_t k) const {
    if (k < 0) throw InvalidArgument("enumerating function needs k >= 0");
    if (k >= genus()) return genus() + k;
    return elements_[static_cast<std::size_t>(k)];
  }

  friend bool operator==(const FormalSemigroup& a, const FormalSemigroup& b) { return a.gaps_ == b.gaps_; }

 private:
  std::vector<std::int64_t> gaps_;
  std::vector<std::int64_t> elements_;  // elements below the conductor, exactly g of them
};

/// Callable view k -> Gamma(k) over a semigroup that must outlive it.
class EnumeratingFunction {
 public:
  explicit EnumeratingFunction(const FormalSemigroup& s) : s_(&s) {}
  std::int64_t operator()(std::int64_t k) const { return s_->enumerate(k); }
  const FormalSemigroup& semigroup() const noexcept { return *s_; }

 private:
  const FormalSemigroup* s_;
};

inline std::int64_t enumerating(const FormalSemigroup& s, std::int64_t k) { return s.enumerate(k); }

/// <a,b> = { ma + nb : m,n >= 0 }, genus (a-1)(b-1)/2.
inline FormalSemigroup from_generators(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw InvalidArgument("generators must be positive");
  if (std::gcd(a, b) != 1)
    throw NotCoprime("<" + std::to_string(a) + "," + std::to_string(b) + "> generators are not coprime");
  const std::int64_t g = (a - 1) * (b - 1) / 2;
  const std::int64_t limit = 2 * g;
  std::vector<bool> member(static_cast<std::size_t>(limit + 1), false);
  for (std::int64_t x = 0; x <= limit; x += a)
    for (std::int64_t y = x; y <= limit; y += b) member[static_cast<std::size_t>(y)] = true;
  std::vector<std::int64_t> gaps;
  gaps.reserve(static_cast<std::size_t>(g));
  for (std::int64_t s = 0; s < limit; ++s)
    if (!member[static_cast<std::size_t>(s)]) gaps.push_back(s);
  return FormalSemigroup::from_gaps(std::move(gaps));
}

/// Independent sieve: the k-th element of <a,b> found by marking every
/// representable integer up to (a-1)(b-1)+k (s is in <a,b> iff s-a or s-b
/// is) and counting.
inline std::int64_t enumerating_bruteforce(std::int64_t a, std::int64_t b, std::int64_t k) {
  if (a < 1 || b < 1 || k < 0) throw InvalidArgument("enumerating_bruteforce: bad arguments");
  if (std::gcd(a, b) != 1) throw NotCoprime("generators are not coprime");
  const std::int64_t limit = (a - 1) * (b - 1) + k;
  std::vector<bool> member(static_cast<std::size_t>(limit + 1), false);
  member[0] = true;
  for (std::int64_t s = 1; s <= limit; ++s) {
    bool via_a = s >= a && member[static_cast<std::size_t>(s - a)];
    bool via_b = s >= b && member[static_cast<std::size_t>(s - b)];
    member[static_cast<std::size_t>(s)] = via_a || via_b;
  }
  std::int64_t seen = -1;
  for (std::int64_t s = 0; s <= limit; ++s) {
    if (member[static_cast<std::size_t>(s)] && ++seen == k) return s;
  }
  throw InternalError("sieve bound too small");
}

/// V_j = #(gaps in [g+j, infinity)), j = 0..g.
inline ViSequence vi_of(const FormalSemigroup& s) {
  const std::int64_t g = s.genus();
  std::vector<std::int64_t> v(static_cast<std::size_t>(g + 1), 0);
  auto gaps = s.gaps();
  // gaps is sorted; count from the top.
  std::size_t idx = gaps.size();
  for (std::int64_t j = g; j >= 0; --j) {
    while (idx > 0 && gaps[idx - 1] >= g + j) --idx;
    v[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(gaps.size() - idx);
  }
  return ViSequence::from_values(std::move(v));
}

/// Inverse of vi_of: g = first zero of V; s in [g, 2g-1] is a gap iff V
/// drops at s-g; the lower half follows by symmetry.
inline FormalSemigroup from_vi(const ViSequence& v) {
  const std::int64_t g = v.first_zero();
  std::vector<char> gap(static_cast<std::size_t>(2 * g), 0);
  for (std::int64_t s = g; s < 2 * g; ++s) gap[static_cast<std::size_t>(s)] = v[s - g] > v[s - g + 1];
  for (std::int64_t s = 0; s < g; ++s) gap[static_cast<std::size_t>(s)] = !gap[static_cast<std::size_t>(2 * g - 1 - s)];
  std::vector<std::int64_t> gaps;
  for (std::int64_t s = 0; s < 2 * g; ++s)
    if (gap[static_cast<std::size_t>(s)]) gaps.push_back(s);
  if (static_cast<std::int64_t>(gaps.size()) != g)
    throw MalformedSequence("V-sequence " + to_string(v) + " does not come from a genus-" +
                            std::to_string(g) + " formal semigroup");
  return FormalSemigroup::from_gaps(std::move(gaps));
}

}  // namespace gamma4
