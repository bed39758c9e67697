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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gamma4/errors.hpp"

namespace gamma4 {

/// Non-increasing, eventually-zero sequence V_0, V_1, ... with unit steps.
/// Stored with trailing zeros trimmed to a single 0; indexing past the end
/// yields 0.
class ViSequence {
 public:
  ViSequence() : values_{0} {}

  static ViSequence from_values(std::vector<std::int64_t> values) {
    if (values.empty() || values.back() != 0)
      throw MalformedSequence("V-sequence must end in 0");
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      std::int64_t step = values[i] - values[i + 1];
      if (values[i] < 0 || step < 0 || step > 1)
        throw MalformedSequence("V-sequence step at index " + std::to_string(i) +
                                " is not in {0,1}");
    }
    while (values.size() > 1 && values[values.size() - 2] == 0) values.pop_back();
    ViSequence v;
    v.values_ = std::move(values);
    return v;
  }

  std::int64_t operator[](std::int64_t i) const noexcept {
    if (i < 0) i = 0;
    return static_cast<std::size_t>(i) < values_.size() ? values_[static_cast<std::size_t>(i)] : 0;
  }

  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// min { i : V_i = 0 }.
  std::int64_t first_zero() const noexcept { return static_cast<std::int64_t>(values_.size()) - 1; }

  friend bool operator==(const ViSequence&, const ViSequence&) = default;

 private:
  std::vector<std::int64_t> values_;
};

inline std::string to_string(const ViSequence& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v.values()[i]);
  }
  return s + "]";
}

}  // namespace gamma4
