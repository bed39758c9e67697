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

#include <stdexcept>
#include <string>

namespace gamma4 {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InvalidKnot : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

class MalformedSequence : public Error {
 public:
  using Error::Error;
};

class MalformedExponents : public Error {
 public:
  using Error::Error;
};

class AsymmetricPolynomial : public Error {
 public:
  using Error::Error;
};

/// A bifiltered complex that violates d^2 = 0, the grading rule or the
/// filtration rule.
class InvalidComplex : public Error {
 public:
  using Error::Error;
};

class NotSingleTower : public Error {
 public:
  using Error::Error;
};

/// The expression is outside what the router can evaluate (genus cap or
/// complex-size cap exceeded).
class Unsupported : public Error {
 public:
  using Error::Error;
};

class OddEulerNumber : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant, e.g. a non-exact polynomial division.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gamma4
