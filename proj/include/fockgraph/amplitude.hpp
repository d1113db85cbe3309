// Copyright 2026 The fockgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "fockgraph/types.hpp"

namespace fockgraph {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact non-negative scalar coefficient of a basis state.
///
/// Every ladder prefactor is the square root of a ratio of factorials, so the
/// amplitude is kept as its square, which is always rational. Floating point
/// only appears in `magnitude()`, which is for display.
class Amplitude {
 public:
  Amplitude() = default;

  static Amplitude one() { return Amplitude(); }
  static Amplitude zero() { return Amplitude(Rational(0)); }
  /// Throws kCannotNormalize for a negative value.
  static Amplitude from_squared(Rational squared);

  const Rational& squared() const { return squared_; }
  bool is_zero() const { return squared_ == 0; }
  bool is_unit() const { return squared_ == 1; }
  double magnitude() const;

  /// Exact "p" or "p/q" rendering of the squared value.
  std::string to_string() const;

  Amplitude& operator*=(const Amplitude& other) {
    squared_ *= other.squared_;
    return *this;
  }
  friend Amplitude operator*(Amplitude lhs, const Amplitude& rhs) {
    lhs *= rhs;
    return lhs;
  }
  /// Division by a zero amplitude throws kCannotNormalize.
  friend Amplitude operator/(const Amplitude& lhs, const Amplitude& rhs);

  friend bool operator==(const Amplitude& a, const Amplitude& b) {
    return a.squared_ == b.squared_;
  }

 private:
  explicit Amplitude(Rational squared) : squared_(std::move(squared)) {}

  Rational squared_{1};
};

/// n! computed from a cached table of exact factorials.
Integer factorial(Occupation n);

/// Squared prefactor of d raising steps from occupation k: (k+d)!/k!.
Rational raising_prefactor(Occupation k, Occupation d);

/// Squared prefactor of d lowering steps from occupation k: k!/(k-d)!.
/// Requires d <= k.
Rational lowering_prefactor(Occupation k, Occupation d);

}  // namespace fockgraph
