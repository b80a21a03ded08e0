// Copyright 2026 The Authors.
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

#ifndef MATKIT_RATIONAL_H_
#define MATKIT_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace matkit {

// Arbitrary-precision integers and exact rationals. Every comparison that
// feeds a gap or multiplier argument goes through these, never doubles.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational MakeRational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt Numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt Denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

// Smallest integer >= r.
BigInt Ceil(const Rational& r);
// Largest integer <= r.
BigInt Floor(const Rational& r);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string ToString(const Rational& r);

// Accepts "p", "p/q" or a finite decimal such as "0.25"; the result is exact.
Rational ParseRational(std::string_view text);

double ToDouble(const Rational& r);

}  // namespace matkit

#endif  // MATKIT_RATIONAL_H_
