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

#include "matkit/rational.h"

#include <cctype>
#include <string>

#include "matkit/errors.h"

namespace matkit {

BigInt Floor(const Rational& r) {
  BigInt num = Numerator(r);
  BigInt den = Denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt Ceil(const Rational& r) { return -Floor(-r); }

std::string ToString(const Rational& r) {
  if (Denominator(r) == 1) return Numerator(r).str();
  return Numerator(r).str() + "/" + Denominator(r).str();
}

namespace {

BigInt ParseInteger(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw InvalidArgument("empty number");
  BigInt value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw InvalidArgument("not a number: " + std::string(text));
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt den = ParseInteger(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator");
    return Rational(ParseInteger(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    bool negative = !text.empty() && text.front() == '-';
    std::string_view whole = text.substr(0, dot);
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      whole.remove_prefix(1);
    }
    std::string_view frac = text.substr(dot + 1);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = (whole.empty() ? BigInt(0) : ParseInteger(whole)) * scale +
                 (frac.empty() ? BigInt(0) : ParseInteger(frac));
    return Rational(negative ? BigInt(-num) : num, scale);
  }
  return Rational(ParseInteger(text));
}

double ToDouble(const Rational& r) { return r.convert_to<double>(); }

}  // namespace matkit
