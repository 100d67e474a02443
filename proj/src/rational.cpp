// Copyright 2026 The regen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "regen/rational.hpp"

#include "regen/errors.hpp"

namespace regen {

namespace {

BigInt pow10(int e) {
  BigInt p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace

std::string to_decimal(const Rational& x, int digits) {
  const bool negative = x < 0;
  const Rational a = negative ? Rational(-x) : x;
  const BigInt scale = pow10(digits);
  const BigInt num = boost::multiprecision::numerator(a) * scale;
  const BigInt den = boost::multiprecision::denominator(a);
  BigInt q = num / den;
  if ((num % den) * 2 >= den) ++q;
  std::string s = q.str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && q != 0) s.insert(0, "-");
  return s;
}

Rational parse_decimal(std::string_view text) {
  if (text.empty()) throw ArgumentError("empty decimal");
  bool negative = false;
  if (text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  BigInt digits = 0;
  int frac = -1;
  bool any = false;
  for (char c : text) {
    if (c == '.') {
      if (frac >= 0) throw ArgumentError("bad decimal '" + std::string(text) + "'");
      frac = 0;
      continue;
    }
    if (c < '0' || c > '9') {
      throw ArgumentError("bad decimal '" + std::string(text) + "'");
    }
    digits = digits * 10 + (c - '0');
    any = true;
    if (frac >= 0) ++frac;
  }
  if (!any) throw ArgumentError("bad decimal '" + std::string(text) + "'");
  Rational r(digits, pow10(frac < 0 ? 0 : frac));
  return negative ? Rational(-r) : r;
}

Rational last_digit_unit(std::string_view text) {
  const auto dot = text.find('.');
  const int frac = dot == std::string_view::npos
                       ? 0
                       : static_cast<int>(text.size() - dot - 1);
  return Rational(BigInt(1), pow10(frac));
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

unsigned ceil_log2(const BigInt& x) {
  if (x < 1) throw ArgumentError("ceil_log2 needs x >= 1");
  unsigned w = 0;
  BigInt p = 1;
  while (p < x) {
    p <<= 1;
    ++w;
  }
  return w;
}

}  // namespace regen
