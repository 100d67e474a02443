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

#ifndef REGEN_RATIONAL_HPP
#define REGEN_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace regen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& x, int digits);

/// Parses plain decimals such as "405.225" or "12". Throws ArgumentError.
Rational parse_decimal(std::string_view text);

/// 10^-(digits after the point) of a printed decimal, e.g. 0.01 for "0.33".
Rational last_digit_unit(std::string_view text);

double to_double(const Rational& x);

/// Smallest w with 2^w >= x, for x >= 1.
unsigned ceil_log2(const BigInt& x);

}  // namespace regen

#endif  // REGEN_RATIONAL_HPP
