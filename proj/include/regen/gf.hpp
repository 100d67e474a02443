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

#ifndef REGEN_GF_HPP
#define REGEN_GF_HPP

#include <cstdint>
#include <ostream>
#include <vector>

#include "regen/errors.hpp"

namespace regen::gf {

/// Prime field F_q, 2 <= q <= 2^16.
///
/// Elements are plain residues in [0, q). The raw uint32 helpers below are
/// what the matrix kernels use; FieldElement wraps them with a field tag.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  explicit PrimeField(std::uint32_t q);

  std::uint32_t modulus() const noexcept { return q_; }

  std::uint32_t reduce(std::uint64_t v) const noexcept {
    return static_cast<std::uint32_t>(v % q_);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws ZeroInverse for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

class FieldElement {
 public:
  FieldElement(PrimeField field, std::uint64_t value)
      : field_(field), value_(field.reduce(value)) {}

  std::uint32_t value() const noexcept { return value_; }
  const PrimeField& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement inv() const { return {field_, field_.inv(value_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  PrimeField field_;
  std::uint32_t value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime factors of n with multiplicity, ascending. factorize(1) is empty.
/// Valid for 1 <= n <= 2^63.
std::vector<std::uint64_t> factorize(std::uint64_t n);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;

/// base^exp, or UINT64_MAX if the result does not fit.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept;

}  // namespace regen::gf

#endif  // REGEN_GF_HPP
