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

#ifndef REGEN_EXTFIELD_HPP
#define REGEN_EXTFIELD_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "regen/gf.hpp"
#include "regen/linalg.hpp"

// F_{q^m} realized inside F_q^{m x m} as the span of powers of a companion
// matrix, plus the q-cyclotomic coset machinery used to pick node indices.

namespace regen::ext {

using gf::PrimeField;
using linalg::GfMatrix;

/// Polynomial over F_q as an ascending coefficient list; monic polynomials
/// carry their leading 1, so x^3 + x + 1 is {1, 1, 0, 1}.
using Poly = std::vector<std::uint32_t>;

/// Element of F_{q^m} in the basis 1, x, ..., x^{m-1} (length m).
using Element = std::vector<std::uint32_t>;

/// Largest supported extension: q^m - 1 must stay below 2^63 so that the
/// group order can be factored.
constexpr std::uint64_t kMaxGroupOrder = 1ull << 63;

/// Rabin irreducibility test for a monic polynomial.
bool is_irreducible(const PrimeField& field, const Poly& poly);

/// True if poly is monic, irreducible, and x has order q^m - 1 modulo poly.
bool is_primitive(const PrimeField& field, const Poly& poly);

/// Smallest monic primitive polynomial of degree m, where candidates are
/// ordered by their coefficient vector read from the x^{m-1} coefficient
/// down to the constant term.
Poly find_primitive_poly(const PrimeField& field, unsigned m);

/// Companion matrix: ones on the subdiagonal, last column -p_0 .. -p_{m-1}.
/// Throws ArgumentError for a non-monic or constant polynomial.
GfMatrix companion(const PrimeField& field, const Poly& poly);

/// Multiplication in F_q[x] / (poly); the reference arithmetic that theta
/// maps onto matrix products.
Element multiply(const PrimeField& field, const Poly& poly, const Element& a,
                 const Element& b);

class ExtFieldRep {
 public:
  /// Uses find_primitive_poly(base, m). Powers P^0..P^cache_bound are
  /// materialized eagerly; larger exponents are computed on demand.
  ExtFieldRep(PrimeField base, unsigned m, std::uint64_t cache_bound = 0);
  /// Throws ParameterError if poly is not primitive.
  ExtFieldRep(PrimeField base, Poly poly, std::uint64_t cache_bound = 0);

  const PrimeField& base() const noexcept { return base_; }
  unsigned degree() const noexcept { return m_; }
  const Poly& polynomial() const noexcept { return poly_; }
  const GfMatrix& companion() const noexcept { return p_; }
  /// q^m - 1, the multiplicative order of the companion matrix.
  std::uint64_t order() const noexcept { return order_; }
  std::size_t cached_powers() const noexcept { return powers_.size(); }

  /// P^e, with e reduced modulo order().
  GfMatrix power(std::uint64_t e) const;
  /// P^{-e}.
  GfMatrix inverse_power(std::uint64_t e) const;

  /// theta(y) = sum_i y_i P^i. Throws ArgumentError on a length mismatch.
  GfMatrix theta(std::span<const std::uint32_t> coeffs) const;
  /// Block matrix whose (i, j) block is theta(a[i][j]).
  GfMatrix theta_big(const std::vector<std::vector<Element>>& a) const;

  /// The field element whose coefficients are the base-q digits of code,
  /// least significant digit first. Codes 0 .. q^m - 1 enumerate F_{q^m}.
  Element element_from_index(std::uint64_t code) const;

 private:
  void init(std::uint64_t cache_bound);

  PrimeField base_;
  unsigned m_;
  Poly poly_;
  GfMatrix p_;
  std::uint64_t order_ = 0;
  std::vector<GfMatrix> powers_;
};

/// Partition of Z_modulus into q-cyclotomic cosets.
///
/// Cosets are listed in order of their smallest element, and each coset in
/// generation order s, sq, sq^2, ...
struct CosetTable {
  std::uint64_t q = 0;
  std::uint64_t modulus = 0;
  std::vector<std::vector<std::uint64_t>> cosets;

  std::size_t size() const noexcept { return cosets.size(); }
};

/// Smallest t > 0 with q^t = 1 (mod modulus); 1 for modulus 1.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t modulus);

/// The q-cyclotomic coset of s modulo modulus, in generation order.
std::vector<std::uint64_t> coset_of(std::uint64_t q, std::uint64_t modulus,
                                    std::uint64_t s);

bool same_coset(std::uint64_t q, std::uint64_t modulus, std::uint64_t a,
                std::uint64_t b);

/// Full partition. Requires gcd(q, modulus) = 1 and modulus <= 2^24.
CosetTable coset_partition(std::uint64_t q, std::uint64_t modulus);

/// The smallest element of each of the first n cosets (ascending).
/// Throws NotEnoughCosets if the table has fewer than n cosets.
std::vector<std::uint64_t> select_representatives(const CosetTable& table,
                                                   std::size_t n);

/// Same selection as above without materializing the partition; usable for
/// any modulus that fits in 64 bits.
std::vector<std::uint64_t> select_representatives(std::uint64_t q,
                                                  std::uint64_t modulus,
                                                  std::size_t n);

}  // namespace regen::ext

#endif  // REGEN_EXTFIELD_HPP
