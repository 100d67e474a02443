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

#include "regen/extfield.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

namespace regen::ext {

namespace {

// Dense polynomials, ascending, trimmed so the last entry is nonzero. The
// zero polynomial is the empty vector.
using Dense = std::vector<std::uint32_t>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t degree_of(const Poly& poly) { return poly.empty() ? 0 : poly.size() - 1; }

bool is_monic(const Poly& poly) { return !poly.empty() && poly.back() == 1; }

// Remainder of a modulo a nonzero divisor.
Dense rem(const PrimeField& f, Dense a, Dense divisor) {
  trim(a);
  trim(divisor);
  const std::size_t dd = divisor.size() - 1;
  const std::uint32_t lead_inv = f.inv(divisor.back());
  while (a.size() >= divisor.size()) {
    const std::uint32_t c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t j = 0; j <= dd; ++j) {
      a[shift + j] = f.sub(a[shift + j], f.mul(c, divisor[j]));
    }
    trim(a);
  }
  return a;
}

Dense mul_mod(const PrimeField& f, const Dense& a, const Dense& b, const Poly& mod) {
  if (a.empty() || b.empty()) return {};
  Dense prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
    }
  }
  return rem(f, std::move(prod), mod);
}

Dense pow_mod(const PrimeField& f, Dense base, std::uint64_t e, const Poly& mod) {
  Dense result = rem(f, Dense{1}, mod);
  base = rem(f, std::move(base), mod);
  while (e != 0) {
    if (e & 1u) result = mul_mod(f, result, base, mod);
    e >>= 1;
    if (e != 0) base = mul_mod(f, base, base, mod);
  }
  return result;
}

Dense sub(const PrimeField& f, Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

Dense gcd(const PrimeField& f, Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(q^j) mod poly.
Dense frobenius_x(const PrimeField& f, const Poly& poly, std::uint64_t j) {
  Dense y = rem(f, Dense{0, 1}, poly);
  for (std::uint64_t i = 0; i < j; ++i) y = pow_mod(f, y, f.modulus(), poly);
  return y;
}

std::uint64_t group_order(const PrimeField& f, unsigned m) {
  const std::uint64_t qm = gf::saturating_pow(f.modulus(), m);
  if (qm > kMaxGroupOrder) {
    throw ArgumentError("extension F_" + std::to_string(f.modulus()) + "^" +
                        std::to_string(m) + " is too large to materialize");
  }
  return qm - 1;
}

}  // namespace

bool is_irreducible(const PrimeField& field, const Poly& poly) {
  if (!is_monic(poly) || poly.size() < 2) return false;
  const auto m = static_cast<unsigned>(degree_of(poly));
  const Dense x = rem(field, Dense{0, 1}, poly);
  if (frobenius_x(field, poly, m) != x) return false;
  for (std::uint64_t r : gf::prime_divisors(m)) {
    Dense h = sub(field, frobenius_x(field, poly, m / r), x);
    Dense g = gcd(field, std::move(h), Dense(poly.begin(), poly.end()));
    if (g.size() != 1) return false;
  }
  return true;
}

bool is_primitive(const PrimeField& field, const Poly& poly) {
  if (!is_monic(poly) || poly.size() < 2 || poly[0] % field.modulus() == 0) return false;
  if (!is_irreducible(field, poly)) return false;
  const auto m = static_cast<unsigned>(degree_of(poly));
  const std::uint64_t order = group_order(field, m);
  const Dense one{1};
  const Dense x{0, 1};
  if (pow_mod(field, x, order, poly) != one) return false;
  for (std::uint64_t p : gf::prime_divisors(order)) {
    if (pow_mod(field, x, order / p, poly) == one) return false;
  }
  return true;
}

Poly find_primitive_poly(const PrimeField& field, unsigned m) {
  if (m == 0) throw ArgumentError("primitive polynomial degree must be >= 1");
  const std::uint64_t q = field.modulus();
  const std::uint64_t candidates = group_order(field, m) + 1;
  // code enumerates (p_0, ..., p_{m-1}) as base-q digits with p_{m-1} most
  // significant, so ascending codes are lexicographic from the top down.
  for (std::uint64_t code = 0; code < candidates; ++code) {
    if (code % q == 0) continue;  // constant term must be nonzero
    Poly poly(m + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < m; ++i) {
      poly[i] = static_cast<std::uint32_t>(c % q);
      c /= q;
    }
    poly[m] = 1;
    if (is_primitive(field, poly)) return poly;
  }
  throw ArgumentError("no primitive polynomial found");  // unreachable
}

GfMatrix companion(const PrimeField& field, const Poly& poly) {
  if (poly.size() < 2 || poly.back() % field.modulus() != 1) {
    throw ArgumentError("companion matrix needs a monic polynomial of degree >= 1");
  }
  const std::size_t m = poly.size() - 1;
  GfMatrix c(field, m, m);
  for (std::size_t i = 1; i < m; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < m; ++i) c(i, m - 1) = field.neg(field.reduce(poly[i]));
  return c;
}

Element multiply(const PrimeField& field, const Poly& poly, const Element& a,
                 const Element& b) {
  const std::size_t m = degree_of(poly);
  Dense r = mul_mod(field, Dense(a.begin(), a.end()), Dense(b.begin(), b.end()), poly);
  r.resize(m, 0);
  return r;
}

ExtFieldRep::ExtFieldRep(PrimeField base, unsigned m, std::uint64_t cache_bound)
    : base_(base), m_(m), poly_(find_primitive_poly(base, m)), p_(base, 0, 0) {
  init(cache_bound);
}

ExtFieldRep::ExtFieldRep(PrimeField base, Poly poly, std::uint64_t cache_bound)
    : base_(base),
      m_(static_cast<unsigned>(degree_of(poly))),
      poly_(std::move(poly)),
      p_(base, 0, 0) {
  if (!is_primitive(base_, poly_)) {
    throw ArgumentError("polynomial is not primitive over F_" +
                        std::to_string(base_.modulus()));
  }
  init(cache_bound);
}

void ExtFieldRep::init(std::uint64_t cache_bound) {
  order_ = group_order(base_, m_);
  p_ = ext::companion(base_, poly_);
  const std::uint64_t count = std::min(std::max<std::uint64_t>(cache_bound, m_ - 1), order_ - 1) + 1;
  powers_.reserve(count);
  powers_.push_back(GfMatrix::identity(base_, m_));
  while (powers_.size() < count) powers_.push_back(powers_.back() * p_);
}

GfMatrix ExtFieldRep::power(std::uint64_t e) const {
  e %= order_;
  if (e < powers_.size()) return powers_[e];
  GfMatrix result = GfMatrix::identity(base_, m_);
  GfMatrix base = p_;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

GfMatrix ExtFieldRep::inverse_power(std::uint64_t e) const {
  e %= order_;
  return power(e == 0 ? 0 : order_ - e);
}

GfMatrix ExtFieldRep::theta(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m_) {
    throw ArgumentError("theta expects " + std::to_string(m_) +
                        " coefficients, got " + std::to_string(coeffs.size()));
  }
  GfMatrix out(base_, m_, m_);
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t c = base_.reduce(coeffs[i]);
    if (c != 0) out += linalg::scale(powers_[i], c);
  }
  return out;
}

GfMatrix ExtFieldRep::theta_big(const std::vector<std::vector<Element>>& a) const {
  const std::size_t s = a.size();
  const std::size_t t = s == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != t) throw ArgumentError("theta_big: ragged input");
  }
  GfMatrix out(base_, s * m_, t * m_);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < t; ++j) out.set_block(i * m_, j * m_, theta(a[i][j]));
  return out;
}

Element ExtFieldRep::element_from_index(std::uint64_t code) const {
  Element e(m_, 0);
  const std::uint64_t q = base_.modulus();
  for (unsigned i = 0; i < m_; ++i) {
    e[i] = static_cast<std::uint32_t>(code % q);
    code /= q;
  }
  return e;
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t modulus) {
  if (modulus == 0 || std::gcd(q, modulus) != 1) {
    throw ArgumentError("q must be a unit modulo " + std::to_string(modulus));
  }
  if (modulus == 1) return 1;
  std::uint64_t x = q % modulus;
  std::uint64_t t = 1;
  while (x != 1) {
    x = gf::mulmod(x, q, modulus);
    ++t;
  }
  return t;
}

std::vector<std::uint64_t> coset_of(std::uint64_t q, std::uint64_t modulus,
                                    std::uint64_t s) {
  if (modulus == 0 || std::gcd(q, modulus) != 1) {
    throw ArgumentError("cyclotomic cosets need gcd(q, modulus) = 1");
  }
  const std::uint64_t start = s % modulus;
  std::vector<std::uint64_t> coset{start};
  for (std::uint64_t x = gf::mulmod(start, q, modulus); x != start;
       x = gf::mulmod(x, q, modulus)) {
    coset.push_back(x);
  }
  return coset;
}

bool same_coset(std::uint64_t q, std::uint64_t modulus, std::uint64_t a,
                std::uint64_t b) {
  for (auto x : coset_of(q, modulus, a)) {
    if (x == b % modulus) return true;
  }
  return false;
}

CosetTable coset_partition(std::uint64_t q, std::uint64_t modulus) {
  if (modulus == 0 || std::gcd(q, modulus) != 1) {
    throw ArgumentError("cyclotomic cosets need gcd(q, modulus) = 1 (q=" +
                        std::to_string(q) + ", modulus=" + std::to_string(modulus) + ")");
  }
  if (modulus > (1ull << 24)) {
    throw ArgumentError("modulus " + std::to_string(modulus) +
                        " too large for a full coset partition");
  }
  CosetTable table{q, modulus, {}};
  std::vector<bool> seen(modulus, false);
  for (std::uint64_t s = 0; s < modulus; ++s) {
    if (seen[s]) continue;
    auto coset = coset_of(q, modulus, s);
    for (auto x : coset) seen[x] = true;
    table.cosets.push_back(std::move(coset));
  }
  return table;
}

std::vector<std::uint64_t> select_representatives(const CosetTable& table,
                                                  std::size_t n) {
  if (table.size() < n) {
    throw NotEnoughCosets("need " + std::to_string(n) + " cosets modulo " +
                          std::to_string(table.modulus) + ", only " +
                          std::to_string(table.size()) + " exist");
  }
  std::vector<std::uint64_t> reps;
  reps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) reps.push_back(table.cosets[i].front());
  return reps;
}

std::vector<std::uint64_t> select_representatives(std::uint64_t q,
                                                  std::uint64_t modulus,
                                                  std::size_t n) {
  std::vector<std::uint64_t> reps;
  std::unordered_set<std::uint64_t> taken;
  for (std::uint64_t s = 0; reps.size() < n; ++s) {
    if (s >= modulus) {
      throw NotEnoughCosets("need " + std::to_string(n) + " cosets modulo " +
                            std::to_string(modulus) + ", only " +
                            std::to_string(reps.size()) + " exist");
    }
    if (taken.contains(s)) continue;
    for (auto x : coset_of(q, modulus, s)) taken.insert(x);
    reps.push_back(s);
  }
  return reps;
}

}  // namespace regen::ext
