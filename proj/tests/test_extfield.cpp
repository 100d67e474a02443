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

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "regen/errors.hpp"
#include "regen/extfield.hpp"

using namespace regen::ext;
using regen::gf::PrimeField;
using regen::linalg::GfMatrix;

namespace {

oracle::Poly as_oracle(const Poly& p) { return oracle::Poly(p.begin(), p.end()); }

Element random_element(oracle::Rng& rng, unsigned m, std::uint32_t q) {
  Element e(m);
  for (auto& v : e) v = static_cast<std::uint32_t>(rng.below(q));
  return e;
}

bool has_factor(const oracle::Poly& f, std::int64_t p) {
  // Brute force: try every monic divisor of degree 1 .. deg/2.
  const std::size_t m = f.size() - 1;
  for (std::size_t deg = 1; deg <= m / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      const auto g = oracle::candidate(code, deg, p);
      // remainder of f by g
      oracle::Poly r = f;
      for (std::size_t top = m + 1; top-- > deg;) {
        const std::int64_t c = r[top];
        if (c == 0) continue;
        for (std::size_t t = 0; t <= deg; ++t) r[top - deg + t] = oracle::md(r[top - deg + t] - c * g[t], p);
      }
      r.resize(deg);
      if (oracle::trim(r).empty()) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("smallest primitive polynomials match a brute-force search") {
  for (auto [q, maxm] : {std::pair{2u, 10u}, {3u, 5u}, {5u, 3u}, {7u, 2u}}) {
    const PrimeField f(q);
    for (unsigned m = 1; m <= maxm; ++m) {
      const Poly p = find_primitive_poly(f, m);
      CHECK(as_oracle(p) == oracle::brute_primitive(m, q));
      CHECK(is_primitive(f, p));
    }
  }
  // Known values over GF(2), ascending coefficients.
  CHECK(find_primitive_poly(PrimeField(2), 3) == Poly{1, 1, 0, 1});
  CHECK(find_primitive_poly(PrimeField(2), 4) == Poly{1, 1, 0, 0, 1});
  CHECK(find_primitive_poly(PrimeField(2), 8) == Poly{1, 0, 1, 1, 1, 0, 0, 0, 1});
}

TEST_CASE("irreducibility agrees with exhaustive factor search") {
  for (auto [q, maxm] : {std::pair{2u, 8u}, {3u, 4u}}) {
    const PrimeField f(q);
    for (unsigned m = 1; m <= maxm; ++m) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < m; ++i) count *= q;
      for (std::uint64_t code = 0; code < count; ++code) {
        const auto o = oracle::candidate(code, m, q);
        const Poly p(o.begin(), o.end());
        CHECK(is_irreducible(f, p) == !has_factor(o, q));
      }
    }
  }
}

TEST_CASE("primitivity agrees with the brute-force order of x") {
  const PrimeField f(2);
  for (unsigned m = 2; m <= 7; ++m) {
    const std::uint64_t order = (1ull << m) - 1;
    for (std::uint64_t code = 0; code < (1ull << m); ++code) {
      const auto o = oracle::candidate(code, m, 2);
      CHECK(is_primitive(f, Poly(o.begin(), o.end())) == (oracle::order_of_x(o, 2, order) == order));
    }
  }
}

TEST_CASE("companion matrix layout") {
  const PrimeField f(2);
  CHECK(companion(f, {1, 1, 0, 1}) == GfMatrix::from_rows(f, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}));
  const PrimeField f5(5);
  CHECK(oracle::from(companion(f5, {2, 3, 1})) == oracle::companion({2, 3, 1}, 5));
  CHECK_THROWS_AS(companion(f5, {2, 3, 4}), regen::ArgumentError);
  CHECK_THROWS_AS(ExtFieldRep(f, Poly{1, 0, 1}), regen::ParameterError);  // x^2 + 1 = (x+1)^2
}

TEST_CASE("P has multiplicative order exactly q^m - 1") {
  for (auto [q, m] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 6u}, {3u, 2u}, {3u, 3u}, {5u, 2u}}) {
    const ExtFieldRep rep(PrimeField(q), m);
    const auto c = oracle::from(rep.companion());
    CHECK(rep.order() + 1 == static_cast<std::uint64_t>(std::pow(q, m)));
    CHECK(oracle::mat_pow(c, rep.order(), q) == oracle::eye(m));
    for (std::uint64_t e = 1; e < rep.order(); ++e) CHECK(oracle::mat_pow(c, e, q) != oracle::eye(m));
    // cached and on-demand powers agree
    for (std::uint64_t e = 0; e < 2 * rep.order() + 3; ++e)
      CHECK(oracle::from(rep.power(e)) == oracle::mat_pow(c, e % rep.order(), q));
    CHECK(rep.inverse_power(3) * rep.power(3) == GfMatrix::identity(rep.base(), m));
  }
}

TEST_CASE("theta is a ring embedding of F_{q^m}") {
  oracle::Rng rng(17);
  for (auto [q, m] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 6u}, {3u, 3u}, {7u, 2u}}) {
    const PrimeField f(q);
    const ExtFieldRep rep(f, m);
    const auto poly = as_oracle(rep.polynomial());
    const auto c = oracle::companion(poly, q);
    for (int t = 0; t < 100; ++t) {
      const Element a = random_element(rng, m, q), b = random_element(rng, m, q);
      const auto ta = rep.theta(a), tb = rep.theta(b);
      CHECK(oracle::from(ta) == oracle::theta(oracle::Poly(a.begin(), a.end()), c, q));
      const auto prod = oracle::mulmod(oracle::Poly(a.begin(), a.end()),
                                       oracle::Poly(b.begin(), b.end()), poly, q);
      CHECK(oracle::from(ta * tb) == oracle::theta(prod, c, q));
      CHECK(multiply(f, rep.polynomial(), a, b) == Element(prod.begin(), prod.end()));
      Element sum(m);
      for (unsigned i = 0; i < m; ++i) sum[i] = f.add(a[i], b[i]);
      CHECK(rep.theta(sum) == ta + tb);
      const bool zero = oracle::trim(oracle::Poly(a.begin(), a.end())).empty();
      CHECK(regen::linalg::rank(ta) == (zero ? 0u : m));
    }
  }
  const ExtFieldRep rep(PrimeField(2), 3);
  const std::vector<std::uint32_t> wrong(4, 0);
  CHECK_THROWS_AS(rep.theta(wrong), regen::ArgumentError);
}

TEST_CASE("theta_big applies theta blockwise") {
  const PrimeField f(2);
  const ExtFieldRep rep(f, 3);
  const std::vector<std::vector<Element>> a = {{{1, 0, 0}, {0, 1, 0}}, {{1, 1, 0}, {0, 0, 0}}};
  const auto big = rep.theta_big(a);
  CHECK(big.rows() == 6);
  CHECK(big.block(0, 0, 3, 3) == GfMatrix::identity(f, 3));
  CHECK(big.block(0, 3, 3, 3) == rep.companion());
  CHECK(big.block(3, 0, 3, 3) == GfMatrix::identity(f, 3) + rep.companion());
  CHECK(big.block(3, 3, 3, 3).is_zero());
}

TEST_CASE("element_from_index reads base-q digits") {
  const ExtFieldRep rep(PrimeField(3), 3);
  CHECK(rep.element_from_index(0) == Element{0, 0, 0});
  CHECK(rep.element_from_index(5) == Element{2, 1, 0});
  CHECK(rep.element_from_index(26) == Element{2, 2, 2});
  std::set<Element> all;
  for (std::uint64_t i = 0; i < 27; ++i) all.insert(rep.element_from_index(i));
  CHECK(all.size() == 27);
}

TEST_CASE("cyclotomic cosets match closure") {
  for (auto [q, mod] : {std::pair{2ull, 15ull}, {2ull, 63ull}, {3ull, 26ull}, {2ull, 21ull},
                        {5ull, 124ull}, {2ull, 1ull}}) {
    const auto table = coset_partition(q, mod);
    const auto expect = oracle::cosets(q, mod);
    REQUIRE(table.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
      CHECK(std::set<std::uint64_t>(table.cosets[i].begin(), table.cosets[i].end()) == expect[i]);
      CHECK(table.cosets[i].front() == *expect[i].begin());
      CHECK(coset_of(q, mod, *expect[i].rbegin()).size() == expect[i].size());
    }
    for (std::uint64_t a = 0; a < mod; ++a)
      for (std::uint64_t b = 0; b < mod; b += 3) {
        bool same = false;
        for (const auto& c : expect) same = same || (c.count(a) && c.count(b));
        CHECK(same_coset(q, mod, a, b) == same);
      }
  }
}

TEST_CASE("multiplicative order by brute force") {
  for (std::uint64_t mod = 1; mod < 200; ++mod) {
    for (std::uint64_t q : {2ull, 3ull, 5ull}) {
      if (std::gcd(q, mod) != 1) continue;
      std::uint64_t t = 1, x = q % mod;
      while (x != 1 % mod) {
        x = x * q % mod;
        ++t;
      }
      CHECK(multiplicative_order(q, mod) == t);
    }
  }
}

TEST_CASE("representative selection") {
  const auto reps = select_representatives(coset_partition(2, 63), 13);
  CHECK(reps == std::vector<std::uint64_t>{0, 1, 3, 5, 7, 9, 11, 13, 15, 21, 23, 27, 31});
  CHECK_THROWS_AS(select_representatives(coset_partition(2, 63), 14), regen::NotEnoughCosets);
  for (auto [q, mod] : {std::pair{2ull, 63ull}, {2ull, 255ull}, {3ull, 80ull}, {2ull, 1023ull},
                        {7ull, 48ull}}) {
    const auto table = coset_partition(q, mod);
    for (std::size_t n = 1; n <= table.size(); ++n)
      CHECK(select_representatives(q, mod, n) == select_representatives(table, n));
  }
  // Large moduli work without a table.
  const auto big = select_representatives(2, (1ull << 62) - 1, 5);
  CHECK(big == std::vector<std::uint64_t>{0, 1, 3, 5, 7});
}
