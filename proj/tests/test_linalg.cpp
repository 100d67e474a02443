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

#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "regen/errors.hpp"
#include "regen/linalg.hpp"

using namespace regen::linalg;
using regen::gf::PrimeField;

TEST_CASE("basic matrix plumbing") {
  const PrimeField f(5);
  const auto a = GfMatrix::from_rows(f, {{1, 2, 3}, {4, 5, 6}});
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 3);
  CHECK(a(1, 1) == 0);  // 5 reduces to 0
  CHECK(a.transpose() == GfMatrix::from_rows(f, {{1, 4}, {2, 0}, {3, 1}}));
  CHECK(a.block(0, 1, 2, 2) == GfMatrix::from_rows(f, {{2, 3}, {0, 1}}));
  GfMatrix z(f, 3, 3);
  CHECK(z.is_zero());
  z.set_block(1, 1, GfMatrix::identity(f, 2));
  CHECK(z == GfMatrix::from_rows(f, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(z.is_symmetric());
  CHECK_FALSE(a.is_symmetric());
  CHECK(scale(a, 2) == GfMatrix::from_rows(f, {{2, 4, 1}, {3, 0, 2}}));
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a * a, regen::DimensionMismatch);
  CHECK_THROWS_AS(a + a.transpose(), regen::DimensionMismatch);
  CHECK_THROWS_AS(a * GfMatrix::identity(PrimeField(7), 3), regen::FieldMismatch);
}

TEST_CASE("products, kron and vec agree with the oracle") {
  oracle::Rng rng(1);
  for (std::uint32_t q : {2u, 3u, 13u}) {
    const PrimeField f(q);
    for (int t = 0; t < 50; ++t) {
      const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4), s = 1 + rng.below(4);
      const auto a = oracle::random_mat(rng, r, c, q);
      const auto b = oracle::random_mat(rng, c, s, q);
      CHECK(oracle::from(oracle::to(f, a) * oracle::to(f, b)) == oracle::mul(a, b, q));
      CHECK(oracle::from(kron(oracle::to(f, a), oracle::to(f, b))) == oracle::kron(a, b, q));
      CHECK(oracle::from(vec(oracle::to(f, a))) == oracle::vec(a));
      CHECK(unvec(vec(oracle::to(f, a)), r, c) == oracle::to(f, a));
    }
  }
}

TEST_CASE("rank matches the oracle and invert produces an inverse") {
  oracle::Rng rng(2);
  for (std::uint32_t q : {2u, 3u, 251u}) {
    const PrimeField f(q);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 1 + rng.below(6);
      auto a = oracle::random_mat(rng, n, n, q);
      // Force low rank now and then.
      if (n > 1 && rng.below(3) == 0) a[n - 1] = a[0];
      const auto g = oracle::to(f, a);
      const std::size_t rk = oracle::rank(a, q);
      CHECK(rank(g) == rk);
      if (rk == n) {
        const auto inv = invert(g);
        CHECK(g * inv == GfMatrix::identity(f, n));
        CHECK(inv * g == GfMatrix::identity(f, n));
      } else {
        try {
          invert(g);
          FAIL("singular matrix inverted");
        } catch (const regen::SingularMatrix& e) {
          CHECK(e.rank() == rk);
        }
      }
    }
  }
}

TEST_CASE("solve returns the unique solution") {
  oracle::Rng rng(3);
  const PrimeField f(7);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(5);
    const auto a = oracle::to(f, oracle::random_invertible(rng, n, 7));
    const auto x = oracle::to(f, oracle::random_mat(rng, n, 2, 7));
    CHECK(solve(a, a * x) == x);
  }
}

TEST_CASE("row_reduce yields reduced row echelon form") {
  oracle::Rng rng(4);
  const PrimeField f(3);
  for (int t = 0; t < 100; ++t) {
    const auto a = oracle::to(f, oracle::random_mat(rng, 1 + rng.below(5), 1 + rng.below(6), 3));
    const auto e = row_reduce(a);
    CHECK(e.rank() == oracle::rank(oracle::from(a), 3));
    for (std::size_t i = 0; i < e.rank(); ++i) {
      CHECK(e.reduced(i, e.pivot_cols[i]) == 1);
      for (std::size_t r = 0; r < e.reduced.rows(); ++r)
        if (r != i) CHECK(e.reduced(r, e.pivot_cols[i]) == 0);
      if (i > 0) CHECK(e.pivot_cols[i] > e.pivot_cols[i - 1]);
    }
    for (std::size_t r = e.rank(); r < e.reduced.rows(); ++r)
      for (std::size_t c = 0; c < e.reduced.cols(); ++c) CHECK(e.reduced(r, c) == 0);
  }
}

TEST_CASE("nullspace is a basis of the kernel") {
  oracle::Rng rng(5);
  for (std::uint32_t q : {2u, 5u}) {
    const PrimeField f(q);
    for (int t = 0; t < 100; ++t) {
      const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(7);
      const auto a = oracle::to(f, oracle::random_mat(rng, r, c, q));
      const auto ns = nullspace(a);
      const std::size_t rk = oracle::rank(oracle::from(a), q);
      CHECK(ns.rows() == c);
      CHECK(ns.cols() == c - rk);
      if (ns.cols() > 0) {
        CHECK((a * ns).is_zero());
        CHECK(rank(ns) == ns.cols());
      }
    }
  }
}

TEST_CASE("vectorization identity vec(AXB) = (B^T kron A) vec(X)") {
  oracle::Rng rng(6);
  const PrimeField f(2);
  for (int t = 0; t < 50; ++t) {
    const std::size_t m = 1 + rng.below(5), n = 1 + rng.below(5);
    const auto a = oracle::to(f, oracle::random_mat(rng, m, m, 2));
    const auto x = oracle::to(f, oracle::random_mat(rng, m, n, 2));
    const auto b = oracle::to(f, oracle::random_mat(rng, n, n, 2));
    CHECK(vec(a * x * b) == kron(b.transpose(), a) * vec(x));
  }
}

TEST_CASE("stein solver inverts the forward map") {
  oracle::Rng rng(7);
  for (std::uint32_t q : {2u, 3u}) {
    const PrimeField f(q);
    int solved = 0;
    for (int t = 0; t < 100; ++t) {
      const std::size_t m = 1 + rng.below(4);
      const auto a = oracle::to(f, oracle::random_mat(rng, m, m, q));
      const auto b = oracle::to(f, oracle::random_mat(rng, m, m, q));
      const auto x0 = oracle::to(f, oracle::random_mat(rng, m, m, q));
      const auto c = a * x0 * b - x0;
      const auto sys = stein_system(a, b);
      if (rank(sys) < m * m) {
        CHECK_THROWS_AS(solve_stein(a, b, c), regen::SingularStein);
        continue;
      }
      CHECK(solve_stein(a, b, c) == x0);
      ++solved;
    }
    CHECK(solved > 20);
  }
}

TEST_CASE("stein solution is the only one (exhaustive over 2x2 GF(2))") {
  const PrimeField f(2);
  oracle::Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    const auto a = oracle::to(f, oracle::random_mat(rng, 2, 2, 2));
    const auto b = oracle::to(f, oracle::random_mat(rng, 2, 2, 2));
    const auto c = oracle::to(f, oracle::random_mat(rng, 2, 2, 2));
    std::vector<GfMatrix> hits;
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
      GfMatrix x(f, 2, 2, {bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1});
      if (a * x * b - x == c) hits.push_back(x);
    }
    if (hits.size() == 1) {
      CHECK(solve_stein(a, b, c) == hits[0]);
    } else {
      CHECK_THROWS_AS(solve_stein(a, b, c), regen::SingularStein);
    }
  }
}

TEST_CASE("identity coefficients give a singular stein system") {
  const PrimeField f(3);
  const auto i = GfMatrix::identity(f, 2);
  CHECK_THROWS_AS(solve_stein(i, i, GfMatrix(f, 2, 2)), regen::SingularStein);
}
