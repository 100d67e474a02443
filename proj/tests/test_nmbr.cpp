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
#include "regen/nmbr.hpp"
#include "sweep.hpp"

using namespace regen;
using namespace regen::nmbr;

namespace {

// Data matrix written from the layout: S from its upper triangle row by
// row, T row by row, zero lower-right block.
oracle::Mat oracle_data(const NmbrParams& p, const std::vector<std::uint32_t>& file) {
  const std::size_t b = p.b, n = p.order();
  oracle::Mat x = oracle::zeros(n, n);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = i; j < b; ++j) x[i][j] = x[j][i] = file[pos++];
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = b; j < n; ++j) x[i][j] = x[j][i] = file[pos++];
  return x;
}

oracle::Mat oracle_node(const NmbrParams& p, const oracle::Mat& c, std::uint64_t order,
                        std::uint64_t e) {
  const std::size_t m = p.m();
  oracle::Mat row = oracle::zeros(m, p.order());
  for (std::size_t t = 0; t < p.d; ++t) {
    oracle::Mat blk = t == 0 ? oracle::eye(m)
                      : e == order ? oracle::zeros(m, m)
                                   : oracle::mat_pow(c, e * t, p.q);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) row[i][t * m + j] = blk[i][j];
  }
  return row;
}

}  // namespace

TEST_CASE("parameter validation reports the violated condition") {
  CHECK_NOTHROW(validate_params(4, 2, 3, 2, 4));
  CHECK_THROWS_AS(validate_params(4, 2, 3, 4, 4), InvalidField);
  CHECK_THROWS_AS(validate_params(4, 2, 4, 2, 4), DegreeOrderViolation);  // d = n
  CHECK_THROWS_AS(validate_params(4, 3, 2, 2, 6), DegreeOrderViolation);  // k > d
  CHECK_THROWS_AS(validate_params(4, 2, 3, 2, 5), A2Violation);
  CHECK_THROWS_AS(validate_params(5, 2, 4, 2, 4), A1Violation);  // 2^2 < 5
  CHECK_NOTHROW(validate_params(5, 2, 4, 2, 6));
  // systematic needs q^m >= n + d - k
  CHECK_THROWS_AS(validate_params(4, 2, 3, 2, 4, Encoding::SystematicCauchy), A1Violation);
  CHECK_NOTHROW(validate_params(4, 2, 3, 2, 6, Encoding::SystematicCauchy));
  try {
    validate_params(5, 2, 4, 2, 4);
  } catch (const ParameterError& e) {
    CHECK(e.condition() == "A1");
  }
  // The first n exponents are 0 .. n-1.
  CHECK(validate_params(4, 2, 3, 2, 4).exponents == std::vector<std::uint64_t>{0, 1, 2, 3});
  CHECK(validate_params(4, 2, 3, 2, 6, Encoding::SystematicCauchy).exponents.empty());
}

TEST_CASE("metrics at the desk instance") {
  const auto mt = metrics(4, 2, 3, 4);
  CHECK(mt.B == 18);
  CHECK(mt.alpha == 12);
  CHECK(mt.beta == 4);
  CHECK(mt.C == Rational(20));
  CHECK(mt.rate == Rational(BigInt(18), BigInt(48)));
  CHECK(mt.B_over_C == Rational(BigInt(9), BigInt(10)));
}

TEST_CASE("B/C closed form and the cut-set bound over a parameter grid") {
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t d = k; d <= 8; ++d)
      for (std::size_t mult = 1; mult <= 5; ++mult) {
        const std::size_t b = k * mult;
        const auto mt = metrics(d + 1, k, d, b);
        CHECK(mt.B_over_C == mt.B_over_C_closed_form);
        CHECK(mt.alpha == mt.beta * d);
        // B = C exactly when b = k, strictly below otherwise
        if (b == k) {
          CHECK(Rational(mt.B) == mt.C);
        } else {
          CHECK(Rational(mt.B) < mt.C);
        }
        CHECK(mt.B == BigInt(validate_params(d + 1, k, d, 65521, b).file_size()));
      }
}

TEST_CASE("data matrix layout and extraction") {
  const NmbrCode code(validate_params(5, 2, 4, 2, 6));
  const auto file = sweep::random_file(code, 3);
  const auto x = code.build_data_matrix(file);
  CHECK(oracle::from(x) == oracle_data(code.params(), file));
  CHECK(x.is_symmetric());
  const std::size_t b = code.params().b, n = code.params().order();
  CHECK(x.block(b, b, n - b, n - b).is_zero());
  CHECK(code.extract_file(x) == file);
  CHECK_THROWS_AS(code.build_data_matrix(std::vector<std::uint32_t>(file.size() - 1)), ArgumentError);
}

TEST_CASE("shares equal M_j X with M_j built from companion powers") {
  for (auto [n, k, d, q, b] : {std::tuple{4u, 2u, 3u, 2u, 4u}, {5u, 2u, 4u, 2u, 6u},
                               {6u, 3u, 4u, 3u, 6u}, {8u, 2u, 3u, 3u, 4u}}) {
    const NmbrCode code(validate_params(n, k, d, q, b));
    const auto c = oracle::companion(oracle::Poly(code.rep().polynomial().begin(),
                                                  code.rep().polynomial().end()), q);
    const auto file = sweep::random_file(code, n * 31 + d);
    const auto x = oracle_data(code.params(), file);
    const auto shares = code.encode(file);
    REQUIRE(shares.size() == n);
    for (std::size_t j = 1; j <= n; ++j) {
      const auto mj = oracle_node(code.params(), c, code.rep().order(), code.params().exponents[j - 1]);
      CHECK(oracle::from(code.node_matrix(j)) == mj);
      CHECK(oracle::from(shares[j - 1].payload) == oracle::mul(mj, x, q));
      CHECK(shares[j - 1].payload.size() == code.alpha());
    }
  }
}

TEST_CASE("exponent q^m - 1 encodes the zero element") {
  // q^m = n = 4: the last node has exponent 3 = q^m - 1.
  const NmbrCode code(validate_params(4, 2, 3, 2, 4));
  REQUIRE(code.params().exponents.back() == code.rep().order());
  const auto m4 = code.node_matrix(4);
  CHECK(m4.block(0, 0, 2, 2) == linalg::GfMatrix::identity(code.field(), 2));
  CHECK(m4.block(0, 2, 2, 4).is_zero());
}

TEST_CASE("systematic encoder: identity blocks and Cauchy blocks") {
  const NmbrCode code(validate_params(6, 2, 3, 3, 4, Encoding::SystematicCauchy));
  const std::uint32_t q = 3;
  const std::size_t m = code.params().m(), d = code.params().d, k = code.params().k;
  const auto& enc = code.encoding_matrix();
  const auto c = oracle::companion(oracle::Poly(code.rep().polynomial().begin(),
                                                code.rep().polynomial().end()), q);
  auto digits = [&](std::uint64_t v) {
    oracle::Poly e(m);
    for (auto& x : e) {
      x = static_cast<std::int64_t>(v % q);
      v /= q;
    }
    return e;
  };
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t t = 0; t < d; ++t)
      CHECK(oracle::from(enc.block(j * m, t * m, m, m)) ==
            (t == j ? oracle::eye(m) : oracle::zeros(m, m)));
  for (std::size_t cidx = 0; cidx + k < code.n(); ++cidx)
    for (std::size_t i = 0; i < d; ++i) {
      oracle::Poly diff = digits(i), v = digits(d + cidx);
      for (std::size_t t = 0; t < m; ++t) diff[t] = oracle::md(diff[t] - v[t], q);
      const auto blk = oracle::from(enc.block((k + cidx) * m, i * m, m, m));
      CHECK(oracle::mul(blk, oracle::theta(diff, c, q), q) == oracle::eye(m));
    }
  // Systematic nodes store rows of the data matrix verbatim.
  const auto file = sweep::random_file(code, 9);
  const auto x = code.build_data_matrix(file);
  const auto shares = code.encode(file);
  for (std::size_t j = 0; j < k; ++j) CHECK(shares[j].payload == x.block(j * m, 0, m, x.cols()));
}

TEST_CASE("exhaustive repair and reconstruction at desk scale") {
  for (auto [kind, n, k, d, q, b] :
       {std::tuple{CodeKind::Nmbr, 4u, 2u, 3u, 2u, 4u}, {CodeKind::Nmbr, 5u, 2u, 4u, 2u, 6u},
        {CodeKind::Nmbr, 6u, 3u, 5u, 2u, 9u}, {CodeKind::Nmbr, 5u, 2u, 3u, 3u, 4u},
        {CodeKind::Nmbr, 5u, 3u, 3u, 2u, 9u}, {CodeKind::NmbrSystematic, 5u, 2u, 3u, 2u, 6u},
        {CodeKind::NmbrSystematic, 6u, 3u, 4u, 5u, 6u}}) {
    const auto code = make_code(kind, n, k, d, q, b);
    for (std::uint64_t seed : {1u, 2u}) {
      const auto res = sweep::exhaustive(*code, sweep::random_file(*code, seed));
      CAPTURE(n);
      CAPTURE(d);
      CHECK(res.all_ok());
    }
    CHECK(code->d() * code->beta() == code->alpha());
  }
}

TEST_CASE("codec rejects malformed requests") {
  const NmbrCode code(validate_params(4, 2, 3, 2, 4));
  const auto shares = code.encode(sweep::random_file(code, 4));
  CHECK_THROWS_AS(code.reconstruct(std::vector<NodeShare>{shares[0]}), ArgumentError);
  CHECK_THROWS_AS(code.reconstruct(std::vector<NodeShare>{shares[0], shares[0]}), ArgumentError);
  CHECK_THROWS_AS(code.repair_helper(shares[0], 1), ArgumentError);
  CHECK_THROWS_AS(code.repair_helper(shares[0], 5), ArgumentError);
  std::vector<RepairPacket> packets;
  for (std::size_t h : {1, 2}) packets.push_back(code.repair_helper(shares[h - 1], 3));
  CHECK_THROWS_AS(code.repair_assemble(packets), ArgumentError);  // d - 1 helpers
  packets.push_back(code.repair_helper(shares[3], 3));
  CHECK_NOTHROW(code.repair_assemble(packets));
  packets[2] = code.repair_helper(shares[3], 2);
  CHECK_THROWS_AS(code.repair_assemble(packets), ArgumentError);  // mixed targets
  NodeShare bad = shares[0];
  bad.payload = linalg::GfMatrix(code.field(), 1, 1);
  CHECK_THROWS_AS(code.repair_helper(bad, 2), DimensionMismatch);
}

TEST_CASE("tampered shares never decode to the original silently") {
  const NmbrCode code(validate_params(5, 2, 4, 2, 6));
  const auto file = sweep::random_file(code, 12);
  const auto shares = code.encode(file);
  oracle::Rng rng(99);
  int corruption_errors = 0;
  for (int t = 0; t < 50; ++t) {
    std::vector<NodeShare> picked{shares[0], shares[2]};
    auto& p = picked[rng.below(2)].payload;
    const std::size_t r = rng.below(p.rows()), c = rng.below(p.cols());
    p(r, c) ^= 1u;
    std::vector<std::uint32_t> out;
    try {
      out = code.reconstruct(picked);
    } catch (const CorruptionError&) {
      ++corruption_errors;
      continue;
    }
    CHECK(out != file);
  }
  // Flips inside the S columns break symmetry and are caught outright.
  CHECK(corruption_errors > 0);
}
