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

#ifndef REGEN_TESTS_ORACLE_HPP
#define REGEN_TESTS_ORACLE_HPP

// Reference arithmetic for the tests. Everything here is deliberately naive
// and shares no code with the library: plain int64 matrices reduced mod p,
// schoolbook polynomial products, brute-force orders and cosets.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "regen/linalg.hpp"

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;
using Poly = std::vector<std::int64_t>;  // ascending coefficients

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::uint64_t below(std::uint64_t n) { return gen() % n; }
  std::mt19937_64 gen;
};

inline std::int64_t md(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<std::int64_t>(c, 0)); }

inline Mat eye(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat from(const regen::linalg::GfMatrix& g) {
  Mat m = zeros(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) m[i][j] = g(i, j);
  return m;
}

inline regen::linalg::GfMatrix to(const regen::gf::PrimeField& f, const Mat& m) {
  const std::size_t r = m.size(), c = r ? m[0].size() : 0;
  regen::linalg::GfMatrix g(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) g(i, j) = static_cast<std::uint32_t>(m[i][j]);
  return g;
}

inline Mat mul(const Mat& a, const Mat& b, std::int64_t p) {
  Mat out = zeros(a.size(), b.empty() ? 0 : b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) {
      std::int64_t s = 0;
      for (std::size_t t = 0; t < b.size(); ++t) s = (s + a[i][t] * b[t][j]) % p;
      out[i][j] = s;
    }
  return out;
}

inline Mat add(const Mat& a, const Mat& b, std::int64_t p) {
  Mat out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = (a[i][j] + b[i][j]) % p;
  return out;
}

inline Mat scaled(const Mat& a, std::int64_t s, std::int64_t p) {
  Mat out = a;
  for (auto& row : out)
    for (auto& v : row) v = md(v * s, p);
  return out;
}

inline Mat transpose(const Mat& a) {
  Mat out = zeros(a.empty() ? 0 : a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  // extended Euclid, unlike the library's Fermat inverse
  std::int64_t t = 0, nt = 1, r = p, nr = md(a, p);
  while (nr != 0) {
    const std::int64_t qt = r / nr;
    t -= qt * nt;
    std::swap(t, nt);
    r -= qt * nr;
    std::swap(r, nr);
  }
  return md(t, p);
}

/// Rank by column-by-column elimination on a copy.
inline std::size_t rank(Mat a, std::int64_t p) {
  std::size_t rk = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && md(a[piv][c], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      const std::int64_t f = md(a[r][c] * inv_mod(a[rk][c], p), p);
      for (std::size_t j = c; j < cols; ++j) a[r][j] = md(a[r][j] - f * a[rk][j], p);
    }
    ++rk;
  }
  return rk;
}

inline Mat kron(const Mat& a, const Mat& b, std::int64_t p) {
  const std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
  Mat out = zeros(ar * br, ac * bc);
  for (std::size_t i = 0; i < ar * br; ++i)
    for (std::size_t j = 0; j < ac * bc; ++j) out[i][j] = a[i / br][j / bc] * b[i % br][j % bc] % p;
  return out;
}

/// Column-major stacking as an n x 1 matrix.
inline Mat vec(const Mat& a) {
  Mat out;
  for (std::size_t j = 0; j < a[0].size(); ++j)
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back({a[i][j]});
  return out;
}

inline Mat random_mat(Rng& rng, std::size_t r, std::size_t c, std::int64_t p) {
  Mat m = zeros(r, c);
  for (auto& row : m)
    for (auto& v : row) v = static_cast<std::int64_t>(rng.below(p));
  return m;
}

inline Mat random_invertible(Rng& rng, std::size_t n, std::int64_t p) {
  for (;;) {
    Mat m = random_mat(rng, n, n, p);
    if (rank(m, p) == n) return m;
  }
}

inline Mat random_symmetric(Rng& rng, std::size_t n, std::int64_t p) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = static_cast<std::int64_t>(rng.below(p));
  return m;
}

// Polynomials over F_p.

inline Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

/// a * b mod the monic polynomial f (schoolbook product, then long division).
inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
  const std::size_t m = f.size() - 1;
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t top = prod.size(); top-- > m;) {
    const std::int64_t c = prod[top];
    if (c == 0) continue;
    for (std::size_t t = 0; t <= m; ++t) prod[top - m + t] = md(prod[top - m + t] - c * f[t], p);
  }
  prod.resize(m, 0);
  return prod;
}

/// Order of x modulo f by repeated multiplication; 0 if x is not a unit or
/// the order exceeds `limit`.
inline std::uint64_t order_of_x(const Poly& f, std::int64_t p, std::uint64_t limit) {
  const std::size_t m = f.size() - 1;
  if (f[0] == 0) return 0;
  Poly x(m, 0), one(m, 0);
  one[0] = 1;
  if (m == 1) {
    x[0] = md(-f[0], p);
  } else {
    x[1] = 1;
  }
  Poly cur = x;
  for (std::uint64_t e = 1; e <= limit; ++e) {
    if (cur == one) return e;
    cur = mulmod(cur, x, f, p);
  }
  return 0;
}

/// Monic degree-m polynomials in the library's search order: the integer
/// whose base-p digits are (c_{m-1}, ..., c_0), most significant first,
/// ascending.
inline Poly candidate(std::uint64_t code, std::size_t m, std::int64_t p) {
  Poly f(m + 1, 0);
  f[m] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    f[i] = static_cast<std::int64_t>(code % p);
    code /= p;
  }
  return f;
}

inline Poly brute_primitive(std::size_t m, std::int64_t p) {
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < m; ++i) order *= p;
  --order;
  for (std::uint64_t code = 0;; ++code) {
    Poly f = candidate(code, m, p);
    if (order_of_x(f, p, order) == order) return f;
  }
}

/// Companion matrix written straight from the definition.
inline Mat companion(const Poly& f, std::int64_t p) {
  const std::size_t m = f.size() - 1;
  Mat c = zeros(m, m);
  for (std::size_t i = 1; i < m; ++i) c[i][i - 1] = 1;
  for (std::size_t i = 0; i < m; ++i) c[i][m - 1] = md(-f[i], p);
  return c;
}

inline Mat mat_pow(Mat a, std::uint64_t e, std::int64_t p) {
  Mat r = eye(a.size());
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

/// sum_i y_i C^i.
inline Mat theta(const Poly& y, const Mat& c, std::int64_t p) {
  const std::size_t m = c.size();
  Mat out = zeros(m, m), pw = eye(m);
  for (std::size_t i = 0; i < m; ++i) {
    out = add(out, scaled(pw, i < y.size() ? y[i] : 0, p), p);
    pw = mul(pw, c, p);
  }
  return out;
}

/// Coset partition by closure, listed by smallest element.
inline std::vector<std::set<std::uint64_t>> cosets(std::uint64_t q, std::uint64_t mod) {
  std::vector<std::set<std::uint64_t>> out;
  std::vector<bool> seen(mod, false);
  for (std::uint64_t s = 0; s < mod; ++s) {
    if (seen[s]) continue;
    std::set<std::uint64_t> c;
    std::uint64_t x = s;
    while (!c.count(x)) {
      c.insert(x);
      seen[x] = true;
      x = x * q % mod;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace oracle

#endif  // REGEN_TESTS_ORACLE_HPP
