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

#include "regen/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace regen::linalg {

namespace {

std::string shape(const GfMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_field(const GfMatrix& a, const GfMatrix& b) {
  if (a.field() != b.field()) throw FieldMismatch();
}

void require_same_shape(const GfMatrix& a, const GfMatrix& b, const char* op) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": " + shape(a) + " vs " +
                            shape(b));
  }
}

}  // namespace

GfMatrix::GfMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

GfMatrix::GfMatrix(PrimeField field, std::size_t rows, std::size_t cols,
                   std::vector<std::uint32_t> values)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(values)) {
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("matrix " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " given " +
                            std::to_string(data_.size()) + " values");
  }
  for (auto& v : data_) v = field_.reduce(v);
}

GfMatrix GfMatrix::identity(PrimeField field, std::size_t n) {
  GfMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GfMatrix GfMatrix::from_rows(
    PrimeField field,
    std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<std::uint32_t> values;
  values.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged row list");
    values.insert(values.end(), row.begin(), row.end());
  }
  return GfMatrix(field, r, c, std::move(values));
}

GfMatrix GfMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                         std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw DimensionMismatch("block out of range of " + shape(*this));
  }
  GfMatrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0),
                nc, out.data_.begin() + static_cast<std::ptrdiff_t>(r * nc));
  }
  return out;
}

void GfMatrix::set_block(std::size_t r0, std::size_t c0, const GfMatrix& src) {
  require_same_field(*this, src);
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) {
    throw DimensionMismatch("set_block: " + shape(src) + " at (" +
                            std::to_string(r0) + "," + std::to_string(c0) +
                            ") exceeds " + shape(*this));
  }
  for (std::size_t r = 0; r < src.rows_; ++r) {
    std::copy_n(src.data_.begin() + static_cast<std::ptrdiff_t>(r * src.cols_),
                src.cols_,
                data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0));
  }
}

GfMatrix GfMatrix::transpose() const {
  GfMatrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

bool GfMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](auto v) { return v == 0; });
}

bool GfMatrix::is_symmetric() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

GfMatrix& GfMatrix::operator+=(const GfMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] = field_.add(data_[i], other.data_[i]);
  return *this;
}

GfMatrix& GfMatrix::operator-=(const GfMatrix& other) {
  require_same_shape(*this, other, "sub");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] = field_.sub(data_[i], other.data_[i]);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GfMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : " [");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << "]";
  }
  return os << "]";
}

GfMatrix operator+(GfMatrix a, const GfMatrix& b) {
  a += b;
  return a;
}

GfMatrix operator-(GfMatrix a, const GfMatrix& b) {
  a -= b;
  return a;
}

GfMatrix operator*(const GfMatrix& a, const GfMatrix& b) { return matmul(a, b); }

GfMatrix scale(const GfMatrix& a, std::uint32_t s) {
  GfMatrix out = a;
  const auto& f = a.field();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f.mul(a(r, c), s);
  return out;
}

GfMatrix matmul(const GfMatrix& a, const GfMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + shape(a) + " * " + shape(b));
  }
  const auto& f = a.field();
  const std::size_t n = a.rows(), inner = a.cols(), m = b.cols();
  // Each product is below 2^32, so 2^32 terms fit a uint64 accumulator.
  std::vector<std::uint64_t> acc(m);
  GfMatrix out(f, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < inner; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < m; ++j) acc[j] += aik * brow[j];
    }
    for (std::size_t j = 0; j < m; ++j) out(i, j) = f.reduce(acc[j]);
  }
  return out;
}

RowEchelon row_reduce(const GfMatrix& a) {
  RowEchelon result{a, {}};
  GfMatrix& m = result.reduced;
  const auto& f = m.field();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(pivot_row, c));
    }
    const std::uint32_t inv = f.inv(m(pivot_row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) = f.mul(m(pivot_row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row) continue;
      const std::uint32_t factor = m(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(pivot_row, c)));
      }
    }
    result.pivot_cols.push_back(col);
    ++pivot_row;
  }
  return result;
}

std::size_t rank(const GfMatrix& a) { return row_reduce(a).rank(); }

GfMatrix solve(const GfMatrix& a, const GfMatrix& rhs) {
  require_same_field(a, rhs);
  if (!a.is_square()) throw DimensionMismatch("solve: non-square " + shape(a));
  if (rhs.rows() != a.rows()) {
    throw DimensionMismatch("solve: " + shape(a) + " with rhs " + shape(rhs));
  }
  const std::size_t n = a.rows();
  GfMatrix aug(a.field(), n, n + rhs.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, n, rhs);
  RowEchelon re = row_reduce(aug);
  std::size_t r = 0;
  while (r < re.pivot_cols.size() && re.pivot_cols[r] < n) ++r;
  if (r < n) throw SingularMatrix(r, n);
  return re.reduced.block(0, n, n, rhs.cols());
}

GfMatrix invert(const GfMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("invert: non-square " + shape(a));
  return solve(a, GfMatrix::identity(a.field(), a.rows()));
}

GfMatrix nullspace(const GfMatrix& a) {
  const RowEchelon re = row_reduce(a);
  const auto& f = a.field();
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : re.pivot_cols) is_pivot[c] = true;
  GfMatrix basis(f, n, n - re.rank());
  std::size_t out_col = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(free, out_col) = 1;
    for (std::size_t r = 0; r < re.rank(); ++r) {
      basis(re.pivot_cols[r], out_col) = f.neg(re.reduced(r, free));
    }
    ++out_col;
  }
  return basis;
}

GfMatrix kron(const GfMatrix& a, const GfMatrix& b) {
  require_same_field(a, b);
  const auto& f = a.field();
  GfMatrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::uint32_t s = a(i, j);
      if (s == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          out(i * b.rows() + r, j * b.cols() + c) = f.mul(s, b(r, c));
    }
  return out;
}

GfMatrix vec(const GfMatrix& a) {
  GfMatrix out(a.field(), a.rows() * a.cols(), 1);
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r) out(c * a.rows() + r, 0) = a(r, c);
  return out;
}

GfMatrix unvec(const GfMatrix& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) {
    throw DimensionMismatch("unvec: " + shape(v) + " into " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  }
  GfMatrix out(v.field(), rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = v(c * rows + r, 0);
  return out;
}

GfMatrix hstack(std::span<const GfMatrix> parts) {
  if (parts.empty()) throw DimensionMismatch("hstack of nothing");
  std::size_t cols = 0;
  for (const auto& p : parts) {
    require_same_field(parts.front(), p);
    if (p.rows() != parts.front().rows()) throw DimensionMismatch("hstack: row counts differ");
    cols += p.cols();
  }
  GfMatrix out(parts.front().field(), parts.front().rows(), cols);
  std::size_t at = 0;
  for (const auto& p : parts) {
    out.set_block(0, at, p);
    at += p.cols();
  }
  return out;
}

GfMatrix vstack(std::span<const GfMatrix> parts) {
  if (parts.empty()) throw DimensionMismatch("vstack of nothing");
  std::size_t rows = 0;
  for (const auto& p : parts) {
    require_same_field(parts.front(), p);
    if (p.cols() != parts.front().cols()) throw DimensionMismatch("vstack: column counts differ");
    rows += p.rows();
  }
  GfMatrix out(parts.front().field(), rows, parts.front().cols());
  std::size_t at = 0;
  for (const auto& p : parts) {
    out.set_block(at, 0, p);
    at += p.rows();
  }
  return out;
}

GfMatrix stein_system(const GfMatrix& a, const GfMatrix& b) {
  GfMatrix sys = kron(b.transpose(), a);
  const auto& f = sys.field();
  for (std::size_t i = 0; i < sys.rows(); ++i) sys(i, i) = f.sub(sys(i, i), 1);
  return sys;
}

GfMatrix solve_stein(const GfMatrix& a, const GfMatrix& b, const GfMatrix& c) {
  require_same_field(a, b);
  require_same_field(a, c);
  const std::size_t m = a.rows();
  for (const GfMatrix* x : {&a, &b, &c}) {
    if (x->rows() != m || x->cols() != m) {
      throw DimensionMismatch("solve_stein: operands must all be " +
                              std::to_string(m) + "x" + std::to_string(m));
    }
  }
  try {
    return unvec(solve(stein_system(a, b), vec(c)), m, m);
  } catch (const SingularMatrix& e) {
    throw SingularStein(e.rank());
  }
}

}  // namespace regen::linalg
