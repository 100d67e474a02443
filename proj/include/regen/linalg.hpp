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

#ifndef REGEN_LINALG_HPP
#define REGEN_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "regen/gf.hpp"

namespace regen::linalg {

using gf::FieldElement;
using gf::PrimeField;

/// Dense row-major matrix over a prime field.
class GfMatrix {
 public:
  GfMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  /// Values are reduced mod q.
  GfMatrix(PrimeField field, std::size_t rows, std::size_t cols,
           std::vector<std::uint32_t> values);

  static GfMatrix zero(PrimeField field, std::size_t rows, std::size_t cols) {
    return GfMatrix(field, rows, cols);
  }
  static GfMatrix identity(PrimeField field, std::size_t n);
  static GfMatrix from_rows(
      PrimeField field,
      std::initializer_list<std::initializer_list<std::uint32_t>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  const PrimeField& field() const noexcept { return field_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  std::uint32_t& operator()(std::size_t r, std::size_t c) noexcept {
    return data_[r * cols_ + c];
  }
  FieldElement element(std::size_t r, std::size_t c) const {
    return {field_, (*this)(r, c)};
  }
  void set(std::size_t r, std::size_t c, std::uint64_t v) {
    (*this)(r, c) = field_.reduce(v);
  }

  std::span<const std::uint32_t> values() const noexcept { return data_; }
  std::span<const std::uint32_t> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  /// Copy of the nr x nc submatrix whose top-left corner is (r0, c0).
  GfMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                 std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const GfMatrix& src);

  GfMatrix transpose() const;
  bool is_zero() const noexcept;
  bool is_symmetric() const noexcept;

  GfMatrix& operator+=(const GfMatrix& other);
  GfMatrix& operator-=(const GfMatrix& other);

  friend bool operator==(const GfMatrix& a, const GfMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

std::ostream& operator<<(std::ostream& os, const GfMatrix& m);

GfMatrix operator+(GfMatrix a, const GfMatrix& b);
GfMatrix operator-(GfMatrix a, const GfMatrix& b);
GfMatrix operator*(const GfMatrix& a, const GfMatrix& b);
GfMatrix scale(const GfMatrix& a, std::uint32_t s);

GfMatrix matmul(const GfMatrix& a, const GfMatrix& b);

/// Result of Gauss-Jordan elimination: reduced row echelon form.
struct RowEchelon {
  GfMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

RowEchelon row_reduce(const GfMatrix& a);
std::size_t rank(const GfMatrix& a);

/// Throws SingularMatrix (carrying the rank) if a is not invertible.
GfMatrix invert(const GfMatrix& a);

/// Solves a * x = rhs for square invertible a.
GfMatrix solve(const GfMatrix& a, const GfMatrix& rhs);

/// Columns form a basis of {x : a x = 0}; cols() - rank(a) columns.
/// The basis is the standard one read off the reduced form: each column has
/// a 1 in one free coordinate and 0 in the others.
GfMatrix nullspace(const GfMatrix& a);

/// Block (i, j) of the result is a(i, j) * b.
GfMatrix kron(const GfMatrix& a, const GfMatrix& b);

/// Columns of a stacked top to bottom into a column vector.
GfMatrix vec(const GfMatrix& a);
/// Inverse of vec for a rows x cols target.
GfMatrix unvec(const GfMatrix& v, std::size_t rows, std::size_t cols);

GfMatrix hstack(std::span<const GfMatrix> parts);
GfMatrix vstack(std::span<const GfMatrix> parts);

/// System matrix of the Stein equation a X b - X = c: (b^T (x) a) - I.
GfMatrix stein_system(const GfMatrix& a, const GfMatrix& b);

/// Solves a X b - X = c for square a, b, c of one order.
/// Throws SingularStein when the Kronecker system is singular, i.e. when 1 is
/// an eigenvalue of b^T (x) a.
GfMatrix solve_stein(const GfMatrix& a, const GfMatrix& b, const GfMatrix& c);

}  // namespace regen::linalg

#endif  // REGEN_LINALG_HPP
