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

#ifndef REGEN_NMBR_HPP
#define REGEN_NMBR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "regen/code.hpp"
#include "regen/extfield.hpp"
#include "regen/rational.hpp"

// Nearly-MBR codes: a symmetric data matrix over F_q encoded by a
// block-Vandermonde matrix whose blocks are powers of a companion matrix.

namespace regen::nmbr {

enum class Encoding { Plain, SystematicCauchy };

struct NmbrParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::uint32_t q = 2;
  std::size_t b = 0;
  Encoding encoding = Encoding::Plain;
  /// i_j = j - 1. For n = q^m the last exponent equals q^m - 1 and stands for
  /// the zero element of F_{q^m}, since P^{q^m - 1} = P^0. Empty for the
  /// systematic encoding.
  std::vector<std::uint64_t> exponents;

  std::size_t m() const noexcept { return b / k; }
  std::size_t beta() const noexcept { return m() * m(); }
  std::size_t alpha() const noexcept { return d * beta(); }
  /// b(b+1)/2 + b^2 (d/k - 1).
  std::uint64_t file_size() const noexcept;
  /// Order of the data matrix, db/k.
  std::size_t order() const noexcept { return d * m(); }
};

/// Checks, in order: the field, k <= d <= n - 1, k | b, and A1
/// (q^{b/k} >= n, or >= n + d - k for the systematic encoding). Works for
/// table-scale parameters; nothing is materialized.
NmbrParams validate_params(std::size_t n, std::size_t k, std::size_t d,
                           std::uint32_t q, std::size_t b,
                           Encoding encoding = Encoding::Plain);

struct NmbrMetrics {
  BigInt B;
  Rational C;
  BigInt alpha;
  BigInt beta;
  Rational rate;
  Rational B_over_C;
  /// (2 - (k/d)(b-1)/b) / (2 - k/d + 1/d), evaluated independently of B/C.
  Rational B_over_C_closed_form;
};

/// Exact values for any (n, k, d, b); sizes in F_q symbols.
NmbrMetrics metrics(std::size_t n, std::size_t k, std::size_t d, std::size_t b);
inline NmbrMetrics metrics(const NmbrParams& p) { return metrics(p.n, p.k, p.d, p.b); }

class NmbrCode final : public RegeneratingCode {
 public:
  explicit NmbrCode(NmbrParams params);

  const NmbrParams& params() const noexcept { return params_; }
  const ext::ExtFieldRep& rep() const noexcept { return rep_; }

  /// [[S, T], [T^T, 0]]: S filled from its upper triangle row by row, then T
  /// row by row.
  GfMatrix build_data_matrix(std::span<const std::uint32_t> file) const;
  std::vector<std::uint32_t> extract_file(const GfMatrix& x) const;

  /// All n block rows stacked: (nb/k) x (db/k).
  const GfMatrix& encoding_matrix() const noexcept { return encoder_; }
  /// Block row M_j, (b/k) x (db/k).
  GfMatrix node_matrix(std::size_t node) const;

  CodeKind kind() const override;
  std::size_t n() const override { return params_.n; }
  std::size_t k() const override { return params_.k; }
  std::size_t d() const override { return params_.d; }
  std::size_t b() const override { return params_.b; }
  const gf::PrimeField& field() const override { return rep_.base(); }
  std::size_t file_size() const override { return params_.file_size(); }
  std::size_t alpha() const override { return params_.alpha(); }
  std::size_t beta() const override { return params_.beta(); }
  std::size_t share_rows() const override { return params_.m(); }
  std::size_t share_cols() const override { return params_.order(); }
  std::size_t packet_order() const override { return params_.m(); }
  const ext::Poly& polynomial() const override { return rep_.polynomial(); }
  std::vector<std::uint64_t> exponents() const override { return params_.exponents; }

  std::vector<NodeShare> encode(std::span<const std::uint32_t> file) const override;
  /// payload = M_helper X M_target^T.
  RepairPacket repair_helper(const NodeShare& share, std::size_t target) const override;
  /// Needs exactly d packets from distinct helpers for one target.
  NodeShare repair_assemble(std::span<const RepairPacket> packets) const override;
  /// Needs exactly k shares from distinct nodes.
  std::vector<std::uint32_t> reconstruct(std::span<const NodeShare> shares) const override;

 private:
  GfMatrix plain_encoder() const;
  GfMatrix cauchy_encoder() const;

  NmbrParams params_;
  ext::ExtFieldRep rep_;
  GfMatrix encoder_;
};

}  // namespace regen::nmbr

#endif  // REGEN_NMBR_HPP
