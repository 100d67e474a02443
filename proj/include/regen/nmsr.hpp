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

#ifndef REGEN_NMSR_HPP
#define REGEN_NMSR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "regen/code.hpp"
#include "regen/extfield.hpp"
#include "regen/rational.hpp"

// Nearly-MSR codes for d = 2k - 2. Node indices are taken from distinct
// q-cyclotomic cosets so that every Stein system met during reconstruction
// is nonsingular.

namespace regen::nmsr {

struct NmsrParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint32_t q = 2;
  std::size_t b = 0;
  /// gcd(k - 1, q^{b/k} - 1).
  std::uint64_t g = 1;
  /// (q^{b/k} - 1) / g, or 0 when q^{b/k} - 1 does not fit in 63 bits.
  std::uint64_t modulus = 0;
  /// i_1..i_n; left empty when modulus is 0.
  std::vector<std::uint64_t> indices;

  std::size_t d() const noexcept { return 2 * k - 2; }
  std::size_t m() const noexcept { return b / k; }
  /// Order of S_1 and S_2, b(k-1)/k.
  std::size_t r() const noexcept { return m() * (k - 1); }
  std::size_t alpha() const noexcept { return m() * r(); }
  std::size_t beta() const noexcept { return m() * m(); }
  std::uint64_t file_size() const noexcept {
    return static_cast<std::uint64_t>(r()) * (r() + 1);
  }
};

/// Checks the field, k >= 2 and n >= 2k - 1, B2 (k | b), B1
/// (n g b/k <= q^{b/k} - 1) and selects coset representatives.
NmsrParams validate_params(std::size_t n, std::size_t k, std::uint32_t q,
                           std::size_t b);

/// Replaces the selected indices. With check_cosets the new indices must lie
/// in pairwise distinct cosets (NotEnoughCosets otherwise); without it any
/// values in [0, modulus) are accepted, which is how collisions are staged
/// in tests.
NmsrParams with_indices(NmsrParams params, std::vector<std::uint64_t> indices,
                        bool check_cosets = true);

struct NmsrMetrics {
  BigInt B;
  BigInt alpha;
  BigInt beta;
  Rational B_over_alpha_k;
  /// 1 - 1/k + 1/b, evaluated independently of B/(alpha k).
  Rational B_over_alpha_k_closed_form;
  Rational rate;
};

NmsrMetrics metrics(std::size_t n, std::size_t k, std::size_t b);
inline NmsrMetrics metrics(const NmsrParams& p) { return metrics(p.n, p.k, p.b); }

class NmsrCode final : public RegeneratingCode {
 public:
  explicit NmsrCode(NmsrParams params);

  const NmsrParams& params() const noexcept { return params_; }
  const ext::ExtFieldRep& rep() const noexcept { return rep_; }

  /// [S_1; S_2], each filled from its upper triangle row by row.
  GfMatrix build_data_matrix(std::span<const std::uint32_t> file) const;
  std::vector<std::uint32_t> extract_file(const GfMatrix& x) const;

  /// Phi_j = (I, P^{i_j}, ..., P^{i_j (k-2)}), (b/k) x r.
  GfMatrix phi(std::size_t node) const;
  /// Lambda_j = P^{i_j (k-1)}.
  GfMatrix lambda(std::size_t node) const;
  /// M_j = (Phi_j | Lambda_j Phi_j).
  GfMatrix node_matrix(std::size_t node) const;
  /// Phi (bn/k x r), block-diagonal Lambda, and M = (Phi | Lambda Phi).
  GfMatrix phi_matrix() const;
  GfMatrix lambda_matrix() const;
  GfMatrix encoding_matrix() const;

  /// The Gamma matrix of a reconstruction, exposed for inspection.
  GfMatrix gamma(std::span<const NodeShare> shares) const;

  CodeKind kind() const override { return CodeKind::Nmsr; }
  std::size_t n() const override { return params_.n; }
  std::size_t k() const override { return params_.k; }
  std::size_t d() const override { return params_.d(); }
  std::size_t b() const override { return params_.b; }
  const gf::PrimeField& field() const override { return rep_.base(); }
  std::size_t file_size() const override { return params_.file_size(); }
  std::size_t alpha() const override { return params_.alpha(); }
  std::size_t beta() const override { return params_.beta(); }
  std::size_t share_rows() const override { return params_.m(); }
  std::size_t share_cols() const override { return params_.r(); }
  std::size_t packet_order() const override { return params_.m(); }
  const ext::Poly& polynomial() const override { return rep_.polynomial(); }
  std::vector<std::uint64_t> exponents() const override { return params_.indices; }

  std::vector<NodeShare> encode(std::span<const std::uint32_t> file) const override;
  /// payload = M_helper X Phi_target^T.
  RepairPacket repair_helper(const NodeShare& share, std::size_t target) const override;
  NodeShare repair_assemble(std::span<const RepairPacket> packets) const override;
  /// Throws CosetCollision if a Stein system is singular.
  std::vector<std::uint32_t> reconstruct(std::span<const NodeShare> shares) const override;

 private:
  NmsrParams params_;
  ext::ExtFieldRep rep_;
};

/// The (n-1, k-1, 2k-1) code obtained by forcing one parent node p to store
/// zeros. Files are mapped into the parent's file space through a precode
/// whose columns span {x : M_p X(x) = 0}; node p is then simulated as an
/// all-zero participant. p is the lowest-numbered parent node whose share map
/// has rank alpha (a node with index 0 stores Phi_p (S_1 + S_2), which has
/// lower rank). Child nodes are the remaining parent nodes in order.
class PuncturedNmsr final : public RegeneratingCode {
 public:
  /// Throws ParameterError("puncture", ...) if no node's constraints have
  /// rank alpha.
  explicit PuncturedNmsr(NmsrParams parent);

  const NmsrCode& parent() const noexcept { return parent_; }
  /// The zero-forced parent node.
  std::size_t punctured_node() const noexcept { return punctured_; }
  /// Parent id of child node c.
  std::size_t parent_node(std::size_t child) const noexcept {
    return child < punctured_ ? child : child + 1;
  }
  std::size_t child_node(std::size_t parent) const noexcept {
    return parent < punctured_ ? parent : parent - 1;
  }
  /// B' x (B' - alpha), columns linearly independent.
  const GfMatrix& precode() const noexcept { return precode_; }
  /// The alpha x B' constraint matrix M_p X(.) whose kernel is the precode.
  const GfMatrix& constraints() const noexcept { return constraints_; }

  CodeKind kind() const override { return CodeKind::NmsrPunctured; }
  std::size_t n() const override { return parent_.n() - 1; }
  std::size_t k() const override { return parent_.k() - 1; }
  std::size_t d() const override { return parent_.d() - 1; }
  std::size_t b() const override { return parent_.b(); }
  const gf::PrimeField& field() const override { return parent_.field(); }
  std::size_t file_size() const override { return precode_.cols(); }
  std::size_t alpha() const override { return parent_.alpha(); }
  std::size_t beta() const override { return parent_.beta(); }
  std::size_t share_rows() const override { return parent_.share_rows(); }
  std::size_t share_cols() const override { return parent_.share_cols(); }
  std::size_t packet_order() const override { return parent_.packet_order(); }
  const ext::Poly& polynomial() const override { return parent_.polynomial(); }
  /// The parent's n + 1 indices.
  std::vector<std::uint64_t> exponents() const override { return parent_.exponents(); }

  std::vector<NodeShare> encode(std::span<const std::uint32_t> file) const override;
  RepairPacket repair_helper(const NodeShare& share, std::size_t target) const override;
  NodeShare repair_assemble(std::span<const RepairPacket> packets) const override;
  std::vector<std::uint32_t> reconstruct(std::span<const NodeShare> shares) const override;

 private:
  NmsrCode parent_;
  std::size_t punctured_ = 0;
  GfMatrix constraints_;
  GfMatrix precode_;
  std::vector<std::size_t> pivot_rows_;
  GfMatrix decoder_;
};

struct PuncturedMetrics {
  BigInt B;
  BigInt alpha;
  Rational B_over_alpha_k;
  Rational rate;
};

/// B = B' - alpha over the child's (n' - 1, k' - 1).
PuncturedMetrics punctured_metrics(std::size_t parent_n, std::size_t parent_k,
                                   std::size_t b);

}  // namespace regen::nmsr

#endif  // REGEN_NMSR_HPP
