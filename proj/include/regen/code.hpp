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

#ifndef REGEN_CODE_HPP
#define REGEN_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regen/extfield.hpp"
#include "regen/linalg.hpp"

namespace regen {

using linalg::GfMatrix;

/// What node `node` stores for one stripe.
struct NodeShare {
  std::size_t node = 0;  // 1-based
  GfMatrix payload;
};

/// What `helper` sends toward rebuilding `target`.
struct RepairPacket {
  std::size_t helper = 0;
  std::size_t target = 0;
  GfMatrix payload;
};

enum class CodeKind { Nmbr, NmbrSystematic, Nmsr, NmsrPunctured };

/// Manifest spelling: nmbr, nmbr-systematic, nmsr, nmsr-punctured.
std::string_view to_string(CodeKind kind);
/// Accepts the manifest spellings and the short CLI forms nmbr-sys and
/// nmsr-punct. Throws ArgumentError otherwise.
CodeKind parse_code_kind(std::string_view text);

/// Common surface of every codec, used by the storage layer and simulator.
/// Node ids are 1-based. Implementations are immutable after construction.
class RegeneratingCode {
 public:
  virtual ~RegeneratingCode() = default;

  virtual CodeKind kind() const = 0;
  virtual std::size_t n() const = 0;
  virtual std::size_t k() const = 0;
  virtual std::size_t d() const = 0;
  virtual std::size_t b() const = 0;
  virtual const gf::PrimeField& field() const = 0;
  /// File symbols per stripe.
  virtual std::size_t file_size() const = 0;
  virtual std::size_t alpha() const = 0;
  virtual std::size_t beta() const = 0;
  virtual std::size_t share_rows() const = 0;
  virtual std::size_t share_cols() const = 0;
  /// Packets are always square of this order.
  virtual std::size_t packet_order() const = 0;

  virtual const ext::Poly& polynomial() const = 0;
  /// Node exponents as recorded in manifests (may be empty).
  virtual std::vector<std::uint64_t> exponents() const = 0;

  virtual std::vector<NodeShare> encode(std::span<const std::uint32_t> file) const = 0;
  virtual RepairPacket repair_helper(const NodeShare& share,
                                     std::size_t target) const = 0;
  virtual NodeShare repair_assemble(std::span<const RepairPacket> packets) const = 0;
  virtual std::vector<std::uint32_t> reconstruct(
      std::span<const NodeShare> shares) const = 0;
};

/// Validates (n, k, d, q, b) for the given kind and builds the codec.
/// For Nmsr d must be 2k - 2; for NmsrPunctured d must be 2k - 1 and the
/// parent is the (n + 1, k + 1) code with the same q and b.
std::unique_ptr<RegeneratingCode> make_code(CodeKind kind, std::size_t n,
                                            std::size_t k, std::size_t d,
                                            std::uint32_t q, std::size_t b);

namespace detail {

// Shared argument checks for the codec entry points.
void check_node(std::size_t node, std::size_t n);
void check_share(const NodeShare& share, std::size_t n, std::size_t rows,
                 std::size_t cols);
/// Checks count, duplicate helpers, common target, helper != target and
/// payload shape; returns the packets sorted by helper id.
std::vector<RepairPacket> sorted_packets(std::span<const RepairPacket> packets,
                                         std::size_t expected, std::size_t n,
                                         std::size_t order);
/// Checks count, duplicates and shape; returns the shares sorted by node id.
std::vector<NodeShare> sorted_shares(std::span<const NodeShare> shares,
                                     std::size_t expected, std::size_t n,
                                     std::size_t rows, std::size_t cols);

/// Symmetric r x r matrix whose upper triangle, read row by row, is
/// symbols[0 .. r(r+1)/2).
GfMatrix symmetric_from_upper(const gf::PrimeField& field, std::size_t r,
                              std::span<const std::uint32_t> symbols);
void append_upper(const GfMatrix& s, std::vector<std::uint32_t>& out);

}  // namespace detail

}  // namespace regen

#endif  // REGEN_CODE_HPP
