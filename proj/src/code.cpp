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

#include "regen/code.hpp"

#include <algorithm>
#include <string>

#include "regen/errors.hpp"
#include "regen/nmbr.hpp"
#include "regen/nmsr.hpp"

namespace regen {

std::string_view to_string(CodeKind kind) {
  switch (kind) {
    case CodeKind::Nmbr: return "nmbr";
    case CodeKind::NmbrSystematic: return "nmbr-systematic";
    case CodeKind::Nmsr: return "nmsr";
    case CodeKind::NmsrPunctured: return "nmsr-punctured";
  }
  return "unknown";
}

CodeKind parse_code_kind(std::string_view text) {
  if (text == "nmbr") return CodeKind::Nmbr;
  if (text == "nmbr-sys" || text == "nmbr-systematic") return CodeKind::NmbrSystematic;
  if (text == "nmsr") return CodeKind::Nmsr;
  if (text == "nmsr-punct" || text == "nmsr-punctured") return CodeKind::NmsrPunctured;
  throw ArgumentError("unknown code kind '" + std::string(text) + "'");
}

std::unique_ptr<RegeneratingCode> make_code(CodeKind kind, std::size_t n, std::size_t k,
                                            std::size_t d, std::uint32_t q, std::size_t b) {
  switch (kind) {
    case CodeKind::Nmbr:
      return std::make_unique<nmbr::NmbrCode>(nmbr::validate_params(n, k, d, q, b));
    case CodeKind::NmbrSystematic:
      return std::make_unique<nmbr::NmbrCode>(
          nmbr::validate_params(n, k, d, q, b, nmbr::Encoding::SystematicCauchy));
    case CodeKind::Nmsr:
      if (k < 2 || d != 2 * k - 2) {
        throw DegreeOrderViolation("nmsr needs k >= 2 and d = 2k - 2, got k=" +
                                   std::to_string(k) + ", d=" + std::to_string(d));
      }
      return std::make_unique<nmsr::NmsrCode>(nmsr::validate_params(n, k, q, b));
    case CodeKind::NmsrPunctured:
      if (k < 1 || d != 2 * k - 1) {
        throw DegreeOrderViolation("nmsr-punctured needs d = 2k - 1, got k=" +
                                   std::to_string(k) + ", d=" + std::to_string(d));
      }
      return std::make_unique<nmsr::PuncturedNmsr>(nmsr::validate_params(n + 1, k + 1, q, b));
  }
  throw ArgumentError("unknown code kind");
}

namespace detail {

void check_node(std::size_t node, std::size_t n) {
  if (node < 1 || node > n) {
    throw ArgumentError("node " + std::to_string(node) + " outside [1, " +
                        std::to_string(n) + "]");
  }
}

void check_share(const NodeShare& share, std::size_t n, std::size_t rows, std::size_t cols) {
  check_node(share.node, n);
  if (share.payload.rows() != rows || share.payload.cols() != cols) {
    throw DimensionMismatch("share of node " + std::to_string(share.node) + " is " +
                            std::to_string(share.payload.rows()) + "x" +
                            std::to_string(share.payload.cols()) + ", expected " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  }
}

std::vector<RepairPacket> sorted_packets(std::span<const RepairPacket> packets,
                                         std::size_t expected, std::size_t n,
                                         std::size_t order) {
  if (packets.size() != expected) {
    throw ArgumentError("repair needs " + std::to_string(expected) + " packets, got " +
                        std::to_string(packets.size()));
  }
  std::vector<RepairPacket> out(packets.begin(), packets.end());
  std::sort(out.begin(), out.end(),
            [](const RepairPacket& a, const RepairPacket& b) { return a.helper < b.helper; });
  const std::size_t target = out.front().target;
  check_node(target, n);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& p = out[i];
    check_node(p.helper, n);
    if (p.target != target) throw ArgumentError("packets name different targets");
    if (p.helper == target) {
      throw ArgumentError("helper set contains the failed node " + std::to_string(target));
    }
    if (i > 0 && out[i - 1].helper == p.helper) {
      throw ArgumentError("duplicate helper " + std::to_string(p.helper));
    }
    if (p.payload.rows() != order || p.payload.cols() != order) {
      throw DimensionMismatch("packet from helper " + std::to_string(p.helper) +
                              " has the wrong shape");
    }
  }
  return out;
}

std::vector<NodeShare> sorted_shares(std::span<const NodeShare> shares, std::size_t expected,
                                     std::size_t n, std::size_t rows, std::size_t cols) {
  if (shares.size() != expected) {
    throw ArgumentError("reconstruction needs " + std::to_string(expected) +
                        " shares, got " + std::to_string(shares.size()));
  }
  std::vector<NodeShare> out(shares.begin(), shares.end());
  std::sort(out.begin(), out.end(),
            [](const NodeShare& a, const NodeShare& b) { return a.node < b.node; });
  for (std::size_t i = 0; i < out.size(); ++i) {
    check_share(out[i], n, rows, cols);
    if (i > 0 && out[i - 1].node == out[i].node) {
      throw ArgumentError("duplicate node " + std::to_string(out[i].node));
    }
  }
  return out;
}

GfMatrix symmetric_from_upper(const gf::PrimeField& field, std::size_t r,
                              std::span<const std::uint32_t> symbols) {
  GfMatrix s(field, r, r);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      const std::uint32_t v = field.reduce(symbols[pos++]);
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return s;
}

void append_upper(const GfMatrix& s, std::vector<std::uint32_t>& out) {
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = i; j < s.cols(); ++j) out.push_back(s(i, j));
}

}  // namespace detail

}  // namespace regen
