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

#ifndef REGEN_TESTS_SWEEP_HPP
#define REGEN_TESTS_SWEEP_HPP

#include <cstdint>
#include <vector>

#include "oracle.hpp"
#include "regen/code.hpp"

namespace sweep {

/// All size-r subsets of {1..n}, lexicographic.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

struct Result {
  std::size_t recon_ok = 0, recon_total = 0;
  std::size_t repair_ok = 0, repair_total = 0;
  /// Every packet had exactly beta symbols.
  bool packet_sizes_ok = true;

  bool all_ok() const {
    return recon_ok == recon_total && repair_ok == repair_total && packet_sizes_ok &&
           recon_total > 0 && repair_total > 0;
  }
};

inline std::vector<std::uint32_t> random_file(const regen::RegeneratingCode& code, std::uint64_t seed) {
  oracle::Rng rng(seed);
  std::vector<std::uint32_t> file(code.file_size());
  for (auto& v : file) v = static_cast<std::uint32_t>(rng.below(code.field().modulus()));
  return file;
}

/// Every k-subset reconstructs `file`; every (failed node, d-subset of the
/// others) pair rebuilds the exact share.
inline Result exhaustive(const regen::RegeneratingCode& code, const std::vector<std::uint32_t>& file) {
  Result res;
  const auto shares = code.encode(file);
  for (const auto& set : subsets(code.n(), code.k())) {
    std::vector<regen::NodeShare> picked;
    for (auto j : set) picked.push_back(shares[j - 1]);
    ++res.recon_total;
    try {
      if (code.reconstruct(picked) == file) ++res.recon_ok;
    } catch (const regen::Error&) {
    }
  }
  for (std::size_t failed = 1; failed <= code.n(); ++failed) {
    std::vector<std::size_t> others;
    for (std::size_t j = 1; j <= code.n(); ++j)
      if (j != failed) others.push_back(j);
    for (const auto& idx : subsets(others.size(), code.d())) {
      std::vector<regen::RepairPacket> packets;
      for (auto i : idx) {
        packets.push_back(code.repair_helper(shares[others[i - 1] - 1], failed));
        res.packet_sizes_ok = res.packet_sizes_ok && packets.back().payload.size() == code.beta();
      }
      ++res.repair_total;
      try {
        if (code.repair_assemble(packets).payload == shares[failed - 1].payload) ++res.repair_ok;
      } catch (const regen::Error&) {
      }
    }
  }
  return res;
}

}  // namespace sweep

#endif  // REGEN_TESTS_SWEEP_HPP
