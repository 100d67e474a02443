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

#ifndef REGEN_STORAGE_HPP
#define REGEN_STORAGE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regen/code.hpp"

// File-level striping, manifests, share files and the bandwidth ledger.

namespace regen::storage {

namespace fs = std::filesystem;

constexpr int kFormatVersion = 1;

struct CodeSpec {
  CodeKind kind = CodeKind::Nmbr;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::uint32_t q = 2;
  std::size_t b = 0;
};

std::unique_ptr<RegeneratingCode> make_code(const CodeSpec& spec);

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> bytes);
std::string to_hex(std::span<const std::uint8_t> bytes);

/// Byte <-> symbol mapping. q = 2: eight symbols per byte, most significant
/// bit first. 3 <= q <= 251: one symbol per byte; bytes >= q are rejected.
/// q > 251: one symbol per two bytes, little-endian, the last odd byte
/// padded with zero; values >= q are rejected.
std::vector<std::uint32_t> bytes_to_symbols(std::span<const std::uint8_t> bytes,
                                            std::uint32_t q);
/// Inverse of bytes_to_symbols, truncated to byte_count bytes.
std::vector<std::uint8_t> symbols_to_bytes(std::span<const std::uint32_t> symbols,
                                           std::uint32_t q, std::uint64_t byte_count);
/// Bytes needed to hold `count` symbols under the mapping above.
std::uint64_t packed_size(std::uint64_t count, std::uint32_t q);

struct Manifest {
  int format_version = kFormatVersion;
  CodeKind code_kind = CodeKind::Nmbr;
  std::uint32_t q = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t b = 0;
  std::vector<std::uint32_t> polynomial;
  std::vector<std::uint64_t> exponents;
  std::uint64_t file_length = 0;
  /// Zero symbols appended after the file's own symbols.
  std::uint64_t pad_length = 0;
  std::uint64_t stripe_symbols = 0;
  std::uint64_t stripe_count = 0;
  /// SHA-256 of the original file bytes, lowercase hex.
  std::string content_digest;

  CodeSpec spec() const { return {code_kind, n, k, d, q, b}; }
  /// Pretty-printed JSON with a trailing newline; the exact bytes written.
  std::string to_json() const;
  /// Throws IoError on malformed input.
  static Manifest from_json(std::string_view text);
};

/// Builds the codec a manifest describes and checks that re-derivation
/// yields the recorded polynomial and exponents (CorruptionError otherwise).
std::unique_ptr<RegeneratingCode> code_for(const Manifest& manifest);

struct ShareFile {
  Digest manifest_digest{};
  std::uint32_t node = 0;
  std::vector<std::uint32_t> symbols;
};

/// 32-byte manifest digest, 4-byte little-endian node id, packed payload.
std::vector<std::uint8_t> serialize_share(const ShareFile& share, std::uint32_t q);
/// Throws CorruptionError if the length does not match symbol_count.
ShareFile parse_share(std::span<const std::uint8_t> bytes, std::uint32_t q,
                      std::uint64_t symbol_count);

fs::path manifest_path(const fs::path& dir);
fs::path share_path(const fs::path& dir, std::size_t node);

std::vector<std::uint8_t> read_file(const fs::path& path);
/// Writes to a temporary sibling and renames it into place.
void write_atomic(const fs::path& path, std::span<const std::uint8_t> bytes);

struct LedgerEntry {
  std::string operation;
  /// Target first for repairs, followed by the helpers.
  std::vector<std::size_t> nodes;
  std::uint64_t symbols = 0;
};

struct BandwidthLedger {
  std::vector<LedgerEntry> entries;

  void record(LedgerEntry entry) { entries.push_back(std::move(entry)); }
  std::uint64_t total() const;
  std::uint64_t total(std::string_view operation) const;
  std::size_t count(std::string_view operation) const;
};

/// Stripes the file, encodes every stripe and writes manifest.json plus
/// node_<j>.share for j = 1..n into out_dir.
Manifest cmd_encode(const fs::path& input, const CodeSpec& spec, const fs::path& out_dir);

/// Rebuilds node `failed` from the d helpers' share files in dir and writes
/// it to out (default: dir/node_<failed>.share).
LedgerEntry cmd_repair(const fs::path& dir, std::size_t failed,
                       std::vector<std::size_t> helpers, const fs::path& out = {});

/// Decodes from k share files and writes the original bytes to out_path.
/// Throws CorruptionError, writing nothing, if the content digest differs.
LedgerEntry cmd_reconstruct(const fs::path& dir, std::vector<std::size_t> nodes,
                            const fs::path& out_path);

/// In-memory cluster simulation.
enum class EventKind { Fail, Repair, Reconstruct };

struct Event {
  EventKind kind = EventKind::Fail;
  /// Failed or repaired node; unused for reconstruction.
  std::size_t node = 0;
  /// Helpers or reconstruction set.
  std::vector<std::size_t> nodes;

  std::string text() const;
};

/// One event per line: "fail j", "repair j from a,b,c", "reconstruct from a,b".
/// Blank lines and lines starting with '#' are skipped.
std::vector<Event> parse_script(std::string_view text);

/// Seeded script that keeps at least d nodes alive; reproducible across
/// platforms (raw mt19937_64 output, no library distributions).
std::vector<Event> random_script(const RegeneratingCode& code, std::size_t count,
                                 std::uint64_t seed);

struct EventResult {
  Event event;
  bool ok = false;
  std::string message;
  std::uint64_t symbols = 0;
};

struct SimulationReport {
  std::size_t stripes = 0;
  std::uint64_t seed = 0;
  std::vector<EventResult> events;
  BandwidthLedger ledger;

  std::size_t failures() const;
  std::string text(const RegeneratingCode& code) const;
  std::string csv() const;
};

/// The file is stripes * B symbols drawn from mt19937_64(seed). Failed events
/// are recorded and the run continues.
SimulationReport simulate(const RegeneratingCode& code, std::span<const Event> script,
                          std::size_t stripes, std::uint64_t seed);

}  // namespace regen::storage

#endif  // REGEN_STORAGE_HPP
