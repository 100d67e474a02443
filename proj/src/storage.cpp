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

#include "regen/storage.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <system_error>

#include "json.hpp"
#include <openssl/evp.h>

#include "regen/errors.hpp"

namespace regen::storage {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kHeaderSize = 32 + 4;

struct Cluster {
  Manifest manifest;
  Digest digest{};
  std::unique_ptr<RegeneratingCode> code;
};

Cluster load_cluster(const fs::path& dir) {
  const auto bytes = read_file(manifest_path(dir));
  Cluster c;
  c.manifest = Manifest::from_json(
      std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  c.digest = sha256(bytes);
  c.code = code_for(c.manifest);
  return c;
}

std::vector<std::uint32_t> read_share(const Cluster& c, const fs::path& dir, std::size_t node) {
  const auto bytes = read_file(share_path(dir, node));
  ShareFile sf = parse_share(bytes, c.manifest.q, c.manifest.stripe_count * c.code->alpha());
  if (sf.manifest_digest != c.digest) {
    throw CorruptionError("share of node " + std::to_string(node) +
                          " was written for a different manifest");
  }
  if (sf.node != node) {
    throw CorruptionError(share_path(dir, node).string() + " holds node " +
                          std::to_string(sf.node));
  }
  return std::move(sf.symbols);
}

GfMatrix stripe_payload(const RegeneratingCode& code, const std::vector<std::uint32_t>& symbols,
                        std::size_t stripe) {
  const std::size_t a = code.alpha();
  return GfMatrix(code.field(), code.share_rows(), code.share_cols(),
                  std::vector<std::uint32_t>(symbols.begin() + static_cast<std::ptrdiff_t>(stripe * a),
                                             symbols.begin() + static_cast<std::ptrdiff_t>((stripe + 1) * a)));
}

void require_distinct(std::vector<std::size_t>& nodes, std::size_t n) {
  std::sort(nodes.begin(), nodes.end());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    detail::check_node(nodes[i], n);
    if (i > 0 && nodes[i] == nodes[i - 1]) {
      throw ArgumentError("node " + std::to_string(nodes[i]) + " listed twice");
    }
  }
}

}  // namespace

std::unique_ptr<RegeneratingCode> make_code(const CodeSpec& spec) {
  return regen::make_code(spec.kind, spec.n, spec.k, spec.d, spec.q, spec.b);
}

Digest sha256(std::span<const std::uint8_t> bytes) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != out.size()) {
    throw Error("SHA-256 computation failed");
  }
  return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 15]);
  }
  return s;
}

std::vector<std::uint32_t> bytes_to_symbols(std::span<const std::uint8_t> bytes,
                                            std::uint32_t q) {
  std::vector<std::uint32_t> out;
  if (q == 2) {
    out.reserve(bytes.size() * 8);
    for (auto byte : bytes)
      for (int bit = 7; bit >= 0; --bit) out.push_back((byte >> bit) & 1u);
    return out;
  }
  if (q <= 251) {
    out.reserve(bytes.size());
    for (std::size_t i = 0; i < bytes.size(); ++i) {
      if (bytes[i] >= q) {
        throw ArgumentError("byte " + std::to_string(bytes[i]) + " at offset " +
                            std::to_string(i) + " is not a symbol of F_" + std::to_string(q) +
                            "; map the input to [0, q) first");
      }
      out.push_back(bytes[i]);
    }
    return out;
  }
  out.reserve((bytes.size() + 1) / 2);
  for (std::size_t i = 0; i < bytes.size(); i += 2) {
    const std::uint32_t hi = i + 1 < bytes.size() ? bytes[i + 1] : 0;
    const std::uint32_t v = bytes[i] | (hi << 8);
    if (v >= q) {
      throw ArgumentError("symbol " + std::to_string(v) + " at offset " + std::to_string(i) +
                          " is not an element of F_" + std::to_string(q));
    }
    out.push_back(v);
  }
  return out;
}

std::uint64_t packed_size(std::uint64_t count, std::uint32_t q) {
  if (q == 2) return (count + 7) / 8;
  if (q <= 251) return count;
  return 2 * count;
}

std::vector<std::uint8_t> symbols_to_bytes(std::span<const std::uint32_t> symbols,
                                           std::uint32_t q, std::uint64_t byte_count) {
  std::vector<std::uint8_t> out;
  out.reserve(packed_size(symbols.size(), q));
  if (q == 2) {
    for (std::size_t i = 0; i < symbols.size(); i += 8) {
      std::uint8_t byte = 0;
      for (std::size_t j = 0; j < 8; ++j) {
        const std::uint32_t bit = i + j < symbols.size() ? symbols[i + j] & 1u : 0;
        byte = static_cast<std::uint8_t>(byte | (bit << (7 - j)));
      }
      out.push_back(byte);
    }
  } else if (q <= 251) {
    for (auto s : symbols) out.push_back(static_cast<std::uint8_t>(s));
  } else {
    for (auto s : symbols) {
      out.push_back(static_cast<std::uint8_t>(s & 0xff));
      out.push_back(static_cast<std::uint8_t>(s >> 8));
    }
  }
  if (out.size() < byte_count) throw ArgumentError("not enough symbols for the byte count");
  out.resize(byte_count);
  return out;
}

std::string Manifest::to_json() const {
  Json j;
  j["format_version"] = format_version;
  j["code_kind"] = std::string(to_string(code_kind));
  j["q"] = q;
  j["n"] = n;
  j["k"] = k;
  j["d"] = d;
  j["b"] = b;
  j["polynomial"] = polynomial;
  j["exponents"] = exponents;
  j["file_length"] = file_length;
  j["pad_length"] = pad_length;
  j["stripe_symbols"] = stripe_symbols;
  j["stripe_count"] = stripe_count;
  j["content_digest"] = content_digest;
  return j.dump(2) + "\n";
}

Manifest Manifest::from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    Manifest m;
    m.format_version = j.at("format_version").get<int>();
    if (m.format_version != kFormatVersion) {
      throw IoError("unsupported manifest format_version " + std::to_string(m.format_version));
    }
    m.code_kind = parse_code_kind(j.at("code_kind").get<std::string>());
    m.q = j.at("q").get<std::uint32_t>();
    m.n = j.at("n").get<std::size_t>();
    m.k = j.at("k").get<std::size_t>();
    m.d = j.at("d").get<std::size_t>();
    m.b = j.at("b").get<std::size_t>();
    m.polynomial = j.at("polynomial").get<std::vector<std::uint32_t>>();
    m.exponents = j.at("exponents").get<std::vector<std::uint64_t>>();
    m.file_length = j.at("file_length").get<std::uint64_t>();
    m.pad_length = j.at("pad_length").get<std::uint64_t>();
    m.stripe_symbols = j.at("stripe_symbols").get<std::uint64_t>();
    m.stripe_count = j.at("stripe_count").get<std::uint64_t>();
    m.content_digest = j.at("content_digest").get<std::string>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed manifest: ") + e.what());
  } catch (const ParameterError& e) {
    throw IoError(std::string("malformed manifest: ") + e.what());
  }
}

std::unique_ptr<RegeneratingCode> code_for(const Manifest& m) {
  auto code = make_code(m.spec());
  if (code->polynomial() != m.polynomial || code->exponents() != m.exponents) {
    throw CorruptionError("manifest polynomial or exponents differ from re-derived values");
  }
  if (code->file_size() != m.stripe_symbols) {
    throw CorruptionError("manifest stripe_symbols differs from B = " +
                          std::to_string(code->file_size()));
  }
  return code;
}

std::vector<std::uint8_t> serialize_share(const ShareFile& share, std::uint32_t q) {
  std::vector<std::uint8_t> out(share.manifest_digest.begin(), share.manifest_digest.end());
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(share.node >> (8 * i)));
  const auto payload = symbols_to_bytes(share.symbols, q, packed_size(share.symbols.size(), q));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

ShareFile parse_share(std::span<const std::uint8_t> bytes, std::uint32_t q,
                      std::uint64_t symbol_count) {
  if (bytes.size() != kHeaderSize + packed_size(symbol_count, q)) {
    throw CorruptionError("share file has " + std::to_string(bytes.size()) +
                          " bytes, expected " +
                          std::to_string(kHeaderSize + packed_size(symbol_count, q)));
  }
  ShareFile sf;
  std::copy_n(bytes.begin(), 32, sf.manifest_digest.begin());
  for (int i = 0; i < 4; ++i) sf.node |= static_cast<std::uint32_t>(bytes[32 + i]) << (8 * i);
  try {
    sf.symbols = bytes_to_symbols(bytes.subspan(kHeaderSize), q);
  } catch (const ArgumentError& e) {
    throw CorruptionError(std::string("share payload: ") + e.what());
  }
  sf.symbols.resize(symbol_count);
  return sf;
}

fs::path manifest_path(const fs::path& dir) { return dir / "manifest.json"; }

fs::path share_path(const fs::path& dir, std::size_t node) {
  return dir / ("node_" + std::to_string(node) + ".share");
}

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> out((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());
  return out;
}

void write_atomic(const fs::path& path, std::span<const std::uint8_t> bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("error writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

std::uint64_t BandwidthLedger::total() const {
  std::uint64_t t = 0;
  for (const auto& e : entries) t += e.symbols;
  return t;
}

std::uint64_t BandwidthLedger::total(std::string_view operation) const {
  std::uint64_t t = 0;
  for (const auto& e : entries)
    if (e.operation == operation) t += e.symbols;
  return t;
}

std::size_t BandwidthLedger::count(std::string_view operation) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [&](const LedgerEntry& e) { return e.operation == operation; }));
}

Manifest cmd_encode(const fs::path& input, const CodeSpec& spec, const fs::path& out_dir) {
  const auto code = make_code(spec);
  const auto bytes = read_file(input);
  auto symbols = bytes_to_symbols(bytes, spec.q);
  const std::size_t big = code->file_size();
  const std::size_t stripes = std::max<std::size_t>(1, (symbols.size() + big - 1) / big);

  Manifest m;
  m.code_kind = code->kind();
  m.q = spec.q;
  m.n = code->n();
  m.k = code->k();
  m.d = code->d();
  m.b = code->b();
  m.polynomial = code->polynomial();
  m.exponents = code->exponents();
  m.file_length = bytes.size();
  m.pad_length = stripes * big - symbols.size();
  m.stripe_symbols = big;
  m.stripe_count = stripes;
  m.content_digest = to_hex(sha256(bytes));
  symbols.resize(stripes * big, 0);

  std::vector<std::vector<std::uint32_t>> node_symbols(code->n());
  for (std::size_t s = 0; s < stripes; ++s) {
    const auto shares = code->encode(std::span(symbols).subspan(s * big, big));
    for (const auto& share : shares) {
      auto& dst = node_symbols[share.node - 1];
      dst.insert(dst.end(), share.payload.values().begin(), share.payload.values().end());
    }
  }

  const std::string json = m.to_json();
  const auto json_bytes = std::span(reinterpret_cast<const std::uint8_t*>(json.data()), json.size());
  const Digest digest = sha256(json_bytes);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  for (std::size_t j = 1; j <= code->n(); ++j) {
    ShareFile sf{digest, static_cast<std::uint32_t>(j), std::move(node_symbols[j - 1])};
    write_atomic(share_path(out_dir, j), serialize_share(sf, spec.q));
  }
  write_atomic(manifest_path(out_dir), json_bytes);
  return m;
}

LedgerEntry cmd_repair(const fs::path& dir, std::size_t failed, std::vector<std::size_t> helpers,
                       const fs::path& out) {
  const Cluster c = load_cluster(dir);
  const auto& code = *c.code;
  detail::check_node(failed, code.n());
  require_distinct(helpers, code.n());
  if (std::find(helpers.begin(), helpers.end(), failed) != helpers.end()) {
    throw ArgumentError("helper set contains the failed node " + std::to_string(failed));
  }
  if (helpers.size() != code.d()) {
    throw ArgumentError("repair needs d = " + std::to_string(code.d()) + " helpers, got " +
                        std::to_string(helpers.size()));
  }
  std::vector<std::vector<std::uint32_t>> helper_symbols;
  for (auto h : helpers) helper_symbols.push_back(read_share(c, dir, h));

  LedgerEntry entry{"repair", {failed}, 0};
  entry.nodes.insert(entry.nodes.end(), helpers.begin(), helpers.end());
  std::vector<std::uint32_t> rebuilt;
  for (std::size_t s = 0; s < c.manifest.stripe_count; ++s) {
    std::vector<RepairPacket> packets;
    for (std::size_t i = 0; i < helpers.size(); ++i) {
      packets.push_back(
          code.repair_helper({helpers[i], stripe_payload(code, helper_symbols[i], s)}, failed));
      entry.symbols += packets.back().payload.size();
    }
    const NodeShare share = code.repair_assemble(packets);
    rebuilt.insert(rebuilt.end(), share.payload.values().begin(), share.payload.values().end());
  }
  ShareFile sf{c.digest, static_cast<std::uint32_t>(failed), std::move(rebuilt)};
  write_atomic(out.empty() ? share_path(dir, failed) : out, serialize_share(sf, c.manifest.q));
  return entry;
}

LedgerEntry cmd_reconstruct(const fs::path& dir, std::vector<std::size_t> nodes,
                            const fs::path& out_path) {
  const Cluster c = load_cluster(dir);
  const auto& code = *c.code;
  require_distinct(nodes, code.n());
  if (nodes.size() != code.k()) {
    throw ArgumentError("reconstruction needs k = " + std::to_string(code.k()) +
                        " nodes, got " + std::to_string(nodes.size()));
  }
  std::vector<std::vector<std::uint32_t>> node_symbols;
  for (auto j : nodes) node_symbols.push_back(read_share(c, dir, j));

  LedgerEntry entry{"reconstruct", nodes, 0};
  std::vector<std::uint32_t> symbols;
  for (std::size_t s = 0; s < c.manifest.stripe_count; ++s) {
    std::vector<NodeShare> shares;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      shares.push_back({nodes[i], stripe_payload(code, node_symbols[i], s)});
      entry.symbols += shares.back().payload.size();
    }
    const auto part = code.reconstruct(shares);
    symbols.insert(symbols.end(), part.begin(), part.end());
  }
  const std::uint64_t total = c.manifest.stripe_count * c.manifest.stripe_symbols;
  if (c.manifest.pad_length > total) throw CorruptionError("pad_length exceeds the stripes");
  symbols.resize(total - c.manifest.pad_length);
  std::vector<std::uint8_t> bytes;
  try {
    bytes = symbols_to_bytes(symbols, c.manifest.q, c.manifest.file_length);
  } catch (const ArgumentError& e) {
    throw CorruptionError(std::string("decoded symbols do not cover the file: ") + e.what());
  }
  if (to_hex(sha256(bytes)) != c.manifest.content_digest) {
    throw CorruptionError("reconstructed content digest does not match the manifest");
  }
  write_atomic(out_path, bytes);
  return entry;
}

}  // namespace regen::storage
