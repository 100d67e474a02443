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

#include "regen/nmbr.hpp"

#include <string>
#include <utility>

#include "regen/errors.hpp"

namespace regen::nmbr {

namespace {

std::string tuple_text(std::size_t n, std::size_t k, std::size_t d,
                       std::uint32_t q, std::size_t b) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) +
         ", d=" + std::to_string(d) + ", q=" + std::to_string(q) +
         ", b=" + std::to_string(b) + ")";
}

std::uint64_t cache_bound(const NmbrParams& p) {
  if (p.encoding != Encoding::Plain || p.exponents.empty()) return 0;
  return (p.d - 1) * p.exponents.back();
}

}  // namespace

std::uint64_t NmbrParams::file_size() const noexcept {
  const std::uint64_t bb = b;
  return bb * (bb + 1) / 2 + bb * (b / k) * (d - k);
}

NmbrParams validate_params(std::size_t n, std::size_t k, std::size_t d,
                           std::uint32_t q, std::size_t b, Encoding encoding) {
  const gf::PrimeField field(q);
  const std::string where = tuple_text(n, k, d, q, b);
  if (k == 0 || k > d || n == 0 || d > n - 1) {
    throw DegreeOrderViolation("need 1 <= k <= d <= n - 1 " + where);
  }
  if (b == 0 || b % k != 0) throw A2Violation("k must divide b " + where);
  const std::size_t m = b / k;
  const std::uint64_t need = encoding == Encoding::Plain ? n : n + d - k;
  if (gf::saturating_pow(field.modulus(), m) < need) {
    throw A1Violation("q^(b/k) must be at least " + std::to_string(need) + " " + where);
  }
  NmbrParams p{n, k, d, q, b, encoding, {}};
  if (encoding == Encoding::Plain) {
    p.exponents.resize(n);
    for (std::size_t j = 0; j < n; ++j) p.exponents[j] = j;
  }
  return p;
}

NmbrMetrics metrics(std::size_t n, std::size_t k, std::size_t d, std::size_t b) {
  if (k == 0 || d == 0 || n == 0 || b == 0) throw ArgumentError("metrics need positive n, k, d, b");
  const BigInt bn = b, kn = k, dn = d, nn = n;
  NmbrMetrics out;
  const Rational B = Rational(bn * (bn + 1), 2) + Rational(bn * bn * (dn - kn), kn);
  if (boost::multiprecision::denominator(B) != 1) {
    throw ArgumentError("B is not integral; k must divide b");
  }
  out.B = boost::multiprecision::numerator(B);
  out.C = Rational(bn * bn * (2 * dn - kn + 1), 2 * kn);
  out.beta = bn * bn / (kn * kn);
  out.alpha = out.beta * dn;
  out.rate = Rational(out.B, out.alpha * nn);
  out.B_over_C = Rational(out.B) / out.C;
  const Rational kd(kn, dn);
  out.B_over_C_closed_form = (Rational(2) - kd * Rational(bn - 1, bn)) /
                             (Rational(2) - kd + Rational(BigInt(1), dn));
  return out;
}

NmbrCode::NmbrCode(NmbrParams params)
    : params_(std::move(params)),
      rep_(gf::PrimeField(params_.q), static_cast<unsigned>(params_.m()),
           cache_bound(params_)),
      encoder_(rep_.base(), 0, 0) {
  encoder_ = params_.encoding == Encoding::Plain ? plain_encoder() : cauchy_encoder();
}

CodeKind NmbrCode::kind() const {
  return params_.encoding == Encoding::Plain ? CodeKind::Nmbr : CodeKind::NmbrSystematic;
}

GfMatrix NmbrCode::plain_encoder() const {
  const std::size_t m = params_.m();
  const std::size_t d = params_.d;
  GfMatrix out(rep_.base(), params_.n * m, d * m);
  for (std::size_t j = 0; j < params_.n; ++j) {
    const std::uint64_t e = params_.exponents[j];
    out.set_block(j * m, 0, GfMatrix::identity(rep_.base(), m));
    if (e == rep_.order()) continue;  // zero element: (I, 0, ..., 0)
    for (std::size_t t = 1; t < d; ++t) {
      out.set_block(j * m, t * m, rep_.power(e * t));
    }
  }
  return out;
}

GfMatrix NmbrCode::cauchy_encoder() const {
  const std::size_t m = params_.m();
  const std::size_t d = params_.d;
  const std::size_t k = params_.k;
  const auto& f = rep_.base();
  GfMatrix out(f, params_.n * m, d * m);
  for (std::size_t j = 0; j < k; ++j) {
    out.set_block(j * m, j * m, GfMatrix::identity(f, m));
  }
  for (std::size_t c = 0; c + k < params_.n; ++c) {
    const ext::Element v = rep_.element_from_index(d + c);
    for (std::size_t i = 0; i < d; ++i) {
      ext::Element diff = rep_.element_from_index(i);
      for (std::size_t t = 0; t < m; ++t) diff[t] = f.sub(diff[t], v[t]);
      out.set_block((k + c) * m, i * m, linalg::invert(rep_.theta(diff)));
    }
  }
  return out;
}

GfMatrix NmbrCode::node_matrix(std::size_t node) const {
  detail::check_node(node, params_.n);
  const std::size_t m = params_.m();
  return encoder_.block((node - 1) * m, 0, m, encoder_.cols());
}

GfMatrix NmbrCode::build_data_matrix(std::span<const std::uint32_t> file) const {
  if (file.size() != params_.file_size()) {
    throw ArgumentError("expected " + std::to_string(params_.file_size()) +
                        " file symbols, got " + std::to_string(file.size()));
  }
  const auto& f = rep_.base();
  const std::size_t b = params_.b;
  const std::size_t tri = b * (b + 1) / 2;
  GfMatrix x(f, params_.order(), params_.order());
  x.set_block(0, 0, detail::symmetric_from_upper(f, b, file.first(tri)));
  const std::size_t tcols = params_.order() - b;
  std::size_t pos = tri;
  for (std::size_t r = 0; r < b; ++r) {
    for (std::size_t c = 0; c < tcols; ++c) {
      const std::uint32_t v = f.reduce(file[pos++]);
      x(r, b + c) = v;
      x(b + c, r) = v;
    }
  }
  return x;
}

std::vector<std::uint32_t> NmbrCode::extract_file(const GfMatrix& x) const {
  const std::size_t b = params_.b;
  std::vector<std::uint32_t> out;
  out.reserve(params_.file_size());
  detail::append_upper(x.block(0, 0, b, b), out);
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = b; c < params_.order(); ++c) out.push_back(x(r, c));
  return out;
}

std::vector<NodeShare> NmbrCode::encode(std::span<const std::uint32_t> file) const {
  const GfMatrix x = build_data_matrix(file);
  const GfMatrix all = encoder_ * x;
  const std::size_t m = params_.m();
  std::vector<NodeShare> shares;
  shares.reserve(params_.n);
  for (std::size_t j = 0; j < params_.n; ++j) {
    shares.push_back({j + 1, all.block(j * m, 0, m, all.cols())});
  }
  return shares;
}

RepairPacket NmbrCode::repair_helper(const NodeShare& share, std::size_t target) const {
  detail::check_share(share, params_.n, share_rows(), share_cols());
  detail::check_node(target, params_.n);
  if (target == share.node) {
    throw ArgumentError("node " + std::to_string(target) + " cannot help repair itself");
  }
  return {share.node, target, share.payload * node_matrix(target).transpose()};
}

NodeShare NmbrCode::repair_assemble(std::span<const RepairPacket> packets) const {
  const auto sorted =
      detail::sorted_packets(packets, params_.d, params_.n, params_.m());
  std::vector<GfMatrix> rows, payloads;
  for (const auto& p : sorted) {
    rows.push_back(node_matrix(p.helper));
    payloads.push_back(p.payload);
  }
  GfMatrix xmt(rep_.base(), 0, 0);
  try {
    // M_D X M_t^T -> X M_t^T; X is symmetric, so the transpose is M_t X.
    xmt = linalg::solve(linalg::vstack(rows), linalg::vstack(payloads));
  } catch (const SingularMatrix& e) {
    throw CorruptionError(std::string("helper encoding matrix is singular: ") + e.what());
  }
  return {sorted.front().target, xmt.transpose()};
}

std::vector<std::uint32_t> NmbrCode::reconstruct(std::span<const NodeShare> shares) const {
  const auto sorted = detail::sorted_shares(shares, params_.k, params_.n,
                                            share_rows(), share_cols());
  const std::size_t b = params_.b;
  const std::size_t dm = params_.order();
  std::vector<GfMatrix> rows, payloads;
  for (const auto& s : sorted) {
    rows.push_back(node_matrix(s.node));
    payloads.push_back(s.payload);
  }
  const GfMatrix mk = linalg::vstack(rows);
  const GfMatrix y = linalg::vstack(payloads);
  const GfMatrix mk1 = mk.block(0, 0, b, b);
  GfMatrix x(rep_.base(), dm, dm);
  try {
    GfMatrix left = y.block(0, 0, b, b);
    if (dm > b) {
      const GfMatrix t = linalg::solve(mk1, y.block(0, b, b, dm - b));
      left -= mk.block(0, b, b, dm - b) * t.transpose();
      x.set_block(0, b, t);
      x.set_block(b, 0, t.transpose());
    }
    x.set_block(0, 0, linalg::solve(mk1, left));
  } catch (const SingularMatrix& e) {
    throw CorruptionError(std::string("reconstruction matrix is singular: ") + e.what());
  }
  if (!x.block(0, 0, b, b).is_symmetric()) {
    throw CorruptionError("recovered S is not symmetric; shares are inconsistent");
  }
  return extract_file(x);
}

}  // namespace regen::nmbr
