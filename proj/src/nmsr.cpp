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

#include "regen/nmsr.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "regen/errors.hpp"

namespace regen::nmsr {

namespace {

std::string tuple_text(std::size_t n, std::size_t k, std::uint32_t q, std::size_t b) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) +
         ", q=" + std::to_string(q) + ", b=" + std::to_string(b) + ")";
}

std::uint64_t largest(const std::vector<std::uint64_t>& v) {
  std::uint64_t out = 0;
  for (auto x : v) out = std::max(out, x);
  return out;
}

NmsrParams require_indices(NmsrParams p) {
  if (p.indices.size() != p.n) {
    throw ArgumentError("q^(b/k) is too large to build an NMSR codec " +
                        tuple_text(p.n, p.k, p.q, p.b));
  }
  return p;
}

}  // namespace

NmsrParams validate_params(std::size_t n, std::size_t k, std::uint32_t q, std::size_t b) {
  const gf::PrimeField field(q);
  const std::string where = tuple_text(n, k, q, b);
  if (k < 2 || n < 2 * k - 1) {
    throw DegreeOrderViolation("need k >= 2 and n >= d + 1 = 2k - 1 " + where);
  }
  if (b == 0 || b % k != 0) throw B2Violation("k must divide b " + where);
  const std::size_t m = b / k;

  NmsrParams p{n, k, q, b, 1, 0, {}};
  const std::uint64_t km1 = k - 1;
  // gcd(k-1, q^m - 1) = gcd(k-1, (q^m - 1) mod (k-1)).
  const std::uint64_t residue = (gf::powmod(q, m, km1) + km1 - 1) % km1;
  p.g = std::gcd(km1, residue);

  const std::uint64_t qm = gf::saturating_pow(q, m);
  const bool huge = qm > ext::kMaxGroupOrder;
  if (!huge) {
    const unsigned __int128 lhs = static_cast<unsigned __int128>(n) * p.g * m;
    if (lhs > qm - 1) {
      throw B1Violation("n g b/k = " + std::to_string(static_cast<std::uint64_t>(lhs)) +
                        " exceeds q^(b/k) - 1 = " + std::to_string(qm - 1) + " " + where);
    }
    p.modulus = (qm - 1) / p.g;
    p.indices = ext::select_representatives(q, p.modulus, n);
  }
  return p;
}

NmsrParams with_indices(NmsrParams params, std::vector<std::uint64_t> indices,
                        bool check_cosets) {
  if (indices.size() != params.n) {
    throw ArgumentError("expected " + std::to_string(params.n) + " indices, got " +
                        std::to_string(indices.size()));
  }
  if (params.modulus == 0) throw ArgumentError("parameters carry no index range");
  for (auto i : indices) {
    if (i >= params.modulus) {
      throw ArgumentError("index " + std::to_string(i) + " outside [0, " +
                          std::to_string(params.modulus) + ")");
    }
  }
  if (check_cosets) {
    for (std::size_t a = 0; a < indices.size(); ++a)
      for (std::size_t c = a + 1; c < indices.size(); ++c)
        if (ext::same_coset(params.q, params.modulus, indices[a], indices[c]))
          throw NotEnoughCosets("indices " + std::to_string(indices[a]) + " and " +
                                std::to_string(indices[c]) + " share a coset");
  }
  params.indices = std::move(indices);
  return params;
}

NmsrMetrics metrics(std::size_t n, std::size_t k, std::size_t b) {
  if (k < 2 || n == 0 || b == 0) throw ArgumentError("metrics need k >= 2 and positive n, b");
  const BigInt bn = b, kn = k, nn = n;
  const Rational r(bn * (kn - 1), kn);
  const Rational B = r * (r + 1);
  if (boost::multiprecision::denominator(B) != 1) {
    throw ArgumentError("B is not integral; k must divide b");
  }
  NmsrMetrics out;
  out.B = boost::multiprecision::numerator(B);
  out.beta = bn * bn / (kn * kn);
  out.alpha = out.beta * (kn - 1);
  out.B_over_alpha_k = Rational(out.B, out.alpha * kn);
  out.B_over_alpha_k_closed_form =
      Rational(1) - Rational(BigInt(1), kn) + Rational(BigInt(1), bn);
  out.rate = Rational(out.B, out.alpha * nn);
  return out;
}

PuncturedMetrics punctured_metrics(std::size_t parent_n, std::size_t parent_k,
                                   std::size_t b) {
  const NmsrMetrics parent = metrics(parent_n, parent_k, b);
  PuncturedMetrics out;
  out.B = parent.B - parent.alpha;
  out.alpha = parent.alpha;
  out.B_over_alpha_k = Rational(out.B, out.alpha * BigInt(parent_k - 1));
  out.rate = Rational(out.B, out.alpha * BigInt(parent_n - 1));
  return out;
}

NmsrCode::NmsrCode(NmsrParams params)
    : params_(require_indices(std::move(params))),
      rep_(gf::PrimeField(params_.q), static_cast<unsigned>(params_.m()),
           (params_.k - 1) * largest(params_.indices)) {}

GfMatrix NmsrCode::phi(std::size_t node) const {
  detail::check_node(node, params_.n);
  const std::size_t m = params_.m();
  const std::uint64_t i = params_.indices[node - 1];
  GfMatrix out(rep_.base(), m, params_.r());
  for (std::size_t t = 0; t + 1 < params_.k; ++t) out.set_block(0, t * m, rep_.power(i * t));
  return out;
}

GfMatrix NmsrCode::lambda(std::size_t node) const {
  detail::check_node(node, params_.n);
  return rep_.power(params_.indices[node - 1] * (params_.k - 1));
}

GfMatrix NmsrCode::node_matrix(std::size_t node) const {
  const GfMatrix p = phi(node);
  const GfMatrix parts[] = {p, lambda(node) * p};
  return linalg::hstack(parts);
}

GfMatrix NmsrCode::phi_matrix() const {
  std::vector<GfMatrix> rows;
  for (std::size_t j = 1; j <= params_.n; ++j) rows.push_back(phi(j));
  return linalg::vstack(rows);
}

GfMatrix NmsrCode::lambda_matrix() const {
  const std::size_t m = params_.m();
  GfMatrix out(rep_.base(), params_.n * m, params_.n * m);
  for (std::size_t j = 1; j <= params_.n; ++j) out.set_block((j - 1) * m, (j - 1) * m, lambda(j));
  return out;
}

GfMatrix NmsrCode::encoding_matrix() const {
  const GfMatrix p = phi_matrix();
  const GfMatrix parts[] = {p, lambda_matrix() * p};
  return linalg::hstack(parts);
}

GfMatrix NmsrCode::build_data_matrix(std::span<const std::uint32_t> file) const {
  if (file.size() != params_.file_size()) {
    throw ArgumentError("expected " + std::to_string(params_.file_size()) +
                        " file symbols, got " + std::to_string(file.size()));
  }
  const std::size_t r = params_.r();
  const std::size_t half = r * (r + 1) / 2;
  GfMatrix x(rep_.base(), 2 * r, r);
  x.set_block(0, 0, detail::symmetric_from_upper(rep_.base(), r, file.first(half)));
  x.set_block(r, 0, detail::symmetric_from_upper(rep_.base(), r, file.subspan(half)));
  return x;
}

std::vector<std::uint32_t> NmsrCode::extract_file(const GfMatrix& x) const {
  const std::size_t r = params_.r();
  std::vector<std::uint32_t> out;
  out.reserve(params_.file_size());
  detail::append_upper(x.block(0, 0, r, r), out);
  detail::append_upper(x.block(r, 0, r, r), out);
  return out;
}

std::vector<NodeShare> NmsrCode::encode(std::span<const std::uint32_t> file) const {
  const GfMatrix x = build_data_matrix(file);
  std::vector<NodeShare> shares;
  shares.reserve(params_.n);
  for (std::size_t j = 1; j <= params_.n; ++j) shares.push_back({j, node_matrix(j) * x});
  return shares;
}

RepairPacket NmsrCode::repair_helper(const NodeShare& share, std::size_t target) const {
  detail::check_share(share, params_.n, share_rows(), share_cols());
  detail::check_node(target, params_.n);
  if (target == share.node) {
    throw ArgumentError("node " + std::to_string(target) + " cannot help repair itself");
  }
  return {share.node, target, share.payload * phi(target).transpose()};
}

NodeShare NmsrCode::repair_assemble(std::span<const RepairPacket> packets) const {
  const auto sorted = detail::sorted_packets(packets, d(), params_.n, params_.m());
  std::vector<GfMatrix> rows, payloads;
  for (const auto& p : sorted) {
    rows.push_back(node_matrix(p.helper));
    payloads.push_back(p.payload);
  }
  GfMatrix y(rep_.base(), 0, 0);
  try {
    y = linalg::solve(linalg::vstack(rows), linalg::vstack(payloads));
  } catch (const SingularMatrix& e) {
    throw CorruptionError(std::string("helper encoding matrix is singular: ") + e.what());
  }
  // y = X Phi_t^T = [S_1 Phi_t^T; S_2 Phi_t^T].
  const std::size_t r = params_.r();
  const std::size_t target = sorted.front().target;
  const GfMatrix phi_s1 = y.block(0, 0, r, params_.m()).transpose();
  const GfMatrix phi_s2 = y.block(r, 0, r, params_.m()).transpose();
  return {target, phi_s1 + lambda(target) * phi_s2};
}

GfMatrix NmsrCode::gamma(std::span<const NodeShare> shares) const {
  const auto sorted = detail::sorted_shares(shares, params_.k, params_.n,
                                            share_rows(), share_cols());
  std::vector<GfMatrix> payloads, phis;
  for (const auto& s : sorted) {
    payloads.push_back(s.payload);
    phis.push_back(phi(s.node));
  }
  return linalg::vstack(payloads) * linalg::vstack(phis).transpose();
}

std::vector<std::uint32_t> NmsrCode::reconstruct(std::span<const NodeShare> shares) const {
  const auto sorted = detail::sorted_shares(shares, params_.k, params_.n,
                                            share_rows(), share_cols());
  const std::size_t k = params_.k;
  const std::size_t m = params_.m();
  const std::size_t r = params_.r();
  const GfMatrix g = gamma(sorted);
  auto block = [&](std::size_t s, std::size_t t) { return g.block(s * m, t * m, m, m); };

  std::vector<std::size_t> nodes;
  for (const auto& s : sorted) nodes.push_back(s.node);
  std::vector<GfMatrix> q(k * k, GfMatrix(rep_.base(), m, m));
  std::vector<GfMatrix> w(k * k, GfMatrix(rep_.base(), m, m));

  // Gamma_st - Gamma_ts^T = Lambda_s Q_st - Q_st Lambda_t^T; right-multiplying
  // by Lambda_t^{-T} turns this into A Q B - Q = C.
  auto solve_pair = [&](std::size_t s, std::size_t t) {
    const GfMatrix a = lambda(nodes[s]);
    const GfMatrix bm =
        rep_.inverse_power(params_.indices[nodes[t] - 1] * (k - 1)).transpose();
    const GfMatrix c = (block(s, t) - block(t, s).transpose()) * bm;
    try {
      return linalg::solve_stein(a, bm, c);
    } catch (const SingularStein& e) {
      throw CosetCollision("nodes " + std::to_string(nodes[s]) + " and " +
                           std::to_string(nodes[t]) + " have indices in one coset (" +
                           e.what() + ")");
    }
  };
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = s + 1; t < k; ++t) {
      const GfMatrix qst = solve_pair(s, t);
      const GfMatrix qts = solve_pair(t, s);
      if (!(qts == qst.transpose())) {
        throw CorruptionError("Q blocks are not transposes of each other");
      }
      const GfMatrix wst = block(s, t) - lambda(nodes[s]) * qst;
      const GfMatrix wts = block(t, s) - lambda(nodes[t]) * qts;
      if (!(wts == wst.transpose())) {
        throw CorruptionError("W blocks are not transposes of each other");
      }
      q[s * k + t] = qst;
      q[t * k + s] = qts;
      w[s * k + t] = wst;
      w[t * k + s] = wts;
    }
  }

  // Block row i of Z (diagonal excluded) equals Phi_i S hstack_{t != i} Phi_t^T.
  auto recover = [&](const std::vector<GfMatrix>& z) {
    std::vector<GfMatrix> phi_s, phi_rows;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      std::vector<GfMatrix> left, right;
      for (std::size_t t = 0; t < k; ++t) {
        if (t == i) continue;
        left.push_back(z[i * k + t]);
        right.push_back(phi(nodes[t]).transpose());
      }
      const GfMatrix rm = linalg::hstack(right);
      // X rm = L  <=>  rm^T X^T = L^T.
      phi_s.push_back(linalg::solve(rm.transpose(), linalg::hstack(left).transpose()).transpose());
      phi_rows.push_back(phi(nodes[i]));
    }
    return linalg::solve(linalg::vstack(phi_rows), linalg::vstack(phi_s));
  };
  GfMatrix x(rep_.base(), 2 * r, r);
  try {
    x.set_block(0, 0, recover(w));
    x.set_block(r, 0, recover(q));
  } catch (const SingularMatrix& e) {
    throw CorruptionError(std::string("Phi submatrix is singular: ") + e.what());
  }
  if (!x.block(0, 0, r, r).is_symmetric() || !x.block(r, 0, r, r).is_symmetric()) {
    throw CorruptionError("recovered S_1 or S_2 is not symmetric; shares are inconsistent");
  }
  return extract_file(x);
}

PuncturedNmsr::PuncturedNmsr(NmsrParams parent)
    : parent_(std::move(parent)),
      constraints_(parent_.field(), 0, 0),
      precode_(parent_.field(), 0, 0),
      decoder_(parent_.field(), 0, 0) {
  const std::size_t big = parent_.file_size();
  const std::size_t alpha = parent_.alpha();
  std::size_t best_rank = 0;
  for (std::size_t p = 1; p <= parent_.n() && punctured_ == 0; ++p) {
    const GfMatrix mp = parent_.node_matrix(p);
    GfMatrix g(parent_.field(), alpha, big);
    std::vector<std::uint32_t> unit(big, 0);
    for (std::size_t c = 0; c < big; ++c) {
      unit[c] = 1;
      g.set_block(0, c, linalg::vec(mp * parent_.build_data_matrix(unit)));
      unit[c] = 0;
    }
    const std::size_t rank = linalg::rank(g);
    best_rank = std::max(best_rank, rank);
    if (rank == alpha) {
      punctured_ = p;
      constraints_ = std::move(g);
    }
  }
  if (punctured_ == 0) {
    throw ParameterError("puncture", "no node constraint set has rank alpha = " +
                                         std::to_string(alpha) + " (best " +
                                         std::to_string(best_rank) + ")");
  }
  precode_ = linalg::nullspace(constraints_);
  pivot_rows_ = linalg::row_reduce(precode_.transpose()).pivot_cols;
  GfMatrix sub(parent_.field(), pivot_rows_.size(), precode_.cols());
  for (std::size_t i = 0; i < pivot_rows_.size(); ++i)
    sub.set_block(i, 0, precode_.block(pivot_rows_[i], 0, 1, precode_.cols()));
  decoder_ = linalg::invert(sub);
}

std::vector<NodeShare> PuncturedNmsr::encode(std::span<const std::uint32_t> file) const {
  if (file.size() != file_size()) {
    throw ArgumentError("expected " + std::to_string(file_size()) +
                        " file symbols, got " + std::to_string(file.size()));
  }
  const GfMatrix x = precode_ * GfMatrix(field(), file.size(), 1,
                                         std::vector<std::uint32_t>(file.begin(), file.end()));
  auto shares = parent_.encode(x.values());
  shares.erase(shares.begin() + static_cast<std::ptrdiff_t>(punctured_ - 1));
  for (auto& s : shares) s.node = child_node(s.node);
  return shares;
}

RepairPacket PuncturedNmsr::repair_helper(const NodeShare& share, std::size_t target) const {
  detail::check_share(share, n(), share_rows(), share_cols());
  detail::check_node(target, n());
  RepairPacket p =
      parent_.repair_helper({parent_node(share.node), share.payload}, parent_node(target));
  return {share.node, target, std::move(p.payload)};
}

NodeShare PuncturedNmsr::repair_assemble(std::span<const RepairPacket> packets) const {
  auto sorted = detail::sorted_packets(packets, d(), n(), packet_order());
  const std::size_t target = parent_node(sorted.front().target);
  std::vector<RepairPacket> lifted;
  lifted.push_back({punctured_, target, GfMatrix(field(), packet_order(), packet_order())});
  for (auto& p : sorted) lifted.push_back({parent_node(p.helper), target, std::move(p.payload)});
  NodeShare out = parent_.repair_assemble(lifted);
  out.node = child_node(out.node);
  return out;
}

std::vector<std::uint32_t> PuncturedNmsr::reconstruct(std::span<const NodeShare> shares) const {
  auto sorted = detail::sorted_shares(shares, k(), n(), share_rows(), share_cols());
  std::vector<NodeShare> lifted;
  lifted.push_back({punctured_, GfMatrix(field(), share_rows(), share_cols())});
  for (auto& s : sorted) lifted.push_back({parent_node(s.node), std::move(s.payload)});
  const auto parent_file = parent_.reconstruct(lifted);
  GfMatrix picked(field(), pivot_rows_.size(), 1);
  for (std::size_t i = 0; i < pivot_rows_.size(); ++i) picked(i, 0) = parent_file[pivot_rows_[i]];
  const GfMatrix file = decoder_ * picked;
  const GfMatrix check = precode_ * file;
  if (!std::equal(parent_file.begin(), parent_file.end(), check.values().begin())) {
    throw CorruptionError("parent file lies outside the precode image");
  }
  return {file.values().begin(), file.values().end()};
}

}  // namespace regen::nmsr
