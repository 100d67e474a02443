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

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "regen/errors.hpp"
#include "regen/storage.hpp"

namespace regen::storage {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::size_t parse_node(const std::string& token, std::size_t line) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(token, &pos);
    if (pos == token.size()) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw ArgumentError("script line " + std::to_string(line) + ": bad node id '" + token + "'");
}

std::vector<std::size_t> parse_list(const std::string& text, std::size_t line) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (!tok.empty()) out.push_back(parse_node(tok, line));
  }
  if (out.empty()) throw ArgumentError("script line " + std::to_string(line) + ": empty node list");
  return out;
}

// Picks `count` distinct entries of pool using raw generator output.
std::vector<std::size_t> pick(std::vector<std::size_t> pool, std::size_t count,
                              std::mt19937_64& rng) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

std::string Event::text() const {
  switch (kind) {
    case EventKind::Fail: return "fail " + std::to_string(node);
    case EventKind::Repair: return "repair " + std::to_string(node) + " from " + join(nodes);
    case EventKind::Reconstruct: return "reconstruct from " + join(nodes);
  }
  return {};
}

std::vector<Event> parse_script(std::string_view text) {
  std::vector<Event> events;
  std::stringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::stringstream ls(raw);
    std::string verb;
    if (!(ls >> verb) || verb.front() == '#') continue;
    std::string rest;
    std::getline(ls, rest);
    Event e;
    if (verb == "fail") {
      e.kind = EventKind::Fail;
      std::stringstream rs(rest);
      std::string tok, extra;
      if (!(rs >> tok) || (rs >> extra)) {
        throw ArgumentError("script line " + std::to_string(line) + ": expected 'fail <node>'");
      }
      e.node = parse_node(tok, line);
    } else if (verb == "repair") {
      e.kind = EventKind::Repair;
      std::stringstream rs(rest);
      std::string tok, from;
      if (!(rs >> tok >> from) || from != "from") {
        throw ArgumentError("script line " + std::to_string(line) +
                            ": expected 'repair <node> from <a,b,...>'");
      }
      e.node = parse_node(tok, line);
      std::string list;
      std::getline(rs, list);
      e.nodes = parse_list(list, line);
    } else if (verb == "reconstruct") {
      e.kind = EventKind::Reconstruct;
      std::stringstream rs(rest);
      std::string from;
      if (!(rs >> from) || from != "from") {
        throw ArgumentError("script line " + std::to_string(line) +
                            ": expected 'reconstruct from <a,b,...>'");
      }
      std::string list;
      std::getline(rs, list);
      e.nodes = parse_list(list, line);
    } else {
      throw ArgumentError("script line " + std::to_string(line) + ": unknown event '" + verb + "'");
    }
    events.push_back(std::move(e));
  }
  return events;
}

std::vector<Event> random_script(const RegeneratingCode& code, std::size_t count,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<bool> alive(code.n() + 1, true);
  std::vector<Event> events;
  auto nodes_where = [&](bool state) {
    std::vector<std::size_t> out;
    for (std::size_t j = 1; j <= code.n(); ++j)
      if (alive[j] == state) out.push_back(j);
    return out;
  };
  while (events.size() < count) {
    const auto up = nodes_where(true);
    const auto down = nodes_where(false);
    const bool can_fail = up.size() > code.d();
    Event e;
    switch (rng() % 3) {
      case 0:
        if (can_fail) {
          e = {EventKind::Fail, pick(up, 1, rng).front(), {}};
          break;
        }
        [[fallthrough]];
      case 1:
        if (!down.empty()) {
          e = {EventKind::Repair, pick(down, 1, rng).front(), pick(up, code.d(), rng)};
          break;
        }
        [[fallthrough]];
      default:
        e = {EventKind::Reconstruct, 0, pick(up, code.k(), rng)};
    }
    if (e.kind == EventKind::Fail) alive[e.node] = false;
    if (e.kind == EventKind::Repair) alive[e.node] = true;
    events.push_back(std::move(e));
  }
  return events;
}

std::size_t SimulationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(events.begin(), events.end(), [](const EventResult& r) { return !r.ok; }));
}

SimulationReport simulate(const RegeneratingCode& code, std::span<const Event> script,
                          std::size_t stripes, std::uint64_t seed) {
  if (stripes == 0) throw ArgumentError("simulation needs at least one stripe");
  SimulationReport report;
  report.stripes = stripes;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  const std::size_t big = code.file_size();
  std::vector<std::uint32_t> file(stripes * big);
  for (auto& x : file) x = static_cast<std::uint32_t>(rng() % code.field().modulus());

  // original[s][j - 1] is node j's share of stripe s; current is what the
  // cluster holds now.
  std::vector<std::vector<NodeShare>> original;
  for (std::size_t s = 0; s < stripes; ++s) {
    original.push_back(code.encode(std::span(file).subspan(s * big, big)));
  }
  auto current = original;
  std::vector<bool> alive(code.n() + 1, true);

  auto dead_in = [&](const std::vector<std::size_t>& nodes) -> std::string {
    for (auto j : nodes) {
      if (j < 1 || j > code.n()) return "node " + std::to_string(j) + " does not exist";
      if (!alive[j]) return "node " + std::to_string(j) + " is down";
    }
    return {};
  };

  for (const Event& e : script) {
    EventResult res{e, false, {}, 0};
    try {
      switch (e.kind) {
        case EventKind::Fail: {
          if (e.node < 1 || e.node > code.n()) {
            res.message = "node " + std::to_string(e.node) + " does not exist";
          } else if (!alive[e.node]) {
            res.message = "node " + std::to_string(e.node) + " is already down";
          } else {
            alive[e.node] = false;
            for (auto& stripe : current) stripe[e.node - 1].payload = GfMatrix(code.field(), 0, 0);
            res.ok = true;
          }
          break;
        }
        case EventKind::Repair: {
          if (e.node < 1 || e.node > code.n() || alive[e.node]) {
            res.message = "node " + std::to_string(e.node) + " is not down";
          } else if (auto why = dead_in(e.nodes); !why.empty()) {
            res.message = why;
          } else if (e.nodes.size() != code.d()) {
            res.message = "repair needs d = " + std::to_string(code.d()) + " helpers, got " +
                          std::to_string(e.nodes.size());
          } else {
            std::vector<NodeShare> rebuilt;
            for (std::size_t s = 0; s < stripes; ++s) {
              std::vector<RepairPacket> packets;
              for (auto h : e.nodes) {
                packets.push_back(code.repair_helper(current[s][h - 1], e.node));
                res.symbols += packets.back().payload.size();
              }
              rebuilt.push_back(code.repair_assemble(packets));
            }
            bool exact = true;
            for (std::size_t s = 0; s < stripes; ++s)
              exact = exact && rebuilt[s].payload == original[s][e.node - 1].payload;
            if (exact) {
              for (std::size_t s = 0; s < stripes; ++s) current[s][e.node - 1] = rebuilt[s];
              alive[e.node] = true;
              res.ok = true;
            } else {
              res.message = "repaired share differs from the original";
            }
          }
          break;
        }
        case EventKind::Reconstruct: {
          if (auto why = dead_in(e.nodes); !why.empty()) {
            res.message = why;
          } else if (e.nodes.size() != code.k()) {
            res.message = "reconstruction needs k = " + std::to_string(code.k()) +
                          " nodes, got " + std::to_string(e.nodes.size());
          } else {
            bool exact = true;
            for (std::size_t s = 0; s < stripes; ++s) {
              std::vector<NodeShare> shares;
              for (auto j : e.nodes) {
                shares.push_back(current[s][j - 1]);
                res.symbols += shares.back().payload.size();
              }
              const auto part = code.reconstruct(shares);
              exact = exact && std::equal(part.begin(), part.end(), file.begin() + static_cast<std::ptrdiff_t>(s * big));
            }
            res.ok = exact;
            if (!exact) res.message = "decoded file differs from the original";
          }
          break;
        }
      }
    } catch (const Error& err) {
      res.ok = false;
      res.message = err.what();
    }
    if (res.symbols > 0 || res.ok) {
      std::vector<std::size_t> nodes = e.nodes;
      if (e.kind != EventKind::Reconstruct) nodes.insert(nodes.begin(), e.node);
      const char* op = e.kind == EventKind::Fail     ? "fail"
                       : e.kind == EventKind::Repair ? "repair"
                                                     : "reconstruct";
      report.ledger.record({op, std::move(nodes), res.symbols});
    }
    report.events.push_back(std::move(res));
  }
  return report;
}

std::string SimulationReport::text(const RegeneratingCode& code) const {
  std::ostringstream out;
  out << "code " << to_string(code.kind()) << " n=" << code.n() << " k=" << code.k()
      << " d=" << code.d() << " q=" << code.field().modulus() << " b=" << code.b()
      << "  B=" << code.file_size() << " alpha=" << code.alpha() << " beta=" << code.beta()
      << "  stripes=" << stripes << " seed=" << seed << "\n";
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& r = events[i];
    out << "  " << (i + 1) << ". " << r.event.text() << ": " << (r.ok ? "ok" : "FAILED");
    if (r.symbols > 0) out << ", " << r.symbols << " symbols";
    if (!r.message.empty()) out << " (" << r.message << ")";
    out << "\n";
  }
  const std::size_t repairs = ledger.count("repair");
  const std::size_t recons = ledger.count("reconstruct");
  out << "events: " << events.size() << ", failed: " << failures() << "\n";
  out << "repair traffic: " << ledger.total("repair") << " symbols over " << repairs
      << " repairs (d*beta per stripe = " << code.d() * code.beta() << ")\n";
  out << "reconstruction traffic: " << ledger.total("reconstruct") << " symbols over " << recons
      << " reconstructions (k*alpha per stripe = " << code.k() * code.alpha() << ")\n";
  out << "total: " << ledger.total() << " symbols\n";
  return out.str();
}

std::string SimulationReport::csv() const {
  std::ostringstream out;
  out << "index,event,ok,symbols,message\n";
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& r = events[i];
    std::string msg = r.message;
    std::replace(msg.begin(), msg.end(), '"', '\'');
    out << (i + 1) << ",\"" << r.event.text() << "\"," << (r.ok ? 1 : 0) << ',' << r.symbols
        << ",\"" << msg << "\"\n";
  }
  return out.str();
}

}  // namespace regen::storage
