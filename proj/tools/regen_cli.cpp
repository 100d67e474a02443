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

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "regen/code.hpp"
#include "regen/errors.hpp"
#include "regen/nmsr.hpp"
#include "regen/rational.hpp"
#include "regen/storage.hpp"
#include "regen/tables.hpp"

namespace fs = std::filesystem;
using namespace regen;

namespace {

enum Exit { kOk = 0, kParameter = 2, kIo = 3, kProtocol = 4 };

struct CodeOptions {
  std::string code = "nmbr";
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> d;
  std::uint32_t q = 2;
  std::size_t b = 0;

  void attach(CLI::App* app) {
    app->add_option("--code", code, "nmbr, nmbr-sys, nmsr or nmsr-punct")->capture_default_str();
    app->add_option("--n", n, "number of nodes")->required();
    app->add_option("--k", k, "reconstruction degree")->required();
    app->add_option("--d", d,
                    "repair degree (default 2k-2 for nmsr, 2k-1 for nmsr-punct)");
    app->add_option("--q", q, "prime base field size")->capture_default_str();
    app->add_option("--b", b, "size parameter; k must divide b")->required();
  }

  storage::CodeSpec spec() const {
    storage::CodeSpec s;
    s.kind = parse_code_kind(code);
    s.n = n;
    s.k = k;
    s.q = q;
    s.b = b;
    if (d) {
      s.d = *d;
    } else if (s.kind == CodeKind::Nmsr) {
      s.d = 2 * k - 2;
    } else if (s.kind == CodeKind::NmsrPunctured) {
      s.d = 2 * k - 1;
    } else {
      throw ArgumentError("--d is required for " + code);
    }
    return s;
  }
};

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string poly_text(const ext::Poly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out;
}

void print_entry(const storage::LedgerEntry& e) {
  std::cout << e.operation << " nodes=";
  for (std::size_t i = 0; i < e.nodes.size(); ++i) std::cout << (i ? "," : "") << e.nodes[i];
  std::cout << " symbols=" << e.symbols << "\n";
}

int params_check(const CodeOptions& opt) {
  const auto spec = opt.spec();
  const auto code = storage::make_code(spec);
  const Rational rate(BigInt(code->file_size()), BigInt(code->alpha()) * code->n());
  std::cout << "code      " << to_string(code->kind()) << "\n"
            << "n k d     " << code->n() << " " << code->k() << " " << code->d() << "\n"
            << "q b       " << code->field().modulus() << " " << code->b() << "\n"
            << "alpha     " << code->alpha() << "\n"
            << "beta      " << code->beta() << "\n"
            << "B         " << code->file_size() << "\n"
            << "rate      " << to_decimal(rate, 6) << "\n"
            << "poly      " << poly_text(code->polynomial()) << "\n"
            << "exponents " << join(code->exponents()) << "\n";
  if (const auto* p = dynamic_cast<const nmsr::PuncturedNmsr*>(code.get())) {
    std::cout << "punctured parent node " << p->punctured_node() << "\n";
  }
  return kOk;
}

int run_tables(const std::string& preset, const std::string& family, const CodeOptions& custom,
               bool csv) {
  tables::Table t;
  if (preset == "custom") {
    if (family != "nmbr" && family != "nmsr") {
      throw ArgumentError("custom tables need --code nmbr or --code nmsr");
    }
    const auto fam = family == "nmbr" ? tables::Family::Mbr : tables::Family::Msr;
    const std::size_t d = custom.d ? *custom.d : 2 * custom.k - 2;
    t = tables::custom(fam, custom.n, custom.k, d, custom.b);
  } else {
    t = tables::preset(preset);
  }
  std::cout << (csv ? tables::render_csv(t) : tables::render_text(t));
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Regenerating-code toolkit: encode, repair and reconstruct files, simulate a "
               "cluster, and print the comparison tables."};
  app.require_subcommand(1);

  auto* encode = app.add_subcommand("encode", "stripe and encode a file into n shares");
  CodeOptions enc;
  std::string input;
  std::string enc_out;
  encode->add_option("input", input, "file to encode")->required();
  enc.attach(encode);
  encode->add_option("--out", enc_out, "output directory")->required();

  auto* repair = app.add_subcommand("repair", "rebuild one node's share from d helpers");
  std::string rep_dir;
  std::size_t failed = 0;
  std::vector<std::size_t> helpers;
  std::string rep_out;
  repair->add_option("dir", rep_dir, "directory holding manifest.json and shares")->required();
  repair->add_option("--failed", failed, "node to rebuild")->required();
  repair->add_option("--helpers", helpers, "helper nodes, comma separated")
      ->required()
      ->delimiter(',');
  repair->add_option("--out", rep_out, "output share path (default: in place)");

  auto* recon = app.add_subcommand("reconstruct", "decode the file from k shares");
  std::string rec_dir;
  std::vector<std::size_t> nodes;
  std::string rec_out;
  recon->add_option("dir", rec_dir, "directory holding manifest.json and shares")->required();
  recon->add_option("--nodes", nodes, "k nodes, comma separated")->required()->delimiter(',');
  recon->add_option("--out", rec_out, "output file")->required();

  auto* sim = app.add_subcommand("simulate", "run a failure script against an in-memory cluster");
  CodeOptions simc;
  simc.attach(sim);
  std::string script_path;
  std::size_t events = 20;
  std::uint64_t seed = 1;
  std::size_t stripes = 1;
  bool sim_csv = false;
  sim->add_option("--script", script_path, "event script; random events when omitted");
  sim->add_option("--events", events, "random script length")->capture_default_str();
  sim->add_option("--seed", seed, "seed for the file and the random script")
      ->capture_default_str();
  sim->add_option("--stripes", stripes, "stripes in the simulated file")->capture_default_str();
  sim->add_flag("--csv", sim_csv, "emit the per-event report as CSV");

  auto* tab = app.add_subcommand("tables", "print a comparison table");
  std::string preset;
  CodeOptions tabc;
  std::string family;
  bool tab_csv = false;
  tab->add_option("preset", preset, "table1, table2, table3, table4 or custom")->required();
  tab->add_option("--code", family, "nmbr or nmsr (custom only)");
  tab->add_option("--n", tabc.n);
  tab->add_option("--k", tabc.k);
  tab->add_option("--d", tabc.d);
  tab->add_option("--b", tabc.b);
  tab->add_flag("--csv", tab_csv, "emit CSV");

  auto* check = app.add_subcommand("params-check", "validate parameters and print the metrics");
  CodeOptions chk;
  chk.attach(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParameter;
  }

  if (*encode) {
    const auto m = storage::cmd_encode(input, enc.spec(), enc_out);
    std::cout << "encoded " << m.file_length << " bytes into " << m.stripe_count
              << " stripe(s) of " << m.stripe_symbols << " symbols on " << m.n << " nodes\n"
              << "content sha256 " << m.content_digest << "\n";
    return kOk;
  }
  if (*repair) {
    print_entry(storage::cmd_repair(rep_dir, failed, helpers, rep_out));
    return kOk;
  }
  if (*recon) {
    print_entry(storage::cmd_reconstruct(rec_dir, nodes, rec_out));
    return kOk;
  }
  if (*sim) {
    const auto code = storage::make_code(simc.spec());
    std::vector<storage::Event> script;
    if (script_path.empty()) {
      script = storage::random_script(*code, events, seed);
    } else {
      const auto bytes = storage::read_file(script_path);
      script = storage::parse_script(std::string(bytes.begin(), bytes.end()));
    }
    const auto report = storage::simulate(*code, script, stripes, seed);
    std::cout << (sim_csv ? report.csv() : report.text(*code));
    return report.failures() == 0 ? kOk : kProtocol;
  }
  if (*tab) return run_tables(preset, family, tabc, tab_csv);
  return params_check(chk);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kParameter;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const ProtocolError& e) {
    std::cerr << "protocol error: " << e.what() << "\n";
    return kProtocol;
  } catch (const ArithmeticError& e) {
    std::cerr << "protocol error: " << e.what() << "\n";
    return kProtocol;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
