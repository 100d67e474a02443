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

#include "regen/tables.hpp"

#include <iomanip>
#include <sstream>

#include "regen/errors.hpp"
#include "regen/nmbr.hpp"
#include "regen/nmsr.hpp"

namespace regen::tables {

namespace {

Rational frac(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

BigInt pow2(unsigned w) {
  BigInt p = 1;
  p <<= w;
  return p;
}

int unit_exponent(const std::string& unit) {
  if (unit.empty()) return -1;
  if (unit == "KB") return 1;
  if (unit == "MB") return 2;
  if (unit == "GB") return 3;
  if (unit == "TB") return 4;
  throw ArgumentError("unknown unit '" + unit + "'");
}

Rational in_unit(const Rational& bits, const std::string& unit) {
  const int e = unit_exponent(unit);
  if (e < 0) return bits;
  BigInt scale = 8;
  for (int i = 0; i < e; ++i) scale *= 1000;
  return bits / Rational(scale);
}

std::string trim_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string exact_text(const Rational& x, int digits) {
  if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
  return to_decimal(x, digits);
}

std::optional<Printed> P(const char* value, const char* unit = "", bool erratum = false) {
  return Printed{value, unit, erratum};
}

void annotate(Row& row, std::optional<Printed> q, std::optional<Printed> B,
              std::optional<Printed> rate) {
  row.printed_q = std::move(q);
  row.printed_B = std::move(B);
  row.printed_rate = std::move(rate);
}

Table table2() {
  Table t{"table2", "NMBR vs PM-MBR and EPM-MBR at common parameters (sizes in bytes)",
          Family::Mbr, {}, {}};
  struct Spec {
    std::size_t n, k, d, b;
    const char *alpha, *alpha_u, *beta, *beta_u;
    const char *b1, *u1, *r1, *q2, *b2, *u2, *r2, *b3, *u3, *r3;
    bool b3_erratum;
  };
  const Spec specs[] = {
      {30, 20, 20, 10000 * 20, "250", "MB", "12.5", "MB",
       "2.5", "GB", "0.33", "32", "2.625", "GB", "0.35", "0.525", "GB", "0.07", false},
      {26, 22, 24, 16750 * 22, "841.7", "MB", "35.07", "MB",
       "10.03", "GB", "0.4583", "32", "10.41", "GB", "0.4759", "2.8", "GB", "0.095", true},
      {260, 220, 240, 16749 * 220, "8.416", "GB", "35.06", "MB",
       "1.002", "TB", "0.4583", "512", "1.006", "TB", "0.4601", "0.11", "TB", "0.05", false},
      {2600, 2200, 2400, 16752 * 2200, "84.18", "GB", "35.07", "MB",
       "100.32", "TB", "0.4583", "4096", "100.36", "TB", "0.4585", "8.36", "TB", "0.038", false},
  };
  for (const auto& s : specs) {
    (void)nmbr::validate_params(s.n, s.k, s.d, 2, s.b);
    Group g = mbr_group(s.n, s.k, s.d, s.b);
    g.printed_alpha = P(s.alpha, s.alpha_u);
    g.printed_beta = P(s.beta, s.beta_u);
    annotate(g.rows[0], P("2"), P(s.b1, s.u1), P(s.r1));
    annotate(g.rows[1], P(s.q2), P(s.b2, s.u2), P(s.r2));
    annotate(g.rows[2], P("2"), P(s.b3, s.u3, s.b3_erratum), P(s.r3));
    t.groups.push_back(std::move(g));
  }
  return t;
}

Table table4() {
  Table t{"table4", "NMSR vs PM-MSR and EPM-MSR at common parameters, d = 2k - 2 (sizes in bytes)",
          Family::Msr, {}, {}};
  struct Spec {
    std::size_t n, k, b;
    const char *alpha, *alpha_u, *beta, *beta_u;
    const char *b1, *u1, *r1, *q2, *b2, *u2, *r2, *b3, *u3, *r3;
  };
  const Spec specs[] = {
      {20, 10, 200 * 10, "45", "KB", "5", "KB",
       "405.225", "KB", "0.45025", "256", "450", "KB", "0.5", "56.25", "KB", "0.0625"},
      {100, 40, 1200 * 40, "7.02", "MB", "0.18", "MB",
       "0.27", "GB", "0.39", "4096", "0.28", "GB", "0.4", "0.02", "GB", "0.033"},
      {100, 40, 6000 * 40, "175.5", "MB", "4.5", "MB",
       "6.84", "GB", "0.39", "4096", "7.02", "GB", "0.4", "0.585", "GB", "0.033"},
      {1000, 400, 190 * 400, "1800", "KB", "4.5", "KB",
       "0.718", "GB", "0.39", "524288", "0.72", "GB", "0.4", "37.9", "MB", "0.02"},
  };
  for (const auto& s : specs) {
    (void)nmsr::validate_params(s.n, s.k, 2, s.b);
    Group g = msr_group(s.n, s.k, s.b);
    g.printed_alpha = P(s.alpha, s.alpha_u);
    g.printed_beta = P(s.beta, s.beta_u);
    annotate(g.rows[0], P("2"), P(s.b1, s.u1), P(s.r1));
    annotate(g.rows[1], P(s.q2), P(s.b2, s.u2), P(s.r2));
    annotate(g.rows[2], P("2"), P(s.b3, s.u3), P(s.r3));
    t.groups.push_back(std::move(g));
  }
  return t;
}

}  // namespace

Group mbr_group(std::size_t n, std::size_t k, std::size_t d, std::size_t b) {
  const auto m = nmbr::metrics(n, k, d, b);
  const unsigned L = ceil_log2(BigInt(n));
  const BigInt nn = n, kn = k, dn = d, bn = b;
  const Rational alpha(m.alpha), beta(m.beta);
  const Rational lead = Rational(kn * kn, dn * nn);
  Group g{n, k, d, b, std::nullopt, std::nullopt, {}};

  Row ours{"NMBR", 2, beta, alpha, Rational(m.B), m.rate,
           lead * (Rational(dn, kn) - frac(1, 2) + Rational(BigInt(1), 2 * bn)), {}, {}, {}};
  const Rational pm_B = Rational(bn * bn, kn) * (Rational(dn) - Rational(kn - 1, 2));
  const Rational pm_closed = lead * (Rational(dn, kn) - Rational(kn - 1, 2 * kn));
  Row pm{"PM-MBR", pow2(L), beta, alpha, pm_B, pm_B / (alpha * nn), pm_closed, {}, {}, {}};
  const Rational epm_B = pm_B / L;
  Row epm{"EPM-MBR", 2, beta, alpha, epm_B, epm_B / (alpha * nn), pm_closed / L, {}, {}, {}};
  g.rows = {ours, pm, epm};
  return g;
}

Group msr_group(std::size_t n, std::size_t k, std::size_t b) {
  const auto m = nmsr::metrics(n, k, b);
  const unsigned L = ceil_log2(BigInt(n) * (k - 1));
  const BigInt nn = n, kn = k, bn = b;
  const Rational alpha(m.alpha), beta(m.beta);
  Group g{n, k, 2 * k - 2, b, std::nullopt, std::nullopt, {}};

  Row ours{"NMSR", 2, beta, alpha, Rational(m.B), m.rate,
           Rational(kn, nn) * (Rational(1) - Rational(BigInt(1), kn) + Rational(BigInt(1), bn)),
           {}, {}, {}};
  const Rational pm_B = Rational(bn * bn * (kn - 1), kn);
  Row pm{"PM-MSR", pow2(L), beta, alpha, pm_B, pm_B / (alpha * nn), Rational(kn, nn), {}, {}, {}};
  const Rational epm_B = pm_B / L;
  Row epm{"EPM-MSR", 2, beta, alpha, epm_B, epm_B / (alpha * nn), Rational(kn, nn * L),
          {}, {}, {}};
  g.rows = {ours, pm, epm};
  return g;
}

Table preset(std::string_view name) {
  if (name == "table1") {
    return {"table1", "NMBR vs PM-MBR and EPM-MBR, general n, k, d (sizes in bits)", Family::Mbr,
            {},
            {{"NMBR", "2", "b^2/k^2", "d b^2/k^2", "b(b+1)/2 + b^2 (d/k - 1)",
              "(k^2/(d n)) (d/k - 1/2 + 1/(2b))"},
             {"PM-MBR", "2^ceil(log2 n)", "b^2/k^2", "d b^2/k^2", "(b^2/k) (d - (k-1)/2)",
              "(k^2/(d n)) (d/k - (k-1)/(2k))"},
             {"EPM-MBR", "2", "b^2/k^2", "d b^2/k^2",
              "(b^2/(k ceil(log2 n))) (d - (k-1)/2)",
              "(k^2/(d n ceil(log2 n))) (d/k - (k-1)/(2k))"}}};
  }
  if (name == "table2") return table2();
  if (name == "table3") {
    return {"table3", "NMSR vs PM-MSR and EPM-MSR, general n, k, d = 2k - 2 (sizes in bits)",
            Family::Msr,
            {},
            {{"NMSR", "2", "b^2/k^2", "(k-1) b^2/k^2", "(b^2 (k-1)/k) (1 - 1/k + 1/b)",
              "(k/n) (1 - 1/k + 1/b)"},
             {"PM-MSR", "2^ceil(log2(n(k-1)))", "b^2/k^2", "(k-1) b^2/k^2", "b^2 (k-1)/k", "k/n"},
             {"EPM-MSR", "2", "b^2/k^2", "(k-1) b^2/k^2",
              "b^2 (k-1)/(k ceil(log2(n(k-1))))", "k/(n ceil(log2(n(k-1))))"}}};
  }
  if (name == "table4") return table4();
  throw ArgumentError("unknown table preset '" + std::string(name) +
                      "' (expected table1, table2, table3 or table4)");
}

Table custom(Family family, std::size_t n, std::size_t k, std::size_t d, std::size_t b) {
  Table t{"custom", "", family, {}, {}};
  if (family == Family::Mbr) {
    (void)nmbr::validate_params(n, k, d, 2, b);
    t.caption = "NMBR vs PM-MBR and EPM-MBR (sizes in bits)";
    t.groups.push_back(mbr_group(n, k, d, b));
  } else {
    if (d != 2 * k - 2) {
      throw DegreeOrderViolation("NMSR comparisons need d = 2k - 2");
    }
    (void)nmsr::validate_params(n, k, 2, b);
    t.caption = "NMSR vs PM-MSR and EPM-MSR (sizes in bits)";
    t.groups.push_back(msr_group(n, k, b));
  }
  return t;
}

Check compare(const std::string& what, const Rational& value, const Printed& printed) {
  const Rational computed = in_unit(value, printed.unit);
  const Rational p = parse_decimal(printed.value);
  const Rational tol = last_digit_unit(printed.value);
  const Rational diff = computed > p ? Rational(computed - p) : Rational(p - computed);
  const auto dot = printed.value.find('.');
  const int shown = dot == std::string::npos ? 0 : static_cast<int>(printed.value.size() - dot - 1);
  return {what, trim_zeros(to_decimal(computed, shown + 3)) + printed.unit,
          printed.value + printed.unit, diff < tol, printed.erratum};
}

std::vector<Check> checks(const Table& table) {
  std::vector<Check> out;
  for (const auto& g : table.groups) {
    const std::string tag = "n=" + std::to_string(g.n) + " ";
    if (g.printed_alpha) out.push_back(compare(tag + "alpha", g.rows[0].alpha, *g.printed_alpha));
    if (g.printed_beta) out.push_back(compare(tag + "beta", g.rows[0].beta, *g.printed_beta));
    for (const auto& r : g.rows) {
      if (r.printed_q) out.push_back(compare(tag + r.scheme + " q", Rational(r.q), *r.printed_q));
      if (r.printed_B) out.push_back(compare(tag + r.scheme + " B", r.B, *r.printed_B));
      if (r.printed_rate) out.push_back(compare(tag + r.scheme + " rate", r.rate, *r.printed_rate));
    }
  }
  return out;
}

std::string human_size(const Rational& bits) {
  const Rational bytes = bits / 8;
  static const char* kUnits[] = {"TB", "GB", "MB", "KB"};
  BigInt scale = BigInt(1000) * 1000 * 1000 * 1000;
  for (const char* u : kUnits) {
    if (bytes >= Rational(scale)) {
      return trim_zeros(to_decimal(bytes / Rational(scale), 5)) + " " + u;
    }
    scale /= 1000;
  }
  return exact_text(bits, 3) + " bits";
}

namespace {

std::string printed_text(const std::optional<Printed>& p) {
  if (!p) return "";
  return p->value + p->unit + (p->erratum ? "*" : "");
}

std::string row_status(const Group& g, const Row& r) {
  const std::string tag = "n=" + std::to_string(g.n) + " ";
  bool any = false, ok = true, erratum = false;
  for (const auto* p : {&r.printed_B, &r.printed_rate, &r.printed_q}) {
    if (!*p) continue;
    any = true;
    const Rational v = p == &r.printed_B ? r.B : p == &r.printed_rate ? r.rate : Rational(r.q);
    const Check c = compare(tag, v, **p);
    if (c.erratum) {
      erratum = true;
    } else {
      ok = ok && c.ok;
    }
  }
  if (!any) return "";
  if (!ok) return "MISMATCH";
  return erratum ? "ok (erratum)" : "ok";
}

void pad_table(std::ostringstream& out, const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << "  " << line << "\n";
  }
}

}  // namespace

std::string render_text(const Table& table) {
  std::ostringstream out;
  out << table.name << ": " << table.caption << "\n";
  if (!table.formulas.empty()) {
    std::vector<std::vector<std::string>> cells{{"", "q", "beta", "alpha", "B", "rate"}};
    for (const auto& f : table.formulas) cells.push_back(f);
    pad_table(out, cells);
    return out.str();
  }
  bool erratum = false;
  for (const auto& g : table.groups) {
    out << "\n  n=" << g.n << " k=" << g.k << " d=" << g.d << " b=" << g.b
        << "  alpha=" << human_size(g.rows[0].alpha) << " beta=" << human_size(g.rows[0].beta);
    if (g.printed_alpha) {
      out << "  (printed " << printed_text(g.printed_alpha) << ", " << printed_text(g.printed_beta)
          << ")";
    }
    out << "\n";
    std::vector<std::vector<std::string>> cells{
        {"scheme", "q", "B", "rate", "printed B", "printed rate", "check"}};
    for (const auto& r : g.rows) {
      erratum = erratum || (r.printed_B && r.printed_B->erratum);
      cells.push_back({r.scheme, r.q.str(), human_size(r.B), to_decimal(r.rate, 6),
                       printed_text(r.printed_B), printed_text(r.printed_rate), row_status(g, r)});
    }
    pad_table(out, cells);
  }
  if (erratum) {
    out << "\n  * printed value disagrees with its own closed form and rate; "
           "shown but not checked\n";
  }
  return out.str();
}

std::string render_csv(const Table& table) {
  std::ostringstream out;
  out << "scheme,n,k,d,b,q,beta,alpha,B,rate,printed_B,printed_rate\n";
  if (!table.formulas.empty()) {
    for (const auto& f : table.formulas) {
      out << f[0] << ",,,,," << '"' << f[1] << "\",\"" << f[2] << "\",\"" << f[3] << "\",\""
          << f[4] << "\",\"" << f[5] << "\",,\n";
    }
    return out.str();
  }
  for (const auto& g : table.groups) {
    for (const auto& r : g.rows) {
      out << r.scheme << ',' << g.n << ',' << g.k << ',' << g.d << ',' << g.b << ','
          << r.q.str() << ',' << exact_text(r.beta, 3) << ',' << exact_text(r.alpha, 3) << ','
          << exact_text(r.B, 3) << ',' << to_decimal(r.rate, 6) << ','
          << printed_text(r.printed_B) << ',' << printed_text(r.printed_rate) << "\n";
    }
  }
  return out.str();
}

}  // namespace regen::tables
