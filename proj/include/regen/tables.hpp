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

#ifndef REGEN_TABLES_HPP
#define REGEN_TABLES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regen/rational.hpp"

// Size and rate comparisons against product-matrix baselines. All sizes are
// in bits (F_2 symbols); baseline columns come from closed forms only.

namespace regen::tables {

enum class Family { Mbr, Msr };

/// A value as printed in the published comparison, e.g. {"2.5", "GB"}.
/// Units are bits ("") or decimal bytes (KB, MB, GB, TB).
struct Printed {
  std::string value;
  std::string unit;
  /// The printed value disagrees with its own formula; shown, not checked.
  bool erratum = false;
};

struct Row {
  std::string scheme;
  BigInt q;
  Rational beta;
  Rational alpha;
  Rational B;
  Rational rate;
  /// Rate from the scheme's closed-form rate expression, kept apart from
  /// B / (alpha n) so the two can be compared.
  Rational rate_closed_form;
  std::optional<Printed> printed_q;
  std::optional<Printed> printed_B;
  std::optional<Printed> printed_rate;
};

struct Group {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t b = 0;
  std::optional<Printed> printed_alpha;
  std::optional<Printed> printed_beta;
  std::vector<Row> rows;
};

struct Table {
  std::string name;
  std::string caption;
  Family family = Family::Mbr;
  std::vector<Group> groups;
  /// Symbolic tables (table1, table3): rows of {scheme, q, beta, alpha, B, rate}.
  std::vector<std::vector<std::string>> formulas;
};

/// NMBR plus PM-MBR and EPM-MBR concatenated to the same alpha and beta.
Group mbr_group(std::size_t n, std::size_t k, std::size_t d, std::size_t b);
/// NMSR (d = 2k - 2) plus PM-MSR and EPM-MSR.
Group msr_group(std::size_t n, std::size_t k, std::size_t b);

/// table1 .. table4. Throws ArgumentError for anything else.
Table preset(std::string_view name);
/// Validates the parameters for the family, then builds one group.
Table custom(Family family, std::size_t n, std::size_t k, std::size_t d, std::size_t b);

struct Check {
  std::string what;
  std::string computed;
  std::string printed;
  bool ok = false;
  bool erratum = false;
};

/// |computed - printed| < one unit in the printed value's last digit, with
/// computed sizes expressed in the printed unit. Exact for q.
Check compare(const std::string& what, const Rational& bits_or_ratio, const Printed& printed);
std::vector<Check> checks(const Table& table);

std::string render_text(const Table& table);
std::string render_csv(const Table& table);

/// Best decimal unit for a size in bits, e.g. "2.50001 GB".
std::string human_size(const Rational& bits);

}  // namespace regen::tables

#endif  // REGEN_TABLES_HPP
