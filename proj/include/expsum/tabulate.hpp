/* Copyright (C) 2026 The expsum authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

// Nullity tables over the prime field: every monic f = sum_{i<=k} a_i x^{p^i+1}
// with k <= alpha_max, its splitting exponent s and all (m, l_m) with m | s.
//
// CSV layout, one header line then one row per function:
//   coeffs;s;pairs
//   1 1 0 1;30;(1,1) (2,1) (3,2) (5,1) (6,2) (10,5) (15,2) (30,6)

#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "expsum/quadfunc.hpp"

namespace expsum {

struct TableRow {
  std::vector<Residue> coeffs;
  std::uint64_t s = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> pairs;

  bool operator==(const TableRow&) const = default;
};

/// Coefficient vectors a_0..a_k with a_k = 1, k = 0..alpha_max; a_0 varies fastest.
std::vector<std::vector<Residue>> enumerate_coefficients(Residue p, unsigned alpha_max);
/// The same rows as quadratic functions over F_p.
std::vector<QuadFunc> enumerate_functions(Residue p, unsigned alpha_max);

TableRow table_row(const QuadFunc& f, const std::vector<Residue>& coeffs);
/// Rows in enumeration order; jobs > 1 spreads rows over worker threads.
std::vector<TableRow> generate_table(Residue p, unsigned alpha_max, unsigned jobs = 1);

std::string format_coeffs(const std::vector<Residue>& c);
std::string format_pairs(const std::vector<std::pair<std::uint64_t, unsigned>>& pairs);
void write_csv(std::ostream& os, const std::vector<TableRow>& rows);
/// MalformedReference on any syntax error.
std::vector<TableRow> read_csv(std::istream& is);
std::vector<TableRow> read_csv_file(const std::string& path);

struct CellDiff {
  std::size_t row = 0;
  /// "coeffs", "s", "pair m=<m>", or "row" for missing/extra rows.
  std::string column;
  std::string expected;
  std::string actual;
};

struct DiffReport {
  std::size_t rows = 0;
  std::vector<CellDiff> diffs;
  bool empty() const { return diffs.empty(); }
};

DiffReport diff_reference(const std::vector<TableRow>& generated, const std::vector<TableRow>& reference);

}  // namespace expsum
