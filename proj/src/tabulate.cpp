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
#include "expsum/tabulate.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "expsum/nullity.hpp"

namespace expsum {

std::vector<std::vector<Residue>> enumerate_coefficients(Residue p, unsigned alpha_max) {
  std::vector<std::vector<Residue>> out;
  for (unsigned k = 0; k <= alpha_max; ++k) {
    std::vector<Residue> c(k + 1, 0);
    c[k] = 1;
    for (;;) {
      out.push_back(c);
      unsigned i = 0;
      while (i < k) {
        if (++c[i] < p) break;
        c[i] = 0;
        ++i;
      }
      if (i == k) break;
    }
  }
  return out;
}

std::vector<QuadFunc> enumerate_functions(Residue p, unsigned alpha_max) {
  CtxPtr k = default_field(p, 1);
  std::vector<QuadFunc> out;
  for (const auto& c : enumerate_coefficients(p, alpha_max)) out.push_back(QuadFunc::from_residues(k, c));
  return out;
}

TableRow table_row(const QuadFunc& f, const std::vector<Residue>& coeffs) {
  NullityProfile prof = nullity_profile(f);
  TableRow r;
  r.coeffs = coeffs;
  r.s = prof.s;
  for (auto [m, l] : prof.entries) r.pairs.push_back({m, l});
  return r;
}

std::vector<TableRow> generate_table(Residue p, unsigned alpha_max, unsigned jobs) {
  auto coeffs = enumerate_coefficients(p, alpha_max);
  CtxPtr k = default_field(p, 1);
  std::vector<TableRow> rows(coeffs.size());
  auto work = [&](std::size_t i) { rows[i] = table_row(QuadFunc::from_residues(k, coeffs[i]), coeffs[i]); };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) work(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < coeffs.size();) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_coeffs(const std::vector<Residue>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c[i]);
  }
  return s;
}

std::string format_pairs(const std::vector<std::pair<std::uint64_t, unsigned>>& pairs) {
  std::string s;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += ' ';
    s += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
  }
  return s;
}

void write_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "coeffs;s;pairs\n";
  for (const auto& r : rows) os << format_coeffs(r.coeffs) << ';' << r.s << ';' << format_pairs(r.pairs) << '\n';
}

namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw Error(ErrorKind::MalformedReference, "line " + std::to_string(line) + ": " + why);
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    malformed(line, "expected an unsigned integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace

std::vector<TableRow> read_csv(std::istream& is) {
  std::vector<TableRow> rows;
  std::string line;
  std::size_t no = 0;
  if (!std::getline(is, line)) malformed(1, "missing header");
  ++no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "coeffs;s;pairs") malformed(no, "unexpected header '" + line + "'");
  while (std::getline(is, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto a = line.find(';');
    auto b = a == std::string::npos ? a : line.find(';', a + 1);
    if (b == std::string::npos || line.find(';', b + 1) != std::string::npos)
      malformed(no, "expected three ';'-separated fields");
    TableRow r;
    std::istringstream cs(line.substr(0, a));
    std::string tok;
    while (cs >> tok) r.coeffs.push_back(static_cast<Residue>(parse_uint(tok, no)));
    if (r.coeffs.empty()) malformed(no, "empty coefficient list");
    r.s = parse_uint(std::string_view(line).substr(a + 1, b - a - 1), no);
    std::istringstream ps(line.substr(b + 1));
    while (ps >> tok) {
      if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')') malformed(no, "bad pair '" + tok + "'");
      auto comma = tok.find(',');
      if (comma == std::string::npos) malformed(no, "bad pair '" + tok + "'");
      std::string_view sv(tok);
      r.pairs.push_back({parse_uint(sv.substr(1, comma - 1), no),
                         static_cast<unsigned>(parse_uint(sv.substr(comma + 1, tok.size() - comma - 2), no))});
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<TableRow> read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedReference, "cannot open " + path);
  return read_csv(in);
}

DiffReport diff_reference(const std::vector<TableRow>& generated, const std::vector<TableRow>& reference) {
  DiffReport rep;
  rep.rows = std::max(generated.size(), reference.size());
  for (std::size_t i = 0; i < rep.rows; ++i) {
    if (i >= generated.size()) {
      rep.diffs.push_back({i, "row", format_coeffs(reference[i].coeffs), "<missing>"});
      continue;
    }
    if (i >= reference.size()) {
      rep.diffs.push_back({i, "row", "<missing>", format_coeffs(generated[i].coeffs)});
      continue;
    }
    const TableRow& g = generated[i];
    const TableRow& r = reference[i];
    if (g.coeffs != r.coeffs) rep.diffs.push_back({i, "coeffs", format_coeffs(r.coeffs), format_coeffs(g.coeffs)});
    if (g.s != r.s) rep.diffs.push_back({i, "s", std::to_string(r.s), std::to_string(g.s)});
    std::map<std::uint64_t, unsigned> gm(g.pairs.begin(), g.pairs.end()), rm(r.pairs.begin(), r.pairs.end());
    for (const auto& [m, l] : rm) {
      auto it = gm.find(m);
      if (it == gm.end()) rep.diffs.push_back({i, "pair m=" + std::to_string(m), std::to_string(l), "<missing>"});
      else if (it->second != l)
        rep.diffs.push_back({i, "pair m=" + std::to_string(m), std::to_string(l), std::to_string(it->second)});
    }
    for (const auto& [m, l] : gm)
      if (!rm.count(m)) rep.diffs.push_back({i, "pair m=" + std::to_string(m), "<missing>", std::to_string(l)});
  }
  return rep;
}

}  // namespace expsum
