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
#include "expsum/linalg.hpp"

namespace expsum::linalg {

ZpMatrix identity(std::size_t n) {
  ZpMatrix m(n, std::vector<Residue>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZpMatrix mul(const ZpMatrix& a, const ZpMatrix& b, Residue p) {
  std::size_t rows = a.size(), inner = b.size(), cols = inner ? b[0].size() : 0;
  ZpMatrix c(rows, std::vector<Residue>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      Residue x = a[i][k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] = zp::add(c[i][j], zp::mul(x, b[k][j], p), p);
    }
  return c;
}

ZpMatrix transpose(const ZpMatrix& a) {
  if (a.empty()) return {};
  ZpMatrix t(a[0].size(), std::vector<Residue>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

namespace {

// Gauss-Jordan on a (and optionally a right-hand side); returns pivot columns.
std::vector<std::size_t> reduce(ZpMatrix& a, std::vector<Residue>* rhs, Residue p) {
  std::vector<std::size_t> pivots;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    if (rhs) std::swap((*rhs)[piv], (*rhs)[r]);
    Residue inv = zp::inv(a[r][c], p);
    for (auto& x : a[r]) x = zp::mul(x, inv, p);
    if (rhs) (*rhs)[r] = zp::mul((*rhs)[r], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Residue f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = zp::sub(a[i][j], zp::mul(f, a[r][j], p), p);
      if (rhs) (*rhs)[i] = zp::sub((*rhs)[i], zp::mul(f, (*rhs)[r], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(ZpMatrix a, Residue p) { return reduce(a, nullptr, p).size(); }

std::optional<std::vector<Residue>> solve(ZpMatrix a, std::vector<Residue> b, Residue p) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = reduce(a, &b, p);
  for (std::size_t i = pivots.size(); i < b.size(); ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Residue> x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

}  // namespace expsum::linalg
