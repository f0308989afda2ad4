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

#include <optional>
#include <vector>

#include "expsum/fieldcore.hpp"

namespace expsum {

/// Dense matrix over F_p, row-major.
using ZpMatrix = std::vector<std::vector<Residue>>;

namespace linalg {

ZpMatrix identity(std::size_t n);
ZpMatrix mul(const ZpMatrix& a, const ZpMatrix& b, Residue p);
ZpMatrix transpose(const ZpMatrix& a);
std::size_t rank(ZpMatrix a, Residue p);
/// One solution of a x = b (free variables set to zero), or nothing.
std::optional<std::vector<Residue>> solve(ZpMatrix a, std::vector<Residue> b, Residue p);

/// Matrix whose column u holds the coordinates of phi(x^u) in k.
template <class Map>
ZpMatrix matrix_of(const FieldCtx& k, Map&& phi) {
  const unsigned d = k.degree();
  ZpMatrix m(d, std::vector<Residue>(d, 0));
  for (unsigned u = 0; u < d; ++u) {
    FieldElem y = phi(k.basis(u));
    for (unsigned i = 0; i < d; ++i) m[i][u] = y.coeffs[i];
  }
  return m;
}

}  // namespace linalg
}  // namespace expsum
