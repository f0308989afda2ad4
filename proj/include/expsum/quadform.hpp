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

#include <cstdint>
#include <vector>

#include "expsum/cyclotomic.hpp"
#include "expsum/linalg.hpp"
#include "expsum/quadfunc.hpp"

namespace expsum {

struct QuadFormDiag {
  Residue p = 0;
  std::size_t N = 0;
  std::vector<Residue> diag;
  std::size_t rank = 0;
  std::size_t nullity = 0;
  int type = 1;
};

/// Quadratic character of F_p: 0, +1 or -1.
int legendre(long long a, Residue p);

/// Nonsquare of the field with the smallest encoding.
FieldElem smallest_nonsquare(const FieldCtx& k);

/// Gram matrix of Q(x) = Tr(f(x)) on F_{p^N}, N = m*n, in the power basis of
/// the default field of degree N.
ZpMatrix gram_matrix(const QuadFunc& f, std::uint64_t m);
/// Same, in the power basis of an explicit working field, with f carried in
/// through the given embedding.
ZpMatrix gram_matrix(const QuadFunc& f, const Embedding& e);

/// Symmetric congruence reduction to diagonal form.
QuadFormDiag diagonalize(ZpMatrix B, Residue p);

struct TypeNullity {
  int t = 1;
  unsigned l = 0;
};

/// Type and nullity of Tr_{mn}(f(x)) from the Gram matrix; the nullity is
/// cross-checked against nullity_at.
TypeNullity type_direct(const QuadFunc& f, std::uint64_t m);
TypeNullity type_direct(const QuadFunc& f, const Embedding& e);

inline constexpr std::uint64_t kDefaultBruteCap = 20'000'000;

/// sum over x in F_{p^{mn}} of z^{Tr f(x)}, by enumeration.
CyclotomicInt brute_force_sum(const QuadFunc& f, std::uint64_t m, std::uint64_t cap = kDefaultBruteCap);
/// sum of z^{Tr(f(x) + b x)}; b lives in F_{p^{mn}} (default field).
CyclotomicInt brute_force_sum_affine(const QuadFunc& f, std::uint64_t m, const FieldElem& b,
                                     std::uint64_t cap = kDefaultBruteCap);
/// Element-by-element evaluation of f in the field; slow reference for tests.
CyclotomicInt brute_force_sum_literal(const QuadFunc& f, const Embedding& e, std::uint64_t cap = kDefaultBruteCap);

}  // namespace expsum
