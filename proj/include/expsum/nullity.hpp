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

// Nullity l_m(f) = log_p deg gcd(f*, z^{p^m} - z), the splitting exponent s
// and the divisor profile {(m, l_m) : n | m | s}.
//
// The main backend works with f* in its linearized form. Writing t for the
// Frobenius, a p-polynomial sum c_j z^{p^j} is the skew polynomial
// sum c_j t^j with t*c = c^p*t, composition becomes multiplication and the
// ordinary gcd of two separable p-polynomials is their right gcd. Reducing
// t^m modulo f* is then a walk of m cheap steps.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "expsum/quadfunc.hpp"

namespace expsum {

/// Skew polynomial sum c_j t^j over a field, no trailing zeros.
struct SkewPoly {
  std::vector<FieldElem> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

namespace skew {

void normalize(SkewPoly& a);
/// Composition a(b(z)).
SkewPoly mul(const FieldCtx& k, const SkewPoly& a, const SkewPoly& b);
/// Remainder r of a = q*b + r with deg r < deg b.
SkewPoly rrem(const FieldCtx& k, SkewPoly a, const SkewPoly& b);
/// Right gcd; only its degree is meaningful to callers.
SkewPoly rgcd(const FieldCtx& k, SkewPoly a, SkewPoly b);
/// Walks t^0, t^1, ... modulo a fixed modulus.
class FrobeniusWalk {
 public:
  FrobeniusWalk(const FieldCtx& k, SkewPoly modulus);
  /// Advance from t^m to t^{m+1}.
  void step();
  std::uint64_t exponent() const { return m_; }
  /// t^m mod modulus.
  const SkewPoly& current() const { return h_; }
  /// q-degree of rgcd(modulus, t^m - 1).
  int gcd_qdegree() const;

 private:
  const FieldCtx* k_;
  SkewPoly mod_;
  FieldElem lead_inv_;
  SkewPoly h_;
  std::uint64_t m_ = 0;
};

}  // namespace skew

SkewPoly to_skew(const LinearizedPoly& L);

/// l_m(f); m must be a multiple of n.
unsigned nullity_at(const QuadFunc& f, std::uint64_t m);

/// Same quantity through the dense polynomial gcd (small alpha only).
unsigned nullity_dense(const QuadFunc& f, std::uint64_t m);

/// Same quantity as the kernel dimension of z -> f*(z) on F_{p^m}; uses the
/// given working field (degree m) and an embedding of the base field into it.
unsigned nullity_matrix(const QuadFunc& f, const CtxPtr& work);

struct NullitySearchLimits {
  /// s is searched among i*n for i <= ceiling_factor.
  std::uint64_t ceiling_factor = 512;
};

struct NullityProfile {
  Residue p = 0;
  unsigned n = 1;
  std::uint64_t alpha = 0;
  std::uint64_t s = 0;
  /// m -> l_m for every m with n | m | s.
  std::map<std::uint64_t, unsigned> entries;

  /// l_m for any multiple m of n, through l_m = l_{gcd(m, s)}.
  unsigned query(std::uint64_t m) const;
};

std::uint64_t splitting_exponent(const QuadFunc& f, NullitySearchLimits limits = {});
NullityProfile nullity_profile(const QuadFunc& f, NullitySearchLimits limits = {});

/// Sorted divisors of x.
std::vector<std::uint64_t> divisors(std::uint64_t x);

}  // namespace expsum
