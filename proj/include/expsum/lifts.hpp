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

// Relative and closed-form type formulas. Nullities are always inputs here;
// they come from the nullity module and are never recomputed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expsum/cyclotomic.hpp"
#include "expsum/quadfunc.hpp"

namespace expsum {

struct TypeState {
  Residue p = 0;
  std::uint64_t N = 0;
  unsigned l = 0;
  int t = 1;

  bool operator==(const TypeState&) const = default;
};

/// Exponent of q in x; x = 0 raises ZeroValuation.
unsigned vp(std::uint64_t x, std::uint64_t q);
/// Exponent of q in x, or nothing for x = 0.
std::optional<unsigned> vp_or_inf(std::uint64_t x, std::uint64_t q);
/// Multiplicative order of p modulo q.
std::uint64_t oq(std::uint64_t q, std::uint64_t p);

/// gcd(p^{a_1}+1, ..., p^{a_k}+1) through its closed form.
BigInt gcd_plus_plus(Residue p, const std::vector<std::uint64_t>& exps);
/// gcd(p^a + 1, p^b - 1) through its closed form.
BigInt gcd_plus_minus(Residue p, std::uint64_t a, std::uint64_t b);

/// Type at q^s N from the type at N; q an odd prime other than p.
TypeState lift_odd_prime(const TypeState& st, std::uint64_t q, unsigned s, unsigned l_target);

/// Twisted companion: coefficients a_i * beta^{(p^{alpha_i}+1)/2} in `work`,
/// beta the smallest nonsquare of `work` unless given.
QuadFunc make_tilde(const QuadFunc& f, const CtxPtr& work, std::optional<FieldElem> beta = std::nullopt);

/// Type at 2^s N from the types of f and its twist at N; l_target is the
/// nullity at 2^s N and must satisfy the parity l + l~ + l_target even.
TypeState lift_two(const TypeState& st, const TypeState& tilde, unsigned s, unsigned l_target);

/// Largest s allowed by the valuation condition at base N.
std::optional<std::uint64_t> lift_p_max_steps(const QuadFunc& f, std::uint64_t N);
/// (p^s N, p^s l, t); ConditionViolated unless s <= lift_p_max_steps.
TypeState lift_p(const TypeState& st, const QuadFunc& f, unsigned s);
/// p^{(p-3)(N+l)/2} |S|^2 conj(S), the value at pN predicted from S at N.
CyclotomicInt lift_p_value(const CyclotomicInt& S, std::uint64_t N, unsigned l);

/// Whether the equal 2-adic valuation route applies at N; sets nu.
bool balanced_applies(const QuadFunc& f, std::uint64_t N, unsigned* nu = nullptr);
int type_balanced(const QuadFunc& f, std::uint64_t N, unsigned l_N);

struct MonomialResult {
  TypeState state;
  /// 1, 2 or 3 for the three valuation cases.
  int case_id = 0;
  /// Set in cases 2 and 3: the integer value +-p^e.
  std::optional<BigInt> integer_value;
};

/// Closed form for S(a x^{p^alpha+1}, N), a in the field `k` of degree N.
/// The power-residue exponent is computed with exact big integers.
MonomialResult monomial_eval(const FieldCtx& k, const FieldElem& a, std::uint64_t alpha);

struct ShiftedSum {
  bool zero = false;
  Residue phase = 0;
  TypeState base;
  /// A solution of f*(x) = b^{p^alpha}, when one exists.
  std::optional<FieldElem> x0;
};

/// S(f + b x, N) from S(f, N); b lives in the default field of degree N.
ShiftedSum shift_linear(const QuadFunc& f, const FieldElem& b, std::uint64_t N, const TypeState& value);

/// The value a shifted sum stands for: 0 or z^{-phase} * S.
CyclotomicInt shifted_value(const ShiftedSum& s);

}  // namespace expsum
