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

// Exact arithmetic in F_p and F_{p^d} = F_p[x]/(g), plus dense polynomials
// over such a field. Elements are coefficient vectors in the power basis
// 1, x, ..., x^{d-1}, constant term first.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "expsum/errors.hpp"

namespace expsum {

using Residue = std::uint32_t;
using BigInt = mpz_class;

/// Largest accepted characteristic; products of two residues must fit in 64 bits.
inline constexpr Residue kMaxPrime = (Residue{1} << 31) - 1;

namespace zp {

inline Residue add(Residue a, Residue b, Residue p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Residue>(s >= p ? s - p : s);
}
inline Residue sub(Residue a, Residue b, Residue p) { return a >= b ? a - b : a + (p - b); }
inline Residue neg(Residue a, Residue p) { return a == 0 ? 0 : p - a; }
inline Residue mul(Residue a, Residue b, Residue p) {
  return static_cast<Residue>((std::uint64_t{a} * b) % p);
}
Residue pow(Residue a, std::uint64_t e, Residue p);
/// Throws DivisionByZero for a == 0.
Residue inv(Residue a, Residue p);
/// Reduces an arbitrary signed integer into [0, p).
Residue from_int(long long v, Residue p);

bool is_prime(std::uint64_t n);

}  // namespace zp

/// Polynomials over F_p as bare residue vectors; the workhorse behind element
/// arithmetic and modulus selection.
namespace zpx {

using ZpPoly = std::vector<Residue>;

void trim(ZpPoly& a);
int degree(const ZpPoly& a);
ZpPoly mul(const ZpPoly& a, const ZpPoly& b, Residue p);
ZpPoly sub(const ZpPoly& a, const ZpPoly& b, Residue p);
/// Remainder of a modulo m (m nonzero).
ZpPoly rem(ZpPoly a, const ZpPoly& m, Residue p);
/// Monic gcd; gcd(0, 0) = 0.
ZpPoly gcd(ZpPoly a, ZpPoly b, Residue p);
ZpPoly powmod(const ZpPoly& base, std::uint64_t e, const ZpPoly& m, Residue p);
/// Distinct-degree test: gcd(x^{p^i} - x, g) = 1 for all 1 <= i <= deg(g)/2.
bool is_irreducible(const ZpPoly& g, Residue p);

}  // namespace zpx

struct FieldElem {
  std::vector<Residue> coeffs;

  bool is_zero() const;
  bool operator==(const FieldElem&) const = default;
};

class FieldCtx;
using CtxPtr = std::shared_ptr<const FieldCtx>;

/// A concrete model of F_{p^d}. Immutable after construction.
class FieldCtx {
 public:
  /// `modulus`, when given, lists d+1 residues constant term first and must be
  /// monic and irreducible. Without it the smallest-encoding monic
  /// irreducible of degree d is used. For d = 1 the modulus is ignored.
  static CtxPtr build(Residue p, unsigned d, std::optional<std::vector<Residue>> modulus = std::nullopt);

  Residue p() const { return p_; }
  unsigned degree() const { return d_; }
  /// Monic modulus, d+1 entries; empty for the prime field.
  const std::vector<Residue>& modulus() const { return modulus_; }
  /// p^d.
  const BigInt& order() const { return order_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem constant(Residue c) const;
  FieldElem from_int(long long v) const { return constant(zp::from_int(v, p_)); }
  /// x^u, the u-th power-basis vector (u < d).
  FieldElem basis(unsigned u) const;
  FieldElem from_coeffs(std::vector<Residue> c) const;
  bool contains(const FieldElem& a) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem scale(const FieldElem& a, Residue c) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }
  FieldElem pow(const FieldElem& a, const BigInt& e) const;
  FieldElem pow(const FieldElem& a, std::uint64_t e) const;

  /// a^{p^j}.
  FieldElem frobenius(const FieldElem& a, std::uint64_t j = 1) const;
  /// Tr_{d/1}(a) computed from the precomputed traces of the basis.
  Residue trace(const FieldElem& a) const;
  /// Tr(x^u) for 0 <= u <= 2d-2; the Hankel table of the trace form.
  std::span<const Residue> power_traces() const { return power_traces_; }
  /// N_{d/1}(a) = product of the conjugates.
  Residue norm(const FieldElem& a) const;
  /// Quadratic character of F_{p^d}: 0, +1 or -1.
  int eta(const FieldElem& a) const;

  /// Column u holds (x^u)^p; the matrix of the Frobenius over F_p.
  const std::vector<std::vector<Residue>>& frobenius_matrix() const { return frob_cols_; }

  /// Integer encoding c0 + c1 p + ... + c_{d-1} p^{d-1}.
  BigInt encode(const FieldElem& a) const;
  FieldElem decode(const BigInt& v) const;

  /// Comma-separated residues, constant term first.
  std::string format(const FieldElem& a) const;
  FieldElem parse(std::string_view text) const;

 private:
  FieldCtx(Residue p, unsigned d, std::vector<Residue> modulus);

  void reduce_product(std::vector<std::uint64_t>& acc, FieldElem& out) const;

  Residue p_;
  unsigned d_;
  std::vector<Residue> modulus_;
  std::vector<unsigned> modulus_support_;  // indices j < d with g_j != 0
  BigInt order_;
  std::vector<std::vector<Residue>> frob_cols_;
  std::vector<Residue> power_traces_;
};

/// Field with the default modulus, memoized per (p, d).
CtxPtr default_field(Residue p, unsigned d);

/// Smallest-encoding monic irreducible of degree d (d >= 2) over F_p.
std::vector<Residue> default_modulus(Residue p, unsigned d);

/// Dense polynomial over a field; coeffs[i] multiplies X^i. No trailing zeros.
struct Poly {
  std::vector<FieldElem> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const FieldElem& lead() const { return coeffs.back(); }
  bool operator==(const Poly&) const = default;
};

namespace poly {

void normalize(Poly& f);
Poly monomial(const FieldCtx& k, const FieldElem& c, std::size_t deg);
Poly add(const FieldCtx& k, const Poly& a, const Poly& b);
Poly sub(const FieldCtx& k, const Poly& a, const Poly& b);
Poly mul(const FieldCtx& k, const Poly& a, const Poly& b);
/// Quotient and remainder; iterates only over the nonzero terms of b, so
/// sparse divisors of huge degree stay cheap.
std::pair<Poly, Poly> divrem(const FieldCtx& k, const Poly& a, const Poly& b);
Poly rem(const FieldCtx& k, const Poly& a, const Poly& b);
Poly make_monic(const FieldCtx& k, const Poly& a);
/// Monic gcd.
Poly gcd(const FieldCtx& k, Poly a, Poly b);
FieldElem eval(const FieldCtx& k, const Poly& f, const FieldElem& x);
/// h^p for h over k: coefficients are Frobenius-twisted and spread to X^{ip}.
Poly pth_power(const FieldCtx& k, const Poly& h);
Poly powmod(const FieldCtx& k, const Poly& base, const BigInt& e, const Poly& m);
/// X^{p^m} mod f via m rounds of p-th powering and reduction.
Poly x_pow_p_pow_mod(const FieldCtx& k, const Poly& f, std::uint64_t m);
/// All roots of f in k (f must split into distinct linear factors over k).
std::vector<FieldElem> split_roots(const FieldCtx& k, const Poly& f, std::uint64_t seed = 0x5eed);

}  // namespace poly

/// deg gcd(f, X^{p^m} - X) over k, without materializing X^{p^m} - X.
std::size_t poly_gcd_deg(const FieldCtx& k, const Poly& f, std::uint64_t m);

/// Field embedding src -> dst (deg src | deg dst) sending the generator of src
/// to a chosen root of src's modulus in dst.
class Embedding {
 public:
  /// Deterministic choice: the root with the smallest encoding.
  Embedding(CtxPtr src, CtxPtr dst);
  /// Explicit root choice; `root` must be a root of src's modulus in dst.
  Embedding(CtxPtr src, CtxPtr dst, FieldElem root);

  FieldElem operator()(const FieldElem& a) const;
  const FieldElem& root() const { return root_; }
  const CtxPtr& source() const { return src_; }
  const CtxPtr& target() const { return dst_; }

 private:
  void init_powers();

  CtxPtr src_;
  CtxPtr dst_;
  FieldElem root_;
  std::vector<FieldElem> root_powers_;
};

/// Roots of src's modulus in dst, sorted by increasing encoding.
std::vector<FieldElem> embedding_roots(const FieldCtx& src, const FieldCtx& dst);

FieldElem embed_element(const CtxPtr& src, const CtxPtr& dst, const FieldElem& x);

}  // namespace expsum
