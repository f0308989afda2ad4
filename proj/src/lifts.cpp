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
#include "expsum/lifts.hpp"

#include <algorithm>
#include <numeric>

#include "expsum/linalg.hpp"
#include "expsum/quadform.hpp"

namespace expsum {

namespace {

BigInt big_pow(std::uint64_t base, std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Exponents up to this bound are checked against a direct gcd.
constexpr std::uint64_t kDirectGcdBound = 64;

}  // namespace

std::optional<unsigned> vp_or_inf(std::uint64_t x, std::uint64_t q) {
  if (x == 0) return std::nullopt;
  unsigned v = 0;
  while (x % q == 0) {
    x /= q;
    ++v;
  }
  return v;
}

unsigned vp(std::uint64_t x, std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::InvalidInput, "valuation base must be at least 2");
  auto v = vp_or_inf(x, q);
  if (!v) throw Error(ErrorKind::ZeroValuation, "valuation of zero is infinite");
  return *v;
}

std::uint64_t oq(std::uint64_t q, std::uint64_t p) {
  if (q < 2 || std::gcd(p, q) != 1) throw Error(ErrorKind::InvalidInput, "order needs gcd(p, q) = 1");
  std::uint64_t r = p % q, o = 1;
  while (r != 1 % q) {
    r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * p) % q);
    ++o;
  }
  return o;
}

BigInt gcd_plus_plus(Residue p, const std::vector<std::uint64_t>& exps) {
  if (exps.empty()) throw Error(ErrorKind::InvalidInput, "gcd of an empty family");
  std::optional<unsigned> nu = vp_or_inf(exps[0], 2);
  bool equal = true;
  std::uint64_t g = 0;
  for (auto a : exps) {
    equal = equal && vp_or_inf(a, 2) == nu;
    g = std::gcd(g, a);
  }
  BigInt r = (equal && nu) ? big_pow(p, g) + 1 : BigInt(2);
  if (*std::max_element(exps.begin(), exps.end()) <= kDirectGcdBound) {
    BigInt direct = 0;
    for (auto a : exps) direct = big_gcd(direct, big_pow(p, a) + 1);
    if (direct != r) throw Error(ErrorKind::InternalInconsistency, "closed-form gcd disagrees with direct gcd");
  }
  return r;
}

BigInt gcd_plus_minus(Residue p, std::uint64_t a, std::uint64_t b) {
  auto na = vp_or_inf(a, 2), nb = vp_or_inf(b, 2);
  // An absent valuation stands for +infinity.
  bool greater = nb ? (na && *nb > *na) : static_cast<bool>(na);
  BigInt r = greater ? big_pow(p, std::gcd(a, b)) + 1 : BigInt(2);
  if (std::max(a, b) <= kDirectGcdBound) {
    BigInt direct = big_gcd(big_pow(p, a) + 1, big_pow(p, b) - 1);
    if (direct != r) throw Error(ErrorKind::InternalInconsistency, "closed-form gcd disagrees with direct gcd");
  }
  return r;
}

TypeState lift_odd_prime(const TypeState& st, std::uint64_t q, unsigned s, unsigned l_target) {
  if (!zp::is_prime(q) || q == 2 || q == st.p)
    throw Error(ErrorKind::InvalidInput, "odd lift needs an odd prime different from p");
  if (s == 0) {
    if (l_target != st.l) throw Error(ErrorKind::ParityViolation, "nullity changed under a trivial lift");
    return st;
  }
  if (l_target < st.l) throw Error(ErrorKind::ParityViolation, "nullity decreased under an extension");
  const unsigned dl = l_target - st.l;
  if (dl % 2) throw Error(ErrorKind::ParityViolation, "nullity jump " + std::to_string(dl) + " is odd");
  const std::uint64_t o = oq(q, st.p);
  if (dl % o)
    throw Error(ErrorKind::ParityViolation,
                "nullity jump " + std::to_string(dl) + " not divisible by ord_q(p) = " + std::to_string(o));
  int t = st.t;
  if ((static_cast<std::uint64_t>(s) * st.l) % 2 == 1) t *= legendre(static_cast<long long>(q), st.p);
  std::uint64_t e = ((st.p - 1) / 2) * (dl / 2) + dl / o;
  if (e % 2) t = -t;
  TypeState out = st;
  for (unsigned i = 0; i < s; ++i) out.N *= q;
  out.l = l_target;
  out.t = t;
  return out;
}

QuadFunc make_tilde(const QuadFunc& f, const CtxPtr& work, std::optional<FieldElem> beta) {
  Embedding e(f.ctx(), work);
  FieldElem b = beta ? *beta : smallest_nonsquare(*work);
  if (work->eta(b) != -1) throw Error(ErrorKind::InvalidInput, "twist parameter must be a nonsquare");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    BigInt ex = (big_pow(f.p(), t.alpha) + 1) / 2;
    terms.push_back({work->mul(e(t.a), work->pow(b, ex)), t.alpha});
  }
  return QuadFunc::make(work, std::move(terms));
}

TypeState lift_two(const TypeState& st, const TypeState& tilde, unsigned s, unsigned l_target) {
  if (s == 0) throw Error(ErrorKind::InvalidInput, "2-lift needs a positive height");
  if (st.N != tilde.N || st.p != tilde.p) throw Error(ErrorKind::InvalidInput, "2-lift states at different bases");
  if ((st.l + tilde.l + l_target) % 2)
    throw Error(ErrorKind::InternalInconsistency, "parity of l + l~ + l at 2^s N is odd");
  int t = st.t * tilde.t;
  if ((st.l + tilde.l) % 2) {
    std::uint64_t e = ((static_cast<std::uint64_t>(st.p) * st.p - 1) / 8) * s;
    if (e % 2) t = -t;
  }
  TypeState out = st;
  out.N = st.N << s;
  out.l = l_target;
  out.t = t;
  return out;
}

std::optional<std::uint64_t> lift_p_max_steps(const QuadFunc& f, std::uint64_t N) {
  std::optional<unsigned> lo;
  for (const auto& t : f.terms()) {
    auto v = vp_or_inf(t.alpha, f.p());
    if (v && (!lo || *v < *lo)) lo = v;
  }
  if (!lo) return std::nullopt;
  unsigned vn = vp(N, f.p());
  return *lo >= vn ? *lo - vn : 0;
}

TypeState lift_p(const TypeState& st, const QuadFunc& f, unsigned s) {
  if (s == 0) return st;
  if (st.N % f.n()) throw Error(ErrorKind::NotMultipleOfBase, "state degree is not a multiple of n");
  auto lim = lift_p_max_steps(f, st.N);
  if (lim && s > *lim)
    throw Error(ErrorKind::ConditionViolated, "p-lift of " + std::to_string(s) + " steps exceeds the valuation bound " +
                                                  std::to_string(*lim));
  TypeState out = st;
  for (unsigned i = 0; i < s; ++i) {
    out.N *= st.p;
    out.l *= st.p;
  }
  return out;
}

CyclotomicInt lift_p_value(const CyclotomicInt& S, std::uint64_t N, unsigned l) {
  const Residue p = S.p();
  CyclotomicInt c = S.conj();
  return S * c * c * big_pow(p, (p - 3) / 2 * (N + l));
}

bool balanced_applies(const QuadFunc& f, std::uint64_t N, unsigned* nu) {
  std::optional<unsigned> v0;
  for (const auto& t : f.terms()) {
    auto v = vp_or_inf(t.alpha, 2);
    if (!v) return false;
    if (v0 && *v0 != *v) return false;
    v0 = v;
  }
  auto vn = vp_or_inf(N, 2);
  if (!vn || *vn <= *v0) return false;
  if (nu) *nu = *v0;
  return true;
}

int type_balanced(const QuadFunc& f, std::uint64_t N, unsigned l_N) {
  unsigned nu = 0;
  if (!balanced_applies(f, N, &nu))
    throw Error(ErrorKind::NotApplicable, "exponents do not share a 2-adic valuation below that of N");
  const std::uint64_t step = std::uint64_t{1} << (nu + 1);
  if (l_N % step) throw Error(ErrorKind::DivisibilityViolated, "nullity not divisible by 2^(nu+1)");
  if (l_N > N) throw Error(ErrorKind::InvalidInput, "nullity exceeds N");
  // ((p-1)^2/4 * 2^nu + 1) is odd exactly when nu > 0 or (p-1)/2 is even.
  const bool first_odd = nu > 0 || ((f.p() - 1) / 2) % 2 == 0;
  const bool second_odd = ((N - l_N) / step) % 2 == 1;
  return first_odd && second_odd ? -1 : 1;
}

MonomialResult monomial_eval(const FieldCtx& k, const FieldElem& a, std::uint64_t alpha) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroCoefficient, "monomial coefficient is zero");
  const Residue p = k.p();
  const std::uint64_t N = k.degree();
  MonomialResult r;
  r.state.p = p;
  r.state.N = N;
  const auto va = vp_or_inf(alpha, 2);
  const unsigned vn = vp(N, 2);
  if (!va || vn <= *va) {
    r.case_id = 1;
    r.state.l = 0;
    r.state.t = k.eta(a) * (N % 2 == 1 ? 1 : -1);
    return r;
  }
  const std::uint64_t d = std::gcd(2 * alpha, N);
  const BigInt E = (big_pow(p, alpha) - 1) * (big_pow(p, N) - 1) / (big_pow(p, d) - 1);
  const FieldElem w = k.pow(a, E);
  int eps;
  if (vn == *va + 1) {
    r.case_id = 2;
    bool hit = w == k.from_int(-1);
    eps = hit ? 1 : -1;
    r.state.l = hit ? static_cast<unsigned>(d) : 0;
  } else {
    r.case_id = 3;
    bool hit = w == k.one();
    eps = hit ? -1 : 1;
    r.state.l = hit ? static_cast<unsigned>(d) : 0;
  }
  const std::uint64_t half = (N - r.state.l) / 2;
  r.state.t = eps * ((half % 2 == 1) ? gauss_sign(p) : 1);
  r.integer_value = big_pow(p, (N + r.state.l) / 2) * eps;
  return r;
}

ShiftedSum shift_linear(const QuadFunc& f, const FieldElem& b, std::uint64_t N, const TypeState& value) {
  if (N % f.n()) throw Error(ErrorKind::NotMultipleOfBase, "N is not a multiple of the base degree");
  if (value.N != N || value.p != f.p()) throw Error(ErrorKind::InvalidInput, "base value at a different degree");
  CtxPtr K = default_field(f.p(), static_cast<unsigned>(N));
  if (!K->contains(b)) throw Error(ErrorKind::InvalidInput, "linear coefficient not in F_{p^N}");
  Embedding e(f.ctx(), K);
  std::vector<FieldElem> c;
  for (const auto& x : build_fstar(f).coeffs) c.push_back(e(x));
  ZpMatrix M = linalg::matrix_of(*K, [&](const FieldElem& z) { return LinearizedPoly::apply(*K, c, z); });
  FieldElem rhs = K->frobenius(b, f.alpha());
  ShiftedSum out;
  out.base = value;
  auto sol = linalg::solve(M, rhs.coeffs, f.p());
  if (!sol) {
    out.zero = true;
    return out;
  }
  FieldElem x0{*sol};
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back({e(t.a), t.alpha});
  out.phase = K->trace(QuadFunc::eval_in(*K, terms, x0));
  out.x0 = x0;
  return out;
}

CyclotomicInt shifted_value(const ShiftedSum& s) {
  const Residue p = s.base.p;
  if (s.zero) return CyclotomicInt(p);
  return CyclotomicInt::zeta_power(p, -static_cast<std::int64_t>(s.phase)) *
         expsum_to_cyclotomic(p, s.base.N, s.base.l, s.base.t);
}

}  // namespace expsum
