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
#include "expsum/nullity.hpp"

#include <numeric>

#include "expsum/linalg.hpp"

namespace expsum {
namespace skew {

void normalize(SkewPoly& a) {
  while (!a.coeffs.empty() && a.coeffs.back().is_zero()) a.coeffs.pop_back();
}

SkewPoly mul(const FieldCtx& k, const SkewPoly& a, const SkewPoly& b) {
  SkewPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] = k.add(r.coeffs[i + j], k.mul(a.coeffs[i], k.frobenius(b.coeffs[j], i)));
  }
  normalize(r);
  return r;
}

SkewPoly rrem(const FieldCtx& k, SkewPoly a, const SkewPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "skew remainder by zero");
  normalize(a);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (a.coeffs[i].is_zero()) continue;
    const unsigned shift = i - db;
    FieldElem c = k.div(a.coeffs[i], k.frobenius(b.coeffs[db], shift));
    for (int j = 0; j <= db; ++j) {
      if (b.coeffs[j].is_zero()) continue;
      auto& t = a.coeffs[shift + j];
      t = k.sub(t, k.mul(c, k.frobenius(b.coeffs[j], shift)));
    }
  }
  normalize(a);
  return a;
}

SkewPoly rgcd(const FieldCtx& k, SkewPoly a, SkewPoly b) {
  normalize(a);
  normalize(b);
  while (!b.is_zero()) {
    a = rrem(k, std::move(a), b);
    std::swap(a, b);
  }
  return a;
}

FrobeniusWalk::FrobeniusWalk(const FieldCtx& k, SkewPoly modulus) : k_(&k), mod_(std::move(modulus)) {
  normalize(mod_);
  if (mod_.degree() < 1) throw Error(ErrorKind::InvalidInput, "walk modulus must have positive degree");
  lead_inv_ = k.inv(mod_.coeffs.back());
  h_.coeffs = {k.one()};
}

void FrobeniusWalk::step() {
  const FieldCtx& k = *k_;
  const int D = mod_.degree();
  SkewPoly next;
  next.coeffs.assign(h_.coeffs.size() + 1, k.zero());
  for (std::size_t j = 0; j < h_.coeffs.size(); ++j) next.coeffs[j + 1] = k.frobenius(h_.coeffs[j], 1);
  if (next.degree() == D) {
    FieldElem c = k.mul(next.coeffs[D], lead_inv_);
    for (int j = 0; j < D; ++j)
      if (!mod_.coeffs[j].is_zero()) next.coeffs[j] = k.sub(next.coeffs[j], k.mul(c, mod_.coeffs[j]));
    next.coeffs.pop_back();
  }
  normalize(next);
  h_ = std::move(next);
  ++m_;
}

int FrobeniusWalk::gcd_qdegree() const {
  SkewPoly b = h_;
  if (b.coeffs.empty()) b.coeffs.push_back(k_->zero());
  b.coeffs[0] = k_->sub(b.coeffs[0], k_->one());
  normalize(b);
  return rgcd(*k_, mod_, b).degree();
}

}  // namespace skew

SkewPoly to_skew(const LinearizedPoly& L) {
  SkewPoly s{L.coeffs};
  skew::normalize(s);
  return s;
}

namespace {

void check_multiple(const QuadFunc& f, std::uint64_t m) {
  if (m == 0 || m % f.n() != 0)
    throw Error(ErrorKind::NotMultipleOfBase,
                std::to_string(m) + " is not a positive multiple of the base degree " + std::to_string(f.n()));
}

}  // namespace

unsigned nullity_at(const QuadFunc& f, std::uint64_t m) {
  check_multiple(f, m);
  if (f.alpha() == 0) return 0;
  skew::FrobeniusWalk walk(*f.ctx(), to_skew(build_fstar(f)));
  for (std::uint64_t i = 0; i < m; ++i) walk.step();
  return static_cast<unsigned>(walk.gcd_qdegree());
}

unsigned nullity_dense(const QuadFunc& f, std::uint64_t m) {
  check_multiple(f, m);
  Poly F = build_fstar(f).to_poly();
  std::size_t deg = poly_gcd_deg(*f.ctx(), F, m);
  unsigned l = 0;
  while (deg > 1 && deg % f.p() == 0) {
    deg /= f.p();
    ++l;
  }
  if (deg != 1) throw Error(ErrorKind::NonPPowerDegree, "gcd degree is not a power of p");
  return l;
}

unsigned nullity_matrix(const QuadFunc& f, const CtxPtr& work) {
  check_multiple(f, work->degree());
  Embedding e(f.ctx(), work);
  std::vector<FieldElem> c;
  for (const auto& x : build_fstar(f).coeffs) c.push_back(e(x));
  ZpMatrix M = linalg::matrix_of(*work, [&](const FieldElem& z) { return LinearizedPoly::apply(*work, c, z); });
  return static_cast<unsigned>(work->degree() - linalg::rank(M, work->p()));
}

std::vector<std::uint64_t> divisors(std::uint64_t x) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= x; ++d) {
    if (x % d) continue;
    lo.push_back(d);
    if (d * d != x) hi.push_back(x / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

unsigned NullityProfile::query(std::uint64_t m) const {
  if (m == 0 || m % n != 0)
    throw Error(ErrorKind::NotMultipleOfBase,
                std::to_string(m) + " is not a positive multiple of the base degree " + std::to_string(n));
  auto it = entries.find(std::gcd(m, s));
  if (it == entries.end()) throw Error(ErrorKind::InternalInconsistency, "profile lacks a divisor of s");
  return it->second;
}

namespace {

// l at every multiple of n up to s, keyed by m.
NullityProfile search(const QuadFunc& f, NullitySearchLimits limits) {
  NullityProfile prof;
  prof.p = f.p();
  prof.n = f.n();
  prof.alpha = f.alpha();
  const std::uint64_t n = f.n();
  if (f.alpha() == 0) {
    prof.s = n;
    prof.entries[n] = 0;
    return prof;
  }
  const unsigned target = static_cast<unsigned>(2 * f.alpha());
  skew::FrobeniusWalk walk(*f.ctx(), to_skew(build_fstar(f)));
  std::map<std::uint64_t, unsigned> seen;
  for (std::uint64_t i = 1; i <= limits.ceiling_factor; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) walk.step();
    unsigned l = static_cast<unsigned>(walk.gcd_qdegree());
    if (l > target) throw Error(ErrorKind::InternalInconsistency, "nullity exceeds 2*alpha");
    seen[i * n] = l;
    if (l == target) {
      prof.s = i * n;
      for (std::uint64_t m : divisors(prof.s)) {
        if (m % n) continue;
        unsigned lm = seen.at(m);
        if (lm == target && m != prof.s)
          throw Error(ErrorKind::InternalInconsistency, "a proper divisor of s already splits f*");
        prof.entries[m] = lm;
      }
      return prof;
    }
  }
  throw Error(ErrorKind::SearchBudgetExceeded,
              "no splitting exponent up to " + std::to_string(limits.ceiling_factor * n));
}

}  // namespace

std::uint64_t splitting_exponent(const QuadFunc& f, NullitySearchLimits limits) { return search(f, limits).s; }

NullityProfile nullity_profile(const QuadFunc& f, NullitySearchLimits limits) { return search(f, limits); }

}  // namespace expsum
