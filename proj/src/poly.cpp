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
#include <algorithm>
#include <random>

#include "expsum/fieldcore.hpp"

namespace expsum {
namespace poly {

void normalize(Poly& f) {
  while (!f.coeffs.empty() && f.coeffs.back().is_zero()) f.coeffs.pop_back();
}

Poly monomial(const FieldCtx& k, const FieldElem& c, std::size_t deg) {
  Poly r;
  if (c.is_zero()) return r;
  r.coeffs.assign(deg + 1, k.zero());
  r.coeffs[deg] = c;
  return r;
}

Poly add(const FieldCtx& k, const Poly& a, const Poly& b) {
  Poly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), k.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = k.add(r.coeffs[i], b.coeffs[i]);
  normalize(r);
  return r;
}

Poly sub(const FieldCtx& k, const Poly& a, const Poly& b) {
  Poly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), k.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = k.sub(r.coeffs[i], b.coeffs[i]);
  normalize(r);
  return r;
}

Poly mul(const FieldCtx& k, const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (b.coeffs[j].is_zero()) continue;
      r.coeffs[i + j] = k.add(r.coeffs[i + j], k.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  normalize(r);
  return r;
}

std::pair<Poly, Poly> divrem(const FieldCtx& k, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  Poly q, r = a;
  normalize(r);
  int db = b.degree();
  if (r.degree() < db) return {q, r};
  std::vector<std::size_t> support;
  for (int j = 0; j < db; ++j)
    if (!b.coeffs[j].is_zero()) support.push_back(j);
  FieldElem li = k.inv(b.lead());
  q.coeffs.assign(r.degree() - db + 1, k.zero());
  for (int i = r.degree(); i >= db; --i) {
    if (r.coeffs[i].is_zero()) continue;
    FieldElem c = k.mul(r.coeffs[i], li);
    q.coeffs[i - db] = c;
    r.coeffs[i] = k.zero();
    for (std::size_t j : support) {
      auto& t = r.coeffs[i - db + j];
      t = k.sub(t, k.mul(c, b.coeffs[j]));
    }
  }
  r.coeffs.resize(std::min<std::size_t>(r.coeffs.size(), db));
  normalize(r);
  normalize(q);
  return {q, r};
}

Poly rem(const FieldCtx& k, const Poly& a, const Poly& b) { return divrem(k, a, b).second; }

Poly make_monic(const FieldCtx& k, const Poly& a) {
  if (a.is_zero()) return a;
  FieldElem li = k.inv(a.lead());
  Poly r = a;
  for (auto& c : r.coeffs) c = k.mul(c, li);
  return r;
}

Poly gcd(const FieldCtx& k, Poly a, Poly b) {
  normalize(a);
  normalize(b);
  while (!b.is_zero()) {
    a = rem(k, a, b);
    std::swap(a, b);
  }
  return make_monic(k, a);
}

FieldElem eval(const FieldCtx& k, const Poly& f, const FieldElem& x) {
  FieldElem r = k.zero();
  for (std::size_t i = f.coeffs.size(); i-- > 0;) r = k.add(k.mul(r, x), f.coeffs[i]);
  return r;
}

Poly pth_power(const FieldCtx& k, const Poly& h) {
  Poly r;
  if (h.is_zero()) return r;
  const std::size_t p = k.p();
  r.coeffs.assign(h.degree() * p + 1, k.zero());
  for (std::size_t i = 0; i < h.coeffs.size(); ++i)
    if (!h.coeffs[i].is_zero()) r.coeffs[i * p] = k.frobenius(h.coeffs[i], 1);
  return r;
}

Poly powmod(const FieldCtx& k, const Poly& base, const BigInt& e, const Poly& m) {
  Poly r = rem(k, monomial(k, k.one(), 0), m);
  Poly b = rem(k, base, m);
  std::size_t bits = sgn(e) > 0 ? mpz_sizeinbase(e.get_mpz_t(), 2) : 0;
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(k, mul(k, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(k, mul(k, r, b), m);
  }
  return r;
}

Poly x_pow_p_pow_mod(const FieldCtx& k, const Poly& f, std::uint64_t m) {
  Poly h = rem(k, monomial(k, k.one(), 1), f);
  for (std::uint64_t i = 0; i < m; ++i) h = rem(k, pth_power(k, h), f);
  return h;
}

namespace {

void split_into(const FieldCtx& k, const Poly& f, std::mt19937_64& rng, std::vector<FieldElem>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(k.neg(k.div(f.coeffs[0], f.coeffs[1])));
    return;
  }
  const BigInt e = (k.order() - 1) / 2;
  for (int attempt = 0; attempt < 512; ++attempt) {
    FieldElem r = k.zero();
    for (auto& c : r.coeffs) c = static_cast<Residue>(rng() % k.p());
    Poly lin{{r, k.one()}};
    Poly w = powmod(k, lin, e, f);
    w = sub(k, w, monomial(k, k.one(), 0));
    Poly g = gcd(k, f, w);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_into(k, g, rng, out);
      split_into(k, divrem(k, f, g).first, rng, out);
      return;
    }
  }
  throw Error(ErrorKind::NoRootFound, "equal-degree splitting did not converge");
}

}  // namespace

std::vector<FieldElem> split_roots(const FieldCtx& k, const Poly& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FieldElem> out;
  split_into(k, make_monic(k, f), rng, out);
  return out;
}

}  // namespace poly

std::size_t poly_gcd_deg(const FieldCtx& k, const Poly& f, std::uint64_t m) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "gcd degree of the zero polynomial");
  Poly h = poly::x_pow_p_pow_mod(k, f, m);
  Poly g = poly::gcd(k, f, poly::sub(k, h, poly::monomial(k, k.one(), 1)));
  return static_cast<std::size_t>(g.degree());
}

std::vector<FieldElem> embedding_roots(const FieldCtx& src, const FieldCtx& dst) {
  if (src.p() != dst.p()) throw Error(ErrorKind::MixedPrimes, "embedding between different characteristics");
  if (dst.degree() % src.degree() != 0)
    throw Error(ErrorKind::InvalidInput, "source degree does not divide target degree");
  if (src.degree() == 1) return {dst.zero()};
  std::vector<FieldElem> roots;
  if (src.degree() == dst.degree() && src.modulus() == dst.modulus()) {
    // Same model: the roots are the conjugates of the generator.
    FieldElem r = dst.basis(1);
    for (unsigned j = 0; j < dst.degree(); ++j, r = dst.frobenius(r, 1)) roots.push_back(r);
  } else {
    Poly g;
    for (Residue c : src.modulus()) g.coeffs.push_back(dst.constant(c));
    roots = poly::split_roots(dst, g);
  }
  if (roots.size() != src.degree()) throw Error(ErrorKind::NoRootFound, "modulus does not split in target");
  std::sort(roots.begin(), roots.end(), [&](const FieldElem& a, const FieldElem& b) {
    return dst.encode(a) < dst.encode(b);
  });
  return roots;
}

Embedding::Embedding(CtxPtr src, CtxPtr dst) : src_(std::move(src)), dst_(std::move(dst)) {
  root_ = embedding_roots(*src_, *dst_).front();
  init_powers();
}

Embedding::Embedding(CtxPtr src, CtxPtr dst, FieldElem root)
    : src_(std::move(src)), dst_(std::move(dst)), root_(std::move(root)) {
  if (src_->p() != dst_->p()) throw Error(ErrorKind::MixedPrimes, "embedding between different characteristics");
  if (dst_->degree() % src_->degree() != 0)
    throw Error(ErrorKind::InvalidInput, "source degree does not divide target degree");
  if (src_->degree() > 1) {
    Poly g;
    for (Residue c : src_->modulus()) g.coeffs.push_back(dst_->constant(c));
    if (!poly::eval(*dst_, g, root_).is_zero())
      throw Error(ErrorKind::InvalidInput, "chosen element is not a root of the source modulus");
  }
  init_powers();
}

void Embedding::init_powers() {
  root_powers_.clear();
  FieldElem c = dst_->one();
  for (unsigned u = 0; u < src_->degree(); ++u) {
    root_powers_.push_back(c);
    c = dst_->mul(c, root_);
  }
}

FieldElem Embedding::operator()(const FieldElem& a) const {
  FieldElem r = dst_->zero();
  for (unsigned u = 0; u < src_->degree(); ++u)
    if (a.coeffs[u] != 0) r = dst_->add(r, dst_->scale(root_powers_[u], a.coeffs[u]));
  return r;
}

FieldElem embed_element(const CtxPtr& src, const CtxPtr& dst, const FieldElem& x) {
  return Embedding(src, dst)(x);
}

}  // namespace expsum
