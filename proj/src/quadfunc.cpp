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
#include "expsum/quadfunc.hpp"

#include <sstream>

namespace expsum {

QuadFunc QuadFunc::make(CtxPtr base, std::vector<Term> terms) {
  if (!base) throw Error(ErrorKind::InvalidInput, "quadratic function needs a field");
  if (terms.empty()) throw Error(ErrorKind::InvalidInput, "quadratic function needs at least one term");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!base->contains(terms[i].a)) throw Error(ErrorKind::InvalidInput, "coefficient not in the base field");
    if (i && terms[i].alpha <= terms[i - 1].alpha)
      throw Error(ErrorKind::InvalidInput, "exponents must be strictly increasing");
  }
  if (terms.back().a.is_zero()) throw Error(ErrorKind::ZeroCoefficient, "leading coefficient is zero");
  QuadFunc f;
  f.base_ = std::move(base);
  for (auto& t : terms)
    if (!t.a.is_zero()) f.terms_.push_back(std::move(t));
  return f;
}

QuadFunc QuadFunc::from_dense(CtxPtr base, const std::vector<FieldElem>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) terms.push_back({coeffs[i], i});
  return make(std::move(base), std::move(terms));
}

QuadFunc QuadFunc::from_residues(CtxPtr base, const std::vector<Residue>& coeffs) {
  std::vector<FieldElem> c;
  for (Residue r : coeffs) {
    if (r >= base->p()) throw Error(ErrorKind::InvalidInput, "coefficient not below p");
    c.push_back(base->constant(r));
  }
  return from_dense(std::move(base), c);
}

QuadFunc QuadFunc::scaled(const FieldElem& c) const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.a = base_->mul(term.a, c);
  return make(base_, std::move(t));
}

QuadFunc QuadFunc::embedded(const Embedding& e) const {
  std::vector<Term> t;
  for (const auto& term : terms_) t.push_back({e(term.a), term.alpha});
  return make(e.target(), std::move(t));
}

FieldElem QuadFunc::linear_part(const FieldCtx& k, const std::vector<Term>& terms, const FieldElem& x) {
  FieldElem y = k.zero();
  for (const auto& t : terms) y = k.add(y, k.mul(t.a, k.frobenius(x, t.alpha)));
  return y;
}

FieldElem QuadFunc::eval_in(const FieldCtx& k, const std::vector<Term>& terms, const FieldElem& x) {
  return k.mul(linear_part(k, terms, x), x);
}

std::string QuadFunc::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << "(" << base_->format(terms_[i].a) << ")*x^(p^" << terms_[i].alpha << "+1)";
  }
  os << " over F_" << p() << "^" << n();
  return os.str();
}

FieldElem LinearizedPoly::apply(const FieldCtx& k, const std::vector<FieldElem>& coeffs, const FieldElem& z) {
  FieldElem r = k.zero();
  FieldElem zj = z;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (j) zj = k.frobenius(zj, 1);
    if (!coeffs[j].is_zero()) r = k.add(r, k.mul(coeffs[j], zj));
  }
  return r;
}

Poly LinearizedPoly::to_poly() const {
  const std::size_t p = ctx->p();
  std::size_t deg = 1;
  for (std::size_t j = 0; j + 1 < coeffs.size(); ++j) {
    if (deg > (std::size_t{1} << 26) / p) throw Error(ErrorKind::TooLarge, "dense p-polynomial too large");
    deg *= p;
  }
  Poly f;
  f.coeffs.assign(deg + 1, ctx->zero());
  std::size_t e = 1;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    f.coeffs[e] = coeffs[j];
    e *= p;
  }
  poly::normalize(f);
  return f;
}

LinearizedPoly build_fstar(const QuadFunc& f) {
  const FieldCtx& k = *f.ctx();
  const std::uint64_t alpha = f.alpha();
  LinearizedPoly L;
  L.ctx = f.ctx();
  L.coeffs.assign(2 * alpha + 1, k.zero());
  for (const auto& t : f.terms()) {
    auto& hi = L.coeffs[alpha + t.alpha];
    hi = k.add(hi, k.frobenius(t.a, alpha));
    auto& lo = L.coeffs[alpha - t.alpha];
    lo = k.add(lo, k.frobenius(t.a, alpha - t.alpha));
  }
  return L;
}

}  // namespace expsum
