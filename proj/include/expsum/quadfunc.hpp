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

// f(x) = sum a_i x^{p^{alpha_i}+1} over F_{p^n} and its associated
// p-polynomial f*(z) = sum_j c_j z^{p^j}, j = 0..2*alpha.

#include <cstdint>
#include <string>
#include <vector>

#include "expsum/fieldcore.hpp"

namespace expsum {

struct Term {
  FieldElem a;
  std::uint64_t alpha = 0;
};

class QuadFunc {
 public:
  QuadFunc() = default;

  /// Terms must have strictly increasing alpha and the last coefficient
  /// nonzero. Interior zero coefficients are dropped.
  static QuadFunc make(CtxPtr base, std::vector<Term> terms);
  /// coeffs[i] multiplies x^{p^i+1}.
  static QuadFunc from_dense(CtxPtr base, const std::vector<FieldElem>& coeffs);
  /// Prime-field shorthand for from_dense.
  static QuadFunc from_residues(CtxPtr base, const std::vector<Residue>& coeffs);

  const CtxPtr& ctx() const { return base_; }
  Residue p() const { return base_->p(); }
  unsigned n() const { return base_->degree(); }
  const std::vector<Term>& terms() const { return terms_; }
  /// The largest exponent alpha_k.
  std::uint64_t alpha() const { return terms_.back().alpha; }
  bool is_monomial() const { return terms_.size() == 1; }

  QuadFunc scaled(const FieldElem& c) const;
  /// Same exponents, coefficients carried into a larger field.
  QuadFunc embedded(const Embedding& e) const;

  /// f(x) evaluated literally in the field of x; coefficients given in that field.
  static FieldElem eval_in(const FieldCtx& k, const std::vector<Term>& terms, const FieldElem& x);
  /// Linear part L(x) = sum a_i x^{p^alpha_i}, so that f(x) = L(x) * x.
  static FieldElem linear_part(const FieldCtx& k, const std::vector<Term>& terms, const FieldElem& x);

  std::string describe() const;

 private:
  CtxPtr base_;
  std::vector<Term> terms_;
};

/// f* as the coefficient list c_0..c_{2 alpha} over the base field of f.
struct LinearizedPoly {
  CtxPtr ctx;
  std::vector<FieldElem> coeffs;

  std::size_t qdegree() const { return coeffs.size() - 1; }
  /// f*(z) for z in k, where the coefficients have been carried into k.
  static FieldElem apply(const FieldCtx& k, const std::vector<FieldElem>& coeffs, const FieldElem& z);
  /// Dense ordinary polynomial of degree p^{2 alpha}; only for small alpha.
  Poly to_poly() const;
};

LinearizedPoly build_fstar(const QuadFunc& f);

}  // namespace expsum
