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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "expsum/fieldcore.hpp"

namespace expsum {

/// Element of Z[z], z a primitive p-th root of unity, in the power basis
/// 1, z, ..., z^{p-2}. Every value has exactly one representation.
class CyclotomicInt {
 public:
  CyclotomicInt() = default;
  /// The zero element.
  explicit CyclotomicInt(Residue p);
  CyclotomicInt(Residue p, std::vector<BigInt> coords);

  static CyclotomicInt integer(Residue p, const BigInt& v);
  /// z^j.
  static CyclotomicInt zeta_power(Residue p, std::int64_t j);
  /// sum counts[i] z^i for i < p.
  static CyclotomicInt from_trace_counts(Residue p, const std::vector<BigInt>& counts);
  static CyclotomicInt from_trace_counts(Residue p, const std::vector<std::uint64_t>& counts);

  Residue p() const { return p_; }
  const std::vector<BigInt>& coords() const { return coords_; }
  bool is_zero() const;

  CyclotomicInt operator+(const CyclotomicInt& b) const;
  CyclotomicInt operator-(const CyclotomicInt& b) const;
  CyclotomicInt operator-() const;
  CyclotomicInt operator*(const CyclotomicInt& b) const;
  CyclotomicInt operator*(const BigInt& c) const;
  bool operator==(const CyclotomicInt& b) const;
  bool operator!=(const CyclotomicInt& b) const { return !(*this == b); }

  /// Image under z -> z^{-1}.
  CyclotomicInt conj() const;
  CyclotomicInt pow(std::uint64_t e) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  void check_same(const CyclotomicInt& b) const;
  /// Reduce a length-p vector (coefficients of 1..z^{p-1}) to the basis.
  static std::vector<BigInt> reduce(Residue p, std::vector<BigInt> full);

  Residue p_ = 0;
  std::vector<BigInt> coords_;
};

/// sum over x in F_p of z^{x^2}.
CyclotomicInt gauss_cyclotomic(Residue p);

/// (-1)^{(p-1)/2}, so that g_p^2 = gauss_sign(p) * p.
int gauss_sign(Residue p);

/// t * g_p^{N-l} * p^l computed exactly.
CyclotomicInt expsum_to_cyclotomic(Residue p, std::uint64_t N, std::uint64_t l, int t);

}  // namespace expsum
