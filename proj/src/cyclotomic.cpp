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
#include "expsum/cyclotomic.hpp"

#include <cmath>
#include <numbers>

namespace expsum {

CyclotomicInt::CyclotomicInt(Residue p) : p_(p), coords_(p - 1, BigInt(0)) {
  if (p < 3) throw Error(ErrorKind::NotOdd, "cyclotomic ring needs an odd prime");
}

CyclotomicInt::CyclotomicInt(Residue p, std::vector<BigInt> coords) : p_(p), coords_(std::move(coords)) {
  if (p < 3) throw Error(ErrorKind::NotOdd, "cyclotomic ring needs an odd prime");
  if (coords_.size() != p - 1) throw Error(ErrorKind::InvalidInput, "cyclotomic coordinate vector must have length p-1");
}

std::vector<BigInt> CyclotomicInt::reduce(Residue p, std::vector<BigInt> full) {
  // z^{p-1} = -(1 + z + ... + z^{p-2}).
  BigInt top = full[p - 1];
  full.pop_back();
  if (top != 0)
    for (auto& c : full) c -= top;
  return full;
}

CyclotomicInt CyclotomicInt::integer(Residue p, const BigInt& v) {
  CyclotomicInt r(p);
  r.coords_[0] = v;
  return r;
}

CyclotomicInt CyclotomicInt::zeta_power(Residue p, std::int64_t j) {
  std::vector<BigInt> full(p, BigInt(0));
  full[zp::from_int(j, p)] = 1;
  return CyclotomicInt(p, reduce(p, std::move(full)));
}

CyclotomicInt CyclotomicInt::from_trace_counts(Residue p, const std::vector<BigInt>& counts) {
  if (counts.size() != p) throw Error(ErrorKind::InvalidInput, "trace counts must have length p");
  return CyclotomicInt(p, reduce(p, counts));
}

CyclotomicInt CyclotomicInt::from_trace_counts(Residue p, const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> c;
  c.reserve(counts.size());
  for (auto v : counts) c.emplace_back(static_cast<unsigned long>(v));
  return from_trace_counts(p, c);
}

bool CyclotomicInt::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

void CyclotomicInt::check_same(const CyclotomicInt& b) const {
  if (p_ != b.p_) throw Error(ErrorKind::MixedPrimes, "cyclotomic operands over different primes");
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& b) const {
  check_same(b);
  CyclotomicInt r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& b) const {
  check_same(b);
  CyclotomicInt r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
  return r;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& b) const {
  check_same(b);
  std::vector<BigInt> full(p_, BigInt(0));
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords_.size(); ++j) {
      if (b.coords_[j] == 0) continue;
      mpz_addmul(full[(i + j) % p_].get_mpz_t(), coords_[i].get_mpz_t(), b.coords_[j].get_mpz_t());
    }
  }
  return CyclotomicInt(p_, reduce(p_, std::move(full)));
}

CyclotomicInt CyclotomicInt::operator*(const BigInt& c) const {
  CyclotomicInt r = *this;
  for (auto& x : r.coords_) x *= c;
  return r;
}

bool CyclotomicInt::operator==(const CyclotomicInt& b) const {
  check_same(b);
  return coords_ == b.coords_;
}

CyclotomicInt CyclotomicInt::conj() const {
  std::vector<BigInt> full(p_, BigInt(0));
  for (std::size_t j = 0; j < coords_.size(); ++j) full[(p_ - j) % p_] = coords_[j];
  return CyclotomicInt(p_, reduce(p_, std::move(full)));
}

CyclotomicInt CyclotomicInt::pow(std::uint64_t e) const {
  CyclotomicInt r = integer(p_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::complex<double> CyclotomicInt::to_complex() const {
  std::complex<double> r = 0;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / p_;
    r += coords_[j].get_d() * std::polar(1.0, ang);
  }
  return r;
}

std::string CyclotomicInt::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    const BigInt& c = coords_[j];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (j == 0) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += j == 1 ? "z" : "z^" + std::to_string(j);
    }
  }
  if (s.empty()) s = "0";
  return s + " (z = primitive p-th root, p = " + std::to_string(p_) + ")";
}

CyclotomicInt gauss_cyclotomic(Residue p) {
  std::vector<std::uint64_t> counts(p, 0);
  for (std::uint64_t x = 0; x < p; ++x) ++counts[x * x % p];
  return CyclotomicInt::from_trace_counts(p, counts);
}

int gauss_sign(Residue p) { return ((p - 1) / 2) % 2 == 0 ? 1 : -1; }

CyclotomicInt expsum_to_cyclotomic(Residue p, std::uint64_t N, std::uint64_t l, int t) {
  if (l > N) throw Error(ErrorKind::InvalidInput, "nullity exceeds dimension");
  if (t != 1 && t != -1) throw Error(ErrorKind::InvalidInput, "type must be +1 or -1");
  // g^r = (g^2)^{r/2} g^{r mod 2} with g^2 = (-1)^{(p-1)/2} p.
  const std::uint64_t r = N - l;
  BigInt mag;
  mpz_ui_pow_ui(mag.get_mpz_t(), p, r / 2 + l);
  if (t * ((r / 2) % 2 == 1 ? gauss_sign(p) : 1) < 0) mag = -mag;
  CyclotomicInt base = r % 2 ? gauss_cyclotomic(p) : CyclotomicInt::integer(p, 1);
  return base * mag;
}

}  // namespace expsum
