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
#include "expsum/fieldcore.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <utility>

namespace expsum {

namespace {

// Adds a product (< 2^62) to an accumulator kept below 2^63.
inline void accumulate(std::uint64_t& acc, std::uint64_t prod, Residue p) {
  acc += prod;
  if (acc >> 63) acc %= p;
}

}  // namespace

namespace zp {

Residue pow(Residue a, std::uint64_t e, Residue p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<Residue>(r);
}

Residue inv(Residue a, Residue p) {
  a %= p;
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero mod " + std::to_string(p));
  long long r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return from_int(s0, p);
}

Residue from_int(long long v, Residue p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % q == 0) return n == q;
  }
  for (std::uint64_t q = 17; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

}  // namespace zp

namespace zpx {

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

ZpPoly mul(const ZpPoly& a, const ZpPoly& b, Residue p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      accumulate(acc[i + j], std::uint64_t{a[i]} * b[j], p);
  }
  ZpPoly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<Residue>(acc[i] % p);
  trim(r);
  return r;
}

ZpPoly sub(const ZpPoly& a, const ZpPoly& b, Residue p) {
  ZpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Residue x = i < a.size() ? a[i] : 0;
    Residue y = i < b.size() ? b[i] : 0;
    r[i] = zp::sub(x, y, p);
  }
  trim(r);
  return r;
}

ZpPoly rem(ZpPoly a, const ZpPoly& m, Residue p) {
  trim(a);
  int dm = degree(m);
  if (dm < 0) throw Error(ErrorKind::DivisionByZero, "polynomial remainder by zero");
  Residue li = zp::inv(m.back(), p);
  for (int i = degree(a); i >= dm; --i) {
    Residue c = a[i];
    if (c == 0) continue;
    c = zp::mul(c, li, p);
    for (int j = 0; j <= dm; ++j)
      a[i - dm + j] = zp::sub(a[i - dm + j], zp::mul(c, m[j], p), p);
  }
  if (static_cast<int>(a.size()) > dm) a.resize(dm);
  trim(a);
  return a;
}

ZpPoly gcd(ZpPoly a, ZpPoly b, Residue p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = rem(std::move(a), b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    Residue li = zp::inv(a.back(), p);
    for (auto& c : a) c = zp::mul(c, li, p);
  }
  return a;
}

ZpPoly powmod(const ZpPoly& base, std::uint64_t e, const ZpPoly& m, Residue p) {
  ZpPoly r = rem({1}, m, p);
  ZpPoly b = rem(base, m, p);
  while (e) {
    if (e & 1) r = rem(mul(r, b, p), m, p);
    e >>= 1;
    if (e) b = rem(mul(b, b, p), m, p);
  }
  return r;
}

bool is_irreducible(const ZpPoly& g, Residue p) {
  int d = degree(g);
  if (d < 1) return false;
  if (d == 1) return true;
  if (g[0] == 0) return false;
  const ZpPoly x{0, 1};
  ZpPoly h = x;
  for (int i = 1; i <= d / 2; ++i) {
    h = powmod(h, p, g, p);
    if (degree(gcd(g, sub(h, x, p), p)) > 0) return false;
  }
  return true;
}

}  // namespace zpx

bool FieldElem::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Residue c) { return c == 0; });
}

std::vector<Residue> default_modulus(Residue p, unsigned d) {
  if (d < 2) throw Error(ErrorKind::InvalidInput, "default modulus needs degree >= 2");
  // Odometer over (c0, ..., c_{d-1}) in increasing encoding; c0 = 0 is never irreducible.
  std::vector<Residue> g(d + 1, 0);
  g[d] = 1;
  g[0] = 1;
  for (;;) {
    if (zpx::is_irreducible(g, p)) return g;
    unsigned i = 0;
    while (i < d) {
      if (++g[i] < p) break;
      g[i] = 0;
      ++i;
    }
    if (i == d) break;
    if (g[0] == 0) g[0] = 1;
  }
  throw Error(ErrorKind::InternalInconsistency, "no irreducible polynomial found");
}

CtxPtr FieldCtx::build(Residue p, unsigned d, std::optional<std::vector<Residue>> modulus) {
  if (p > kMaxPrime) throw Error(ErrorKind::InvalidInput, "characteristic exceeds 2^31 - 1");
  if (!zp::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorKind::NotOdd, "characteristic 2 is not supported");
  if (d == 0) throw Error(ErrorKind::InvalidInput, "extension degree must be >= 1");
  std::vector<Residue> g;
  if (d >= 2) {
    if (modulus) {
      g = *modulus;
      if (g.size() != d + 1 || g.back() != 1)
        throw Error(ErrorKind::InvalidInput, "modulus must be monic of degree " + std::to_string(d));
      for (Residue c : g)
        if (c >= p) throw Error(ErrorKind::InvalidInput, "modulus coefficient out of range");
      if (!zpx::is_irreducible(g, p))
        throw Error(ErrorKind::ModulusReducible, "modulus is reducible over F_" + std::to_string(p));
    } else {
      g = default_modulus(p, d);
    }
  }
  return CtxPtr(new FieldCtx(p, d, std::move(g)));
}

FieldCtx::FieldCtx(Residue p, unsigned d, std::vector<Residue> modulus)
    : p_(p), d_(d), modulus_(std::move(modulus)) {
  mpz_ui_pow_ui(order_.get_mpz_t(), p_, d_);
  for (unsigned j = 0; j < d_ && d_ >= 2; ++j)
    if (modulus_[j] != 0) modulus_support_.push_back(j);

  // Frobenius columns (x^p)^u.
  frob_cols_.assign(d_, std::vector<Residue>(d_, 0));
  if (d_ == 1) {
    frob_cols_[0][0] = 1;
  } else {
    zpx::ZpPoly xp = zpx::powmod({0, 1}, p_, modulus_, p_);
    zpx::ZpPoly cur{1};
    for (unsigned u = 0; u < d_; ++u) {
      for (std::size_t i = 0; i < cur.size(); ++i) frob_cols_[u][i] = cur[i];
      cur = zpx::rem(zpx::mul(cur, xp, p_), modulus_, p_);
    }
  }

  // Power sums of the roots of the modulus by Newton's identities.
  power_traces_.assign(2 * d_ - 1, 0);
  power_traces_[0] = static_cast<Residue>(d_ % p_);
  if (d_ >= 2) {
    auto gcoef = [&](long j) -> Residue { return modulus_[j]; };
    for (unsigned k = 1; k < 2 * d_ - 1; ++k) {
      std::uint64_t acc = 0;
      unsigned lim = std::min(k - 1, d_);
      for (unsigned i = 1; i <= lim; ++i)
        accumulate(acc, std::uint64_t{gcoef(static_cast<long>(d_) - i)} * power_traces_[k - i], p_);
      if (k <= d_) accumulate(acc, std::uint64_t{k % p_} * gcoef(static_cast<long>(d_) - k), p_);
      power_traces_[k] = zp::neg(static_cast<Residue>(acc % p_), p_);
    }
  }
}

FieldElem FieldCtx::zero() const { return FieldElem{std::vector<Residue>(d_, 0)}; }

FieldElem FieldCtx::one() const { return constant(1); }

FieldElem FieldCtx::constant(Residue c) const {
  FieldElem r = zero();
  r.coeffs[0] = c % p_;
  return r;
}

FieldElem FieldCtx::basis(unsigned u) const {
  if (u >= d_) throw Error(ErrorKind::InvalidInput, "basis index out of range");
  FieldElem r = zero();
  r.coeffs[u] = 1;
  return r;
}

FieldElem FieldCtx::from_coeffs(std::vector<Residue> c) const {
  if (c.size() > d_) throw Error(ErrorKind::InvalidInput, "too many coefficients for field degree");
  for (Residue& x : c)
    if (x >= p_) throw Error(ErrorKind::InvalidInput, "coefficient " + std::to_string(x) + " not below p");
  c.resize(d_, 0);
  return FieldElem{std::move(c)};
}

bool FieldCtx::contains(const FieldElem& a) const {
  return a.coeffs.size() == d_ &&
         std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](Residue c) { return c < p_; });
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = a;
  for (unsigned i = 0; i < d_; ++i) r.coeffs[i] = zp::add(a.coeffs[i], b.coeffs[i], p_);
  return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = a;
  for (unsigned i = 0; i < d_; ++i) r.coeffs[i] = zp::sub(a.coeffs[i], b.coeffs[i], p_);
  return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
  FieldElem r = a;
  for (auto& c : r.coeffs) c = zp::neg(c, p_);
  return r;
}

FieldElem FieldCtx::scale(const FieldElem& a, Residue c) const {
  FieldElem r = a;
  for (auto& x : r.coeffs) x = zp::mul(x, c, p_);
  return r;
}

void FieldCtx::reduce_product(std::vector<std::uint64_t>& acc, FieldElem& out) const {
  for (std::size_t i = acc.size(); i-- > d_;) {
    Residue c = static_cast<Residue>(acc[i] % p_);
    if (c == 0) continue;
    Residue nc = p_ - c;
    for (unsigned j : modulus_support_)
      accumulate(acc[i - d_ + j], std::uint64_t{nc} * modulus_[j], p_);
  }
  out.coeffs.resize(d_);
  for (unsigned i = 0; i < d_; ++i) out.coeffs[i] = static_cast<Residue>(acc[i] % p_);
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
  if (d_ == 1) return FieldElem{{zp::mul(a.coeffs[0], b.coeffs[0], p_)}};
  std::vector<std::uint64_t> acc(2 * d_ - 1, 0);
  for (unsigned i = 0; i < d_; ++i) {
    if (a.coeffs[i] == 0) continue;
    std::uint64_t ai = a.coeffs[i];
    for (unsigned j = 0; j < d_; ++j) accumulate(acc[i + j], ai * b.coeffs[j], p_);
  }
  FieldElem r;
  reduce_product(acc, r);
  return r;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero field element");
  if (d_ == 1) return FieldElem{{zp::inv(a.coeffs[0], p_)}};
  // Extended Euclid on (g, a), tracking the cofactor of a.
  zpx::ZpPoly r0 = modulus_, r1 = a.coeffs, s0, s1{1};
  zpx::trim(r1);
  while (zpx::degree(r1) > 0) {
    zpx::ZpPoly q, r = r0;
    int dr = zpx::degree(r1);
    Residue li = zp::inv(r1.back(), p_);
    q.assign(std::max(0, zpx::degree(r) - dr + 1), 0);
    for (int i = zpx::degree(r); i >= dr; --i) {
      Residue c = zp::mul(r[i], li, p_);
      q[i - dr] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dr; ++j) r[i - dr + j] = zp::sub(r[i - dr + j], zp::mul(c, r1[j], p_), p_);
    }
    zpx::trim(r);
    zpx::ZpPoly s = zpx::sub(s0, zpx::mul(q, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  Residue c = zp::inv(r1[0], p_);
  s1 = zpx::rem(s1, modulus_, p_);
  FieldElem out = zero();
  for (std::size_t i = 0; i < s1.size(); ++i) out.coeffs[i] = zp::mul(s1[i], c, p_);
  return out;
}

FieldElem FieldCtx::pow(const FieldElem& a, const BigInt& e) const {
  if (sgn(e) < 0) return pow(inv(a), BigInt(-e));
  FieldElem r = one();
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

FieldElem FieldCtx::pow(const FieldElem& a, std::uint64_t e) const {
  FieldElem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

FieldElem FieldCtx::frobenius(const FieldElem& a, std::uint64_t j) const {
  j %= d_;
  FieldElem cur = a;
  std::vector<std::uint64_t> acc(d_);
  for (std::uint64_t step = 0; step < j; ++step) {
    std::fill(acc.begin(), acc.end(), 0);
    for (unsigned u = 0; u < d_; ++u) {
      std::uint64_t c = cur.coeffs[u];
      if (c == 0) continue;
      const auto& col = frob_cols_[u];
      for (unsigned i = 0; i < d_; ++i) accumulate(acc[i], c * col[i], p_);
    }
    for (unsigned i = 0; i < d_; ++i) cur.coeffs[i] = static_cast<Residue>(acc[i] % p_);
  }
  return cur;
}

Residue FieldCtx::trace(const FieldElem& a) const {
  std::uint64_t acc = 0;
  for (unsigned u = 0; u < d_; ++u) accumulate(acc, std::uint64_t{a.coeffs[u]} * power_traces_[u], p_);
  return static_cast<Residue>(acc % p_);
}

Residue FieldCtx::norm(const FieldElem& a) const {
  FieldElem r = a, c = a;
  for (unsigned j = 1; j < d_; ++j) {
    c = frobenius(c, 1);
    r = mul(r, c);
  }
  return r.coeffs[0];
}

int FieldCtx::eta(const FieldElem& a) const {
  Residue n = norm(a);
  if (n == 0) return 0;
  return zp::pow(n, (p_ - 1) / 2, p_) == 1 ? 1 : -1;
}

BigInt FieldCtx::encode(const FieldElem& a) const {
  BigInt v = 0;
  for (unsigned i = d_; i-- > 0;) v = v * p_ + a.coeffs[i];
  return v;
}

FieldElem FieldCtx::decode(const BigInt& v) const {
  if (sgn(v) < 0 || v >= order_) throw Error(ErrorKind::InvalidInput, "encoding out of range");
  FieldElem r = zero();
  BigInt x = v;
  for (unsigned i = 0; i < d_; ++i) {
    r.coeffs[i] = static_cast<Residue>(mpz_fdiv_q_ui(x.get_mpz_t(), x.get_mpz_t(), p_));
  }
  return r;
}

std::string FieldCtx::format(const FieldElem& a) const {
  std::string s;
  for (unsigned i = 0; i < d_; ++i) {
    if (i) s += ',';
    s += std::to_string(a.coeffs[i]);
  }
  return s;
}

FieldElem FieldCtx::parse(std::string_view text) const {
  std::vector<Residue> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::InvalidInput, "bad residue '" + std::string(tok) + "'");
    if (v >= p_) throw Error(ErrorKind::InvalidInput, "residue " + std::string(tok) + " not below p");
    c.push_back(static_cast<Residue>(v));
    pos = end + 1;
  }
  return from_coeffs(std::move(c));
}

CtxPtr default_field(Residue p, unsigned d) {
  static std::mutex mu;
  static std::map<std::pair<Residue, unsigned>, CtxPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, d});
    if (it != cache.end()) return it->second;
  }
  CtxPtr k = FieldCtx::build(p, d);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(p, d), k).first->second;
}

}  // namespace expsum
