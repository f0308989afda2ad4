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
#include "oracle.hpp"

#include <set>
#include <stdexcept>

namespace oracle {

i64 mod(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 powmod(i64 a, std::uint64_t e, i64 p) {
  i64 r = 1 % p;
  a = mod(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

int legendre(i64 a, i64 p) {
  a = mod(a, p);
  if (a == 0) return 0;
  for (i64 x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

namespace {

using P = std::vector<i64>;

void trim(P& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by a monic b.
P prem(P a, const P& b, i64 p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    i64 c = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = mod(a[shift + j] - c * b[j], p);
    trim(a);
  }
  return a;
}

}  // namespace

bool Field::irreducible(const std::vector<i64>& g, i64 p) {
  const unsigned d = static_cast<unsigned>(g.size() - 1);
  for (unsigned k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = ipow(static_cast<std::uint64_t>(p), k);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      P h(k + 1, 0);
      std::uint64_t t = idx;
      for (unsigned j = 0; j < k; ++j) {
        h[j] = static_cast<i64>(t % p);
        t /= p;
      }
      h[k] = 1;
      if (prem(g, h, p).empty()) return false;
    }
  }
  return true;
}

Field Field::smallest(i64 p, unsigned d) {
  Field F;
  F.p = p;
  F.d = d;
  if (d == 1) return F;
  std::uint64_t count = ipow(static_cast<std::uint64_t>(p), d);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<i64> g(d + 1, 0);
    std::uint64_t t = idx;
    for (unsigned j = 0; j < d; ++j) {
      g[j] = static_cast<i64>(t % p);
      t /= p;
    }
    g[d] = 1;
    if (g[0] != 0 && irreducible(g, p)) {
      F.g = g;
      return F;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

El Field::constant(i64 c) const {
  El r(d, 0);
  r[0] = mod(c, p);
  return r;
}

El Field::add(const El& a, const El& b) const {
  El r(d);
  for (unsigned i = 0; i < d; ++i) r[i] = mod(a[i] + b[i], p);
  return r;
}

El Field::scale(const El& a, i64 c) const {
  El r(d);
  for (unsigned i = 0; i < d; ++i) r[i] = mod(a[i] * c, p);
  return r;
}

El Field::mul(const El& a, const El& b) const {
  if (d == 1) return {a[0] * b[0] % p};
  P r(2 * d - 1, 0);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  r = prem(r, g, p);
  r.resize(d, 0);
  return r;
}

El Field::pow(const El& a, std::uint64_t e) const {
  El r = constant(1), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

El Field::frob(const El& a, unsigned j) const {
  El r = a;
  for (unsigned i = 0; i < j; ++i) r = pow(r, static_cast<std::uint64_t>(p));
  return r;
}

i64 Field::trace(const El& a) const {
  El s = zero(), c = a;
  for (unsigned j = 0; j < d; ++j) {
    s = add(s, c);
    c = pow(c, static_cast<std::uint64_t>(p));
  }
  for (unsigned i = 1; i < d; ++i)
    if (s[i] != 0) throw std::logic_error("trace left F_p");
  return s[0];
}

El Field::element(std::uint64_t idx) const {
  El r(d, 0);
  for (unsigned j = 0; j < d; ++j) {
    r[j] = static_cast<i64>(idx % p);
    idx /= p;
  }
  return r;
}

namespace {

// Columns of x -> x^{p^j} on the power basis.
std::vector<El> frob_columns(const Field& F, std::uint64_t j) {
  std::vector<El> cols;
  const unsigned steps = static_cast<unsigned>(j % F.d);
  for (unsigned u = 0; u < F.d; ++u) {
    El e = F.zero();
    e[u] = 1;
    cols.push_back(F.frob(e, steps));
  }
  return cols;
}

El apply(const Field& F, const std::vector<El>& cols, const El& x) {
  El r = F.zero();
  for (unsigned u = 0; u < F.d; ++u)
    if (x[u])
      for (unsigned i = 0; i < F.d; ++i) r[i] = (r[i] + cols[u][i] * x[u]) % F.p;
  return r;
}

}  // namespace

std::vector<Term> constant_terms(const Field& F, const std::vector<std::pair<i64, std::uint64_t>>& f) {
  std::vector<Term> out;
  for (auto [a, alpha] : f) out.push_back({F.constant(a), alpha});
  return out;
}

std::vector<std::uint64_t> trace_counts(const Field& F, const std::vector<Term>& f, const El* b) {
  std::vector<std::vector<El>> frobs;
  for (const auto& t : f) frobs.push_back(frob_columns(F, t.alpha));
  std::vector<i64> basis_trace(F.d);
  for (unsigned u = 0; u < F.d; ++u) {
    El e = F.zero();
    e[u] = 1;
    basis_trace[u] = F.trace(e);
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(F.p), 0);
  const std::uint64_t size = F.size();
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    El x = F.element(idx);
    El lin = F.zero();
    for (std::size_t i = 0; i < f.size(); ++i) lin = F.add(lin, F.mul(f[i].a, apply(F, frobs[i], x)));
    if (b) lin = F.add(lin, *b);
    El y = F.mul(lin, x);
    i64 tr = 0;
    for (unsigned u = 0; u < F.d; ++u) tr = (tr + y[u] * basis_trace[u]) % F.p;
    ++counts[static_cast<std::size_t>(tr)];
  }
  return counts;
}

std::uint64_t count_roots(const Field& F, const std::vector<El>& c) {
  std::vector<std::vector<El>> frobs;
  for (std::size_t j = 0; j < c.size(); ++j) frobs.push_back(frob_columns(F, j));
  std::uint64_t roots = 0;
  for (std::uint64_t idx = 0; idx < F.size(); ++idx) {
    El x = F.element(idx);
    El s = F.zero();
    for (std::size_t j = 0; j < c.size(); ++j) s = F.add(s, F.mul(c[j], apply(F, frobs[j], x)));
    bool zero = true;
    for (i64 v : s) zero = zero && v == 0;
    roots += zero;
  }
  return roots;
}

int log_p(std::uint64_t count, i64 p) {
  int e = 0;
  while (count > 1) {
    if (count % static_cast<std::uint64_t>(p)) return -1;
    count /= static_cast<std::uint64_t>(p);
    ++e;
  }
  return count == 1 ? e : -1;
}

std::vector<i64> fstar_prime_field(const std::vector<std::pair<i64, std::uint64_t>>& f, i64 p) {
  std::uint64_t alpha = f.back().second;
  std::vector<i64> c(2 * alpha + 1, 0);
  for (auto [a, ai] : f) {
    c[alpha + ai] = mod(c[alpha + ai] + a, p);
    c[alpha - ai] = mod(c[alpha - ai] + a, p);
  }
  return c;
}

i64 q_value(const Field& F, const std::vector<Term>& f, const El& x) {
  El y = F.zero();
  for (const auto& t : f) {
    El xp = F.frob(x, static_cast<unsigned>(t.alpha % F.d));
    y = F.add(y, F.mul(t.a, F.mul(xp, x)));
  }
  return F.trace(y);
}

}  // namespace oracle
