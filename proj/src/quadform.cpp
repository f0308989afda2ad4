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
#include "expsum/quadform.hpp"

#include "expsum/nullity.hpp"

namespace expsum {

int legendre(long long a, Residue p) {
  Residue r = zp::from_int(a, p);
  if (r == 0) return 0;
  return zp::pow(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

FieldElem smallest_nonsquare(const FieldCtx& k) {
  for (BigInt v = 1; v < k.order(); ++v) {
    FieldElem x = k.decode(v);
    if (k.eta(x) == -1) return x;
  }
  throw Error(ErrorKind::InternalInconsistency, "field without nonsquares");
}

namespace {

// C[u][v] = Tr(L(x^u) x^v): the bilinear form whose diagonal is Q.
ZpMatrix bilinear_table(const FieldCtx& K, const std::vector<Term>& terms) {
  const unsigned N = K.degree();
  const Residue p = K.p();
  auto tr = K.power_traces();
  ZpMatrix C(N, std::vector<Residue>(N, 0));
  for (unsigned u = 0; u < N; ++u) {
    FieldElem y = QuadFunc::linear_part(K, terms, K.basis(u));
    for (unsigned v = 0; v < N; ++v) {
      std::uint64_t acc = 0;
      for (unsigned w = 0; w < N; ++w) {
        acc += std::uint64_t{y.coeffs[w]} * tr[w + v];
        if (acc >> 62) acc %= p;
      }
      C[u][v] = static_cast<Residue>(acc % p);
    }
  }
  return C;
}

std::vector<Term> carried_terms(const QuadFunc& f, const Embedding& e) {
  std::vector<Term> t;
  for (const auto& term : f.terms()) t.push_back({e(term.a), term.alpha});
  return t;
}

std::uint64_t field_size_checked(Residue p, std::uint64_t N, std::uint64_t cap) {
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < N; ++i) {
    if (size > cap / p) throw Error(ErrorKind::TooLarge, "p^N exceeds the brute-force cap of " + std::to_string(cap));
    size *= p;
  }
  return size;
}

// Enumerates x over F_p^N, tallying Q(x) + lin(x) with Q(x) = x C x^T, lin(x) = beta.x.
std::vector<std::uint64_t> tally(const ZpMatrix& C, const std::vector<Residue>& beta, Residue p) {
  const std::size_t N = C.size();
  std::vector<std::vector<Residue>> D(N, std::vector<Residue>(N));
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t v = 0; v < N; ++v) D[u][v] = zp::add(C[u][v], C[v][u], p);
  std::vector<Residue> S(N, 0), x(N, 0);
  std::vector<std::uint64_t> counts(p, 0);
  Residue T = 0;
  const Residue c00 = C[0][0], d00 = D[0][0];
  for (;;) {
    // Digit 0 sweeps a full cycle; S and T return to their values afterwards.
    Residue t = T, d = zp::add(zp::add(S[0], c00, p), beta[0], p);
    for (Residue x0 = 0; x0 < p; ++x0) {
      ++counts[t];
      t = zp::add(t, d, p);
      d = zp::add(d, d00, p);
    }
    std::size_t u = 1;
    for (; u < N; ++u) {
      T = zp::add(T, zp::add(zp::add(S[u], C[u][u], p), beta[u], p), p);
      for (std::size_t w = 0; w < N; ++w) S[w] = zp::add(S[w], D[w][u], p);
      if (++x[u] < p) break;
      x[u] = 0;
    }
    if (u >= N) break;
  }
  return counts;
}

}  // namespace

ZpMatrix gram_matrix(const QuadFunc& f, const Embedding& e) {
  const FieldCtx& K = *e.target();
  const Residue p = K.p();
  ZpMatrix C = bilinear_table(K, carried_terms(f, e));
  const Residue inv2 = zp::inv(2, p);
  const std::size_t N = C.size();
  ZpMatrix B(N, std::vector<Residue>(N));
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t v = 0; v < N; ++v) B[u][v] = zp::mul(zp::add(C[u][v], C[v][u], p), inv2, p);
  return B;
}

ZpMatrix gram_matrix(const QuadFunc& f, std::uint64_t m) {
  CtxPtr K = default_field(f.p(), static_cast<unsigned>(m * f.n()));
  return gram_matrix(f, Embedding(f.ctx(), K));
}

QuadFormDiag diagonalize(ZpMatrix B, Residue p) {
  const std::size_t N = B.size();
  for (std::size_t i = 0; i < N; ++i) {
    if (B[i].size() != N) throw Error(ErrorKind::NotSymmetric, "matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (B[i][j] != B[j][i]) throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
  }
  auto add_row_col = [&](std::size_t dst, std::size_t src, Residue c) {
    // e_dst <- e_dst + c e_src
    for (std::size_t j = 0; j < N; ++j) B[dst][j] = zp::add(B[dst][j], zp::mul(c, B[src][j], p), p);
    for (std::size_t j = 0; j < N; ++j) B[j][dst] = zp::add(B[j][dst], zp::mul(c, B[j][src], p), p);
  };
  auto swap_row_col = [&](std::size_t a, std::size_t b) {
    std::swap(B[a], B[b]);
    for (auto& row : B) std::swap(row[a], row[b]);
  };
  std::size_t k = 0;
  for (; k < N; ++k) {
    std::size_t piv = k;
    while (piv < N && B[piv][piv] == 0) ++piv;
    if (piv == N) {
      // All remaining diagonal entries vanish; expose one through e_u + e_v.
      bool found = false;
      for (std::size_t u = k; u < N && !found; ++u)
        for (std::size_t v = u + 1; v < N && !found; ++v)
          if (B[u][v] != 0) {
            add_row_col(u, v, 1);
            piv = u;
            found = true;
          }
      if (!found) break;
    }
    if (piv != k) swap_row_col(piv, k);
    Residue inv = zp::inv(B[k][k], p);
    for (std::size_t r = k + 1; r < N; ++r) {
      if (B[r][k] == 0) continue;
      add_row_col(r, k, zp::neg(zp::mul(B[r][k], inv, p), p));
    }
  }
  QuadFormDiag D;
  D.p = p;
  D.N = N;
  D.diag.resize(N);
  Residue prod = 1;
  for (std::size_t i = 0; i < N; ++i) {
    D.diag[i] = B[i][i];
    if (B[i][i] != 0) {
      ++D.rank;
      prod = zp::mul(prod, B[i][i], p);
    }
  }
  D.nullity = N - D.rank;
  D.type = D.rank == 0 ? 1 : legendre(prod, p);
  return D;
}

TypeNullity type_direct(const QuadFunc& f, const Embedding& e) {
  QuadFormDiag D = diagonalize(gram_matrix(f, e), f.p());
  unsigned l = nullity_at(f, e.target()->degree());
  if (D.nullity != l)
    throw Error(ErrorKind::InternalInconsistency, "Gram nullity " + std::to_string(D.nullity) +
                                                      " disagrees with p-polynomial nullity " + std::to_string(l));
  return {D.type, l};
}

TypeNullity type_direct(const QuadFunc& f, std::uint64_t m) {
  CtxPtr K = default_field(f.p(), static_cast<unsigned>(m * f.n()));
  return type_direct(f, Embedding(f.ctx(), K));
}

CyclotomicInt brute_force_sum_affine(const QuadFunc& f, std::uint64_t m, const FieldElem& b, std::uint64_t cap) {
  const Residue p = f.p();
  const std::uint64_t N = m * f.n();
  field_size_checked(p, N, cap);
  CtxPtr K = default_field(p, static_cast<unsigned>(N));
  if (!K->contains(b)) throw Error(ErrorKind::InvalidInput, "linear coefficient not in F_{p^N}");
  Embedding e(f.ctx(), K);
  ZpMatrix C = bilinear_table(*K, carried_terms(f, e));
  std::vector<Residue> beta(N);
  for (unsigned u = 0; u < N; ++u) beta[u] = K->trace(K->mul(b, K->basis(u)));
  return CyclotomicInt::from_trace_counts(p, tally(C, beta, p));
}

CyclotomicInt brute_force_sum(const QuadFunc& f, std::uint64_t m, std::uint64_t cap) {
  CtxPtr K = default_field(f.p(), static_cast<unsigned>(m * f.n()));
  return brute_force_sum_affine(f, m, K->zero(), cap);
}

CyclotomicInt brute_force_sum_literal(const QuadFunc& f, const Embedding& e, std::uint64_t cap) {
  const FieldCtx& K = *e.target();
  const Residue p = K.p();
  std::uint64_t size = field_size_checked(p, K.degree(), cap);
  std::vector<Term> terms = carried_terms(f, e);
  std::vector<std::uint64_t> counts(p, 0);
  FieldElem x = K.zero();
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    ++counts[K.trace(QuadFunc::eval_in(K, terms, x))];
    for (auto& c : x.coeffs) {
      if (++c < p) break;
      c = 0;
    }
  }
  return CyclotomicInt::from_trace_counts(p, counts);
}

}  // namespace expsum
