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

// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "expsum/evaluator.hpp"
#include "expsum/linalg.hpp"
#include "expsum/nullity.hpp"
#include "expsum/tabulate.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace expsum;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void check(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

unsigned v(std::uint64_t m, std::uint64_t q) {
  unsigned e = 0;
  for (; m % q == 0; m /= q) ++e;
  return e;
}

int leg(std::uint64_t a, Residue p) { return oracle::legendre(static_cast<oracle::i64>(a), p); }

QuadFunc ex22() { return QuadFunc::from_residues(default_field(5, 1), {1, 2, 3, 4, 1}); }
QuadFunc ex53() { return QuadFunc::from_residues(default_field(3, 1), {1, 2, 2, 2, 1}); }
QuadFunc ex54() { return QuadFunc::from_residues(default_field(7, 1), {5, 6, 1}); }
QuadFunc ex75() {
  auto k = default_field(5, 1);
  return QuadFunc::make(k, {{k->constant(3), 1}, {k->constant(1), 3}});
}

std::vector<QuadFunc> corpus() {
  std::vector<QuadFunc> out;
  for (auto [p, name] : {std::pair<Residue, const char*>{3, "table1.csv"}, {5, "table2.csv"}})
    for (const auto& row : testgen::reference_rows(name))
      out.push_back(QuadFunc::from_residues(default_field(p, 1), row.coeffs));
  return out;
}

TypeState direct_state(const QuadFunc& f, std::uint64_t m) {
  auto tn = type_direct(f, m);
  return {f.p(), m * f.n(), tn.l, tn.t};
}

TypeState tilde_state(const QuadFunc& f, std::uint64_t N, std::optional<FieldElem> beta = std::nullopt) {
  auto tn = type_direct(make_tilde(f, default_field(f.p(), static_cast<unsigned>(N)), beta), 1);
  return {f.p(), N, tn.l, tn.t};
}

void table_criterion(Outcome& o, Residue p, unsigned alpha_max, const char* ref, std::size_t rows) {
  auto t0 = std::chrono::steady_clock::now();
  auto d = diff_reference(generate_table(p, alpha_max), testgen::reference_rows(ref));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(d.rows == rows, "row count " + std::to_string(d.rows));
  for (const auto& c : d.diffs)
    o.check(false, "row " + std::to_string(c.row) + " " + c.column + " expected " + c.expected + " got " + c.actual);
  o.detail << d.rows << " rows, " << d.diffs.size() << " diffs, " << secs << " s";
}

void c1(Outcome& o) { table_criterion(o, 3, 4, "table1.csv", 121); }
void c2(Outcome& o) { table_criterion(o, 5, 3, "table2.csv", 156); }

void c3(Outcome& o) {
  auto prof = nullity_profile(ex22());
  o.check(prof.s == 26, "s = " + std::to_string(prof.s));
  o.check(prof.entries == std::map<std::uint64_t, unsigned>{{1, 0}, {2, 0}, {13, 4}, {26, 8}}, "divisor pairs");
  for (std::uint64_t m = 1; m <= 1000; ++m) {
    unsigned want = m % 13 ? 0 : (m % 2 ? 4 : 8);
    o.check(prof.query(m) == want && nullity_at(ex22(), m) == want, "l at m = " + std::to_string(m));
  }
  o.detail << "s = " << prof.s << ", l checked for m <= 1000";
}

void c4(Outcome& o) {
  const std::uint64_t ms[] = {1, 2, 4, 13, 26};
  const int ts[] = {1, -1, -1, -1, -1};
  const unsigned ls[] = {0, 0, 0, 4, 8};
  for (int i = 0; i < 5; ++i) {
    auto val = evaluate(ex22(), ms[i]);
    o.check(val.t == ts[i] && val.l == ls[i], "m = " + std::to_string(ms[i]));
  }
  for (std::uint64_t m : {1u, 2u}) o.check(verify(ex22(), m).equal, "brute force at m = " + std::to_string(m));
  o.detail << "5 multipliers, brute force at m = 1, 2";
}

void c5(Outcome& o) {
  auto f = ex53();
  int brute = 0;
  auto expect = [&](std::uint64_t m, int t) {
    auto val = evaluate(f, m);
    o.check(val.t == t, "t at m = " + std::to_string(m));
    if (m <= 14) {
      auto r = verify(f, m);
      o.check(r.equal && r.value.t == t, "brute force at m = " + std::to_string(m));
      ++brute;
    }
  };
  for (std::uint64_t ms : {1u, 5u, 7u, 11u, 13u}) expect(ms, -1);
  for (unsigned a = 1; a <= 3; ++a)
    for (std::uint64_t ms : {1u, 5u, 7u}) expect(ms << a, ((a + 1) % 2 ? -1 : 1) * leg(ms, 3));
  o.detail << "14 multipliers, " << brute << " confirmed by brute force";
}

void c6(Outcome& o) {
  auto f = ex54();
  o.check(splitting_exponent(f) == 56, "s");
  for (std::uint64_t ms : {1u, 3u, 5u}) {
    o.check(evaluate(f, ms).t == -1, "t at m = " + std::to_string(ms));
    for (unsigned a = 1; a <= 2; ++a)
      o.check(evaluate(f, ms << a).t == -leg(ms, 7), "t at m = " + std::to_string(ms << a));
  }
  for (std::uint64_t m : {1u, 2u}) o.check(verify(f, m).equal, "brute force at m = " + std::to_string(m));
  o.detail << "s = 56, 9 multipliers, brute force at m = 1, 2";
}

void c7(Outcome& o) {
  auto f = ex75();
  auto prof = nullity_profile(f);
  for (std::uint64_t N = 1; N <= 400; ++N) {
    unsigned want = v(N, 2) <= 1 ? 0 : (N % 5 ? 2 : 6);
    o.check(prof.query(N) == want, "l at N = " + std::to_string(N));
  }
  for (std::uint64_t N = 2; N <= 8; N += 2) {
    unsigned l = nullity_at(f, N);
    o.check(type_balanced(f, N, l) == -1, "balanced type at N = " + std::to_string(N));
    o.check(type_direct(f, N).t == -1, "direct type at N = " + std::to_string(N));
  }
  for (std::uint64_t N : {2u, 4u}) {
    auto r = verify(f, N);
    o.check(r.equal && r.value.t == -1, "brute force at N = " + std::to_string(N));
  }
  o.detail << "profile for N <= 400, even N <= 8 by two routes, brute force at N = 2, 4";
}

void c8(Outcome& o) {
  testgen::Gen g(2026);
  const Residue ps[] = {3, 5, 7};
  std::size_t checks = 0;
  for (int i = 0; i < 200; ++i) {
    Residue p = ps[i % 3];
    auto f = testgen::to_quadfunc(default_field(p, 1), g.sparse(p, 3, 3));
    for (unsigned m = 1; oracle::ipow(p, m) <= oracle::ipow(3, 12); ++m) {
      o.check(verify(f, m).equal, f.describe() + " at m = " + std::to_string(m));
      ++checks;
    }
  }
  o.detail << "200 functions, " << checks << " exact comparisons";
}

void c9(Outcome& o) {
  testgen::Gen g(2027);
  std::size_t cases[4] = {0, 0, 0, 0}, checks = 0;
  for (Residue p : {3u, 5u})
    for (unsigned N = 1; N <= 7 && oracle::ipow(p, N) <= oracle::ipow(5, 7); ++N) {
      auto K = default_field(p, N);
      for (std::uint64_t alpha = 0; alpha <= 3; ++alpha)
        for (int i = 0; i < 20; ++i) {
          auto a = g.nonzero_element(*K);
          auto r = monomial_eval(*K, a, alpha);
          auto S = brute_force_sum(QuadFunc::make(K, {{a, alpha}}), 1);
          bool ok = S == expsum_to_cyclotomic(p, N, r.state.l, r.state.t);
          if (r.integer_value) ok = ok && S == CyclotomicInt::integer(p, *r.integer_value);
          o.check(ok, "p = " + std::to_string(p) + ", N = " + std::to_string(N) + ", alpha = " + std::to_string(alpha));
          ++cases[r.case_id];
          ++checks;
        }
    }
  for (int c = 1; c <= 3; ++c) o.check(cases[c] >= 10, "coverage of case " + std::to_string(c));
  o.detail << checks << " comparisons; cases (i)/(ii)/(iii) hit " << cases[1] << "/" << cases[2] << "/" << cases[3];
}

void c10(Outcome& o) {
  const auto fs = corpus();
  testgen::Gen g(2028);
  std::size_t congr = 0, parity = 0, pvals = 0, betas = 0, diags = 0, gcds = 0;
  for (const auto& f : fs) {
    const Residue p = f.p();
    auto prof = nullity_profile(f);
    std::vector<std::uint64_t> qs;
    for (std::uint64_t q = 3; q < 40; q += 2)
      if (q != p && oracle::is_prime(static_cast<oracle::i64>(q))) qs.push_back(q);
    for (auto [N, lN] : prof.entries)
      for (auto q : qs)
        for (unsigned e = 1; e <= 2; ++e) {
          std::uint64_t M = e == 1 ? N * q : N * q * q;
          unsigned dl = prof.query(M) - lN;
          o.check(prof.query(M) >= lN && dl % 2 == 0 && oracle::powmod(p, dl, static_cast<oracle::i64>(q)) == 1,
                  "congruence for " + f.describe());
          ++congr;
        }

    for (std::uint64_t N : {1u, 2u, 3u}) {
      auto st = direct_state(f, N);
      auto ref = tilde_state(f, N);
      for (unsigned s = 1; s <= 3; ++s) {
        o.check((st.l + ref.l + prof.query(N << s)) % 2 == 0, "parity for " + f.describe());
        ++parity;
      }
      auto work = default_field(p, static_cast<unsigned>(N));
      for (int r = 0; r < 3; ++r) {
        FieldElem beta;
        do beta = g.nonzero_element(*work);
        while (work->eta(beta) != -1);
        auto alt = tilde_state(f, N, beta);
        for (unsigned s = 1; s <= 3; ++s) {
          unsigned lt = prof.query(N << s);
          o.check(lift_two(st, alt, s, lt) == lift_two(st, ref, s, lt), "beta independence for " + f.describe());
          ++betas;
        }
      }
    }

    for (std::uint64_t N = 1; oracle::ipow(p, static_cast<unsigned>(p * N)) <= kDefaultBruteCap; ++N) {
      auto lim = lift_p_max_steps(f, N);
      if (lim && *lim == 0) continue;
      auto st = direct_state(f, N);
      o.check(brute_force_sum(f, p * N) == lift_p_value(brute_force_sum(f, N), N, st.l),
              "p-lift value for " + f.describe());
      ++pvals;
    }

    for (std::uint64_t m : {1u, 2u, 3u}) {
      auto B = gram_matrix(f, m);
      auto A = g.invertible(B.size(), p);
      auto C = linalg::mul(linalg::mul(A, B, p), linalg::transpose(A), p);
      auto d1 = diagonalize(B, p), d2 = diagonalize(C, p);
      o.check(d1.rank == d2.rank && d1.type == d2.type, "congruence invariance for " + f.describe());
      ++diags;
    }
  }

  for (Residue p : {3u, 5u, 7u, 11u})
    for (std::uint64_t a = 0; a <= 12; ++a)
      for (std::uint64_t b = 0; b <= 12; ++b) {
        BigInt x, y, gpm, gpp;
        mpz_ui_pow_ui(x.get_mpz_t(), p, a);
        mpz_ui_pow_ui(y.get_mpz_t(), p, b);
        BigInt xp = x + 1, ym = y - 1, yp = y + 1;
        mpz_gcd(gpm.get_mpz_t(), xp.get_mpz_t(), ym.get_mpz_t());
        mpz_gcd(gpp.get_mpz_t(), xp.get_mpz_t(), yp.get_mpz_t());
        o.check(gcd_plus_minus(p, a, b) == gpm && gcd_plus_plus(p, {a, b}) == gpp, "gcd identities");
        gcds += 2;
      }
  o.detail << fs.size() << " corpus functions; " << congr << " congruences, " << parity << " parities, " << pvals
           << " p-lift values, " << betas << " twist comparisons, " << diags << " congruent pairs, " << gcds
           << " gcds";
}

void c11(Outcome& o) {
  testgen::Gen g(2029);
  std::size_t zeros = 0;
  for (int i = 0; i < 100; ++i) {
    Residue p = i % 2 ? 5 : 3;
    auto f = testgen::to_quadfunc(default_field(p, 1), g.sparse(p, 3, 3));
    unsigned N = static_cast<unsigned>(g.range(1, p == 3 ? 8 : 6));
    auto K = default_field(p, N);
    auto b = g.element(*K);
    auto sh = shift_linear(f, b, N, evaluate(f, N).state());
    o.check(shifted_value(sh) == brute_force_sum_affine(f, N, b), f.describe() + " at N = " + std::to_string(N));
    zeros += sh.zero;
  }
  o.detail << "100 shifts, " << zeros << " zero sums";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"first table reproduced", c1},
      {"second table reproduced", c2},
      {"quintic profile over F_5", c3},
      {"quintic types over F_5", c4},
      {"types of the degree-82 function over F_3", c5},
      {"types of the degree-50 function over F_7", c6},
      {"equal 2-adic valuation route", c7},
      {"random oracle sweep", c8},
      {"monomial closed form sweep", c9},
      {"invariant suites over the table corpus", c10},
      {"linear shift identity", c11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << o.detail.str() << ")" << std::endl;
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
