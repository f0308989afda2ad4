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
#include <gtest/gtest.h>

#include "expsum/lifts.hpp"
#include "expsum/nullity.hpp"
#include "expsum/quadform.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace expsum;
using testgen::kind_of;

namespace {

std::vector<QuadFunc> corpus() {
  std::vector<QuadFunc> out;
  for (auto [p, name] : {std::pair<Residue, const char*>{3, "table1.csv"}, {5, "table2.csv"}})
    for (const auto& row : testgen::reference_rows(name))
      out.push_back(QuadFunc::from_residues(default_field(p, 1), row.coeffs));
  return out;
}

const std::vector<QuadFunc>& the_corpus() {
  static const std::vector<QuadFunc> c = corpus();
  return c;
}

TypeState direct_state(const QuadFunc& f, std::uint64_t m) {
  auto tn = type_direct(f, m);
  return {f.p(), m * f.n(), tn.l, tn.t};
}

TypeState tilde_state(const QuadFunc& f, std::uint64_t N, std::optional<FieldElem> beta = std::nullopt) {
  auto work = default_field(f.p(), static_cast<unsigned>(N));
  auto tilde = make_tilde(f, work, beta);
  auto tn = type_direct(tilde, 1);
  return {f.p(), N, tn.l, tn.t};
}

BigInt direct_gcd_pp(Residue p, const std::vector<std::uint64_t>& e) {
  BigInt g = 0;
  for (auto a : e) {
    BigInt x;
    mpz_ui_pow_ui(x.get_mpz_t(), p, a);
    x += 1;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

BigInt direct_gcd_pm(Residue p, std::uint64_t a, std::uint64_t b) {
  BigInt x, y, g;
  mpz_ui_pow_ui(x.get_mpz_t(), p, a);
  mpz_ui_pow_ui(y.get_mpz_t(), p, b);
  x += 1;
  y -= 1;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

std::vector<std::uint64_t> odd_primes_below(std::uint64_t bound, Residue skip) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 3; q < bound; q += 2)
    if (oracle::is_prime(static_cast<oracle::i64>(q)) && q != skip) out.push_back(q);
  return out;
}

}  // namespace

TEST(Valuation, Examples) {
  EXPECT_EQ(vp(12, 2), 2u);
  EXPECT_EQ(oq(13, 5), 4u);
  EXPECT_EQ(oq(3, 7), 1u);
  EXPECT_EQ(oq(5, 11), 1u);
  EXPECT_EQ(kind_of([] { vp(0, 3); }), ErrorKind::ZeroValuation);
  EXPECT_FALSE(vp_or_inf(0, 2).has_value());
  EXPECT_EQ(*vp_or_inf(40, 2), 3u);
}

TEST(Valuation, OrderByEnumeration) {
  for (Residue p : {3u, 5u, 7u})
    for (std::uint64_t q : odd_primes_below(60, p)) {
      std::uint64_t k = 1;
      while (oracle::powmod(p, k, static_cast<oracle::i64>(q)) != 1) ++k;
      EXPECT_EQ(oq(q, p), k);
    }
}

TEST(GcdIdentities, Examples) {
  EXPECT_EQ(gcd_plus_plus(3, {1, 3}), 4);
  EXPECT_EQ(gcd_plus_plus(3, {1, 2}), 2);
  EXPECT_EQ(gcd_plus_plus(5, {2, 2}), 26);
  EXPECT_EQ(gcd_plus_minus(5, 1, 2), 6);
  EXPECT_EQ(gcd_plus_minus(3, 2, 2), 2);
  EXPECT_EQ(gcd_plus_minus(3, 0, 1), 2);
}

TEST(GcdIdentities, AgreeWithDirectGcd) {
  for (Residue p : {3u, 5u, 7u, 11u})
    for (std::uint64_t a = 0; a <= 12; ++a)
      for (std::uint64_t b = 0; b <= 12; ++b) {
        EXPECT_EQ(gcd_plus_minus(p, a, b), direct_gcd_pm(p, a, b)) << p << " " << a << " " << b;
        EXPECT_EQ(gcd_plus_plus(p, {a, b}), direct_gcd_pp(p, {a, b}));
        for (std::uint64_t c = 0; c <= 12; c += 3) EXPECT_EQ(gcd_plus_plus(p, {a, b, c}), direct_gcd_pp(p, {a, b, c}));
      }
}

TEST(OddLift, Examples) {
  TypeState base{5, 1, 0, 1};
  EXPECT_EQ(lift_odd_prime(base, 13, 1, 4), (TypeState{5, 13, 4, -1}));
  TypeState st{3, 4, 3, -1};
  EXPECT_EQ(lift_odd_prime(st, 7, 0, 3), st);
  // A degree-2^a base lifted by q with l unchanged picks up (q/3).
  for (unsigned a = 1; a <= 3; ++a)
    for (std::uint64_t q : {5u, 7u, 11u, 13u}) {
      unsigned l = a == 1 ? 1 : a == 2 ? 3 : 7;
      int t = (a % 2 == 1) ? 1 : -1;
      TypeState s0{3, std::uint64_t{1} << a, l, t};
      EXPECT_EQ(lift_odd_prime(s0, q, 1, l).t, t * oracle::legendre(static_cast<oracle::i64>(q), 3));
    }
}

TEST(OddLift, RejectsBadNullityJumps) {
  TypeState base{5, 1, 0, 1};
  EXPECT_EQ(kind_of([&] { lift_odd_prime(base, 13, 1, 3); }), ErrorKind::ParityViolation);
  EXPECT_EQ(kind_of([&] { lift_odd_prime(base, 13, 1, 2); }), ErrorKind::ParityViolation);
  EXPECT_EQ(kind_of([&] { lift_odd_prime(TypeState{5, 1, 4, 1}, 13, 1, 0); }), ErrorKind::ParityViolation);
}

TEST(OddLift, CorpusCongruences) {
  // p^{dl} = 1 mod q and dl even for every corpus f, base N | s, q^e N.
  for (const auto& f : the_corpus()) {
    auto prof = nullity_profile(f);
    const Residue p = f.p();
    for (auto [N, lN] : prof.entries)
      for (std::uint64_t q : odd_primes_below(40, p))
        for (unsigned e = 1; e <= 2; ++e) {
          std::uint64_t M = N;
          for (unsigned i = 0; i < e; ++i) M *= q;
          unsigned lM = prof.query(M);
          ASSERT_GE(lM, lN);
          unsigned dl = lM - lN;
          EXPECT_EQ(dl % 2, 0u) << f.describe();
          EXPECT_EQ(oracle::powmod(p, dl, static_cast<oracle::i64>(q)), 1) << f.describe() << " q=" << q;
        }
  }
}

TEST(OddLift, OrderIndependence) {
  for (const auto& f : the_corpus()) {
    auto prof = nullity_profile(f);
    for (std::uint64_t N : {1u, 2u}) {
      TypeState base = direct_state(f, N);
      auto qs = odd_primes_below(30, f.p());
      for (std::size_t i = 0; i + 1 < qs.size(); i += 2) {
        std::uint64_t q1 = qs[i], q2 = qs[i + 1];
        auto a = lift_odd_prime(lift_odd_prime(base, q1, 1, prof.query(N * q1)), q2, 1, prof.query(N * q1 * q2));
        auto b = lift_odd_prime(lift_odd_prime(base, q2, 1, prof.query(N * q2)), q1, 1, prof.query(N * q1 * q2));
        EXPECT_EQ(a, b) << f.describe();
        auto c = lift_odd_prime(base, q1, 2, prof.query(N * q1 * q1));
        auto d = lift_odd_prime(lift_odd_prime(base, q1, 1, prof.query(N * q1)), q1, 1, prof.query(N * q1 * q1));
        EXPECT_EQ(c, d) << f.describe();
      }
    }
  }
}

TEST(OddLift, MatchesDirectTypes) {
  testgen::Gen g(51);
  for (Residue p : {3u, 5u, 7u})
    for (int it = 0; it < 10; ++it) {
      auto f = testgen::to_quadfunc(default_field(p, 1), g.sparse(p, 3, 3));
      for (std::uint64_t N : {1u, 2u})
        for (std::uint64_t q : odd_primes_below(24, p)) {
          if (N * q > 60) continue;
          auto lifted = lift_odd_prime(direct_state(f, N), q, 1, nullity_at(f, N * q));
          EXPECT_EQ(lifted, direct_state(f, N * q)) << f.describe() << " N=" << N << " q=" << q;
        }
    }
}

TEST(Tilde, Examples) {
  auto dense = [](const QuadFunc& f) {
    std::vector<Residue> out;
    for (const auto& t : f.terms()) out.push_back(t.a.coeffs[0]);
    return out;
  };
  auto k5 = default_field(5, 1), k3 = default_field(3, 1), k7 = default_field(7, 1);
  EXPECT_EQ(dense(make_tilde(QuadFunc::from_residues(k5, {1, 2, 3, 4, 1}), k5)), (std::vector<Residue>{2, 1, 1, 2, 2}));
  EXPECT_EQ(dense(make_tilde(QuadFunc::from_residues(k3, {1, 2, 2, 2, 1}), k3)), (std::vector<Residue>{2, 2, 1, 2, 2}));
  EXPECT_EQ(dense(make_tilde(QuadFunc::from_residues(k7, {5, 6, 1}), k7)), (std::vector<Residue>{1, 3, 3}));
}

TEST(TwoLift, Examples) {
  for (unsigned a = 1; a <= 5; ++a) {
    EXPECT_EQ(lift_two({5, 1, 0, 1}, {5, 1, 0, -1}, a, 0).t, -1);
    EXPECT_EQ(lift_two({3, 1, 0, -1}, {3, 1, 1, 1}, a, a == 1 ? 1 : a == 2 ? 3 : 7).t, a % 2 ? 1 : -1);
    EXPECT_EQ(lift_two({7, 1, 0, -1}, {7, 1, 1, 1}, a, a <= 2 ? 1 : 3).t, -1);
  }
  EXPECT_EQ(kind_of([] { lift_two({3, 1, 0, -1}, {3, 1, 1, 1}, 1, 2); }), ErrorKind::InternalInconsistency);
}

TEST(TwoLift, ParityOnCorpus) {
  for (const auto& f : the_corpus()) {
    auto prof = nullity_profile(f);
    for (std::uint64_t N : {1u, 3u}) {
      auto ts = tilde_state(f, N);
      for (unsigned s = 1; s <= 3; ++s)
        EXPECT_EQ((prof.query(N) + ts.l + prof.query(N << s)) % 2, 0u) << f.describe() << " N=" << N;
    }
  }
}

TEST(TwoLift, IndependentOfNonsquare) {
  testgen::Gen g(52);
  for (const auto& f : the_corpus()) {
    auto prof = nullity_profile(f);
    for (std::uint64_t N : {1u, 2u}) {
      auto work = default_field(f.p(), static_cast<unsigned>(N));
      TypeState st = direct_state(f, N);
      TypeState ref = tilde_state(f, N);
      for (int r = 0; r < 3; ++r) {
        FieldElem beta;
        do beta = g.nonzero_element(*work);
        while (work->eta(beta) != -1);
        TypeState alt = tilde_state(f, N, beta);
        for (unsigned s = 1; s <= 3; ++s)
          EXPECT_EQ(lift_two(st, alt, s, prof.query(N << s)), lift_two(st, ref, s, prof.query(N << s)))
              << f.describe();
      }
    }
  }
}

TEST(TwoLift, MatchesDirectTypes) {
  testgen::Gen g(53);
  for (Residue p : {3u, 5u, 7u})
    for (int it = 0; it < 10; ++it) {
      auto f = testgen::to_quadfunc(default_field(p, 1), g.sparse(p, 3, 3));
      for (std::uint64_t N : {1u, 3u})
        for (unsigned s = 1; s <= 3; ++s) {
          auto lifted = lift_two(direct_state(f, N), tilde_state(f, N), s, nullity_at(f, N << s));
          EXPECT_EQ(lifted, direct_state(f, N << s)) << f.describe() << " N=" << N << " s=" << s;
        }
    }
}

TEST(PLift, Examples) {
  auto k = default_field(3, 1);
  auto f = QuadFunc::from_residues(k, {0, 0, 0, 1});
  TypeState base = direct_state(f, 1);
  EXPECT_EQ(lift_p(base, f, 0), base);
  ASSERT_EQ(lift_p_max_steps(f, 1), std::optional<std::uint64_t>(1));
  TypeState up = lift_p(base, f, 1);
  EXPECT_EQ(up.N, 3u);
  EXPECT_EQ(up.l, 0u);
  EXPECT_EQ(up.t, base.t);
  EXPECT_EQ(up.t, 1);
  EXPECT_EQ(brute_force_sum(f, 3), expsum_to_cyclotomic(3, 3, 0, 1));
  EXPECT_EQ(kind_of([&] { lift_p(base, f, 2); }), ErrorKind::ConditionViolated);
  auto g2 = QuadFunc::from_residues(k, {1, 1});
  EXPECT_EQ(kind_of([&] { lift_p(direct_state(g2, 1), g2, 1); }), ErrorKind::ConditionViolated);
}

TEST(PLift, ValueIdentity) {
  // Random f whose exponents are 0 or multiples of p, checked wherever p^{pN} is brute-forceable.
  testgen::Gen g(54);
  for (Residue p : {3u, 5u})
    for (int it = 0; it < 12; ++it) {
      auto k = default_field(p, 1);
      std::vector<Term> terms;
      if (g.below(2)) terms.push_back({k->constant(g.nonzero(p)), 0});
      terms.push_back({k->constant(g.nonzero(p)), p});
      if (p == 3 && g.below(2)) terms.push_back({k->constant(g.nonzero(p)), 2 * p});
      auto f = QuadFunc::make(k, terms);
      for (std::uint64_t N = 1; oracle::ipow(p, static_cast<unsigned>(p * N)) <= 2'000'000; ++N) {
        auto lim = lift_p_max_steps(f, N);
        if (lim && *lim == 0) continue;
        auto S = brute_force_sum(f, N);
        auto st = direct_state(f, N);
        EXPECT_EQ(brute_force_sum(f, p * N), lift_p_value(S, N, st.l)) << f.describe() << " N=" << N;
        EXPECT_EQ(lift_p(st, f, 1), direct_state(f, p * N)) << f.describe() << " N=" << N;
      }
    }
}

TEST(PLift, CorpusRowsThatQualify) {
  for (const auto& f : the_corpus()) {
    auto lim = lift_p_max_steps(f, 1);
    if (lim && *lim == 0) continue;
    auto st = direct_state(f, 1);
    EXPECT_EQ(brute_force_sum(f, f.p()), lift_p_value(brute_force_sum(f, 1), 1, st.l)) << f.describe();
  }
}

TEST(Balanced, Examples) {
  auto k5 = default_field(5, 1);
  auto f = QuadFunc::make(k5, {{k5->constant(3), 1}, {k5->constant(1), 3}});
  for (std::uint64_t N : {2u, 4u, 6u, 8u}) EXPECT_EQ(type_balanced(f, N, nullity_at(f, N)), -1);
  EXPECT_EQ(type_balanced(f, 2, 0), -1);
  auto k3 = default_field(3, 1);
  auto h = QuadFunc::make(k3, {{k3->constant(1), 1}, {k3->constant(2), 3}});
  for (std::uint64_t N : {2u, 4u, 6u, 10u}) EXPECT_EQ(type_balanced(h, N, nullity_at(h, N)), 1);
  EXPECT_EQ(kind_of([&] { type_balanced(f, 3, 0); }), ErrorKind::NotApplicable);
  EXPECT_EQ(kind_of([&] { type_balanced(QuadFunc::from_residues(k5, {1, 1}), 2, 0); }), ErrorKind::NotApplicable);
  EXPECT_EQ(kind_of([&] { type_balanced(QuadFunc::from_residues(k5, {0, 1, 1}), 2, 0); }), ErrorKind::NotApplicable);
  EXPECT_EQ(kind_of([&] { type_balanced(f, 4, 1); }), ErrorKind::DivisibilityViolated);
}

TEST(Balanced, AgreesWithDirectOnCorpus) {
  int checked = 0;
  for (const auto& f : the_corpus())
    for (std::uint64_t N = 1; N <= 24; ++N) {
      unsigned nu = 0;
      if (!balanced_applies(f, N, &nu)) continue;
      auto d = direct_state(f, N);
      EXPECT_EQ(type_balanced(f, N, d.l), d.t) << f.describe() << " N=" << N;
      ++checked;
    }
  EXPECT_GT(checked, 100);
}

TEST(Monomial, Examples) {
  auto k3 = default_field(3, 1);
  auto r = monomial_eval(*k3, k3->one(), 0);
  EXPECT_EQ(r.case_id, 1);
  EXPECT_EQ(r.state, (TypeState{3, 1, 0, 1}));

  auto k25 = default_field(5, 2);
  FieldElem a;
  for (BigInt e = 1; e < 25; ++e)
    if (k25->pow(k25->decode(e), std::uint64_t{4}) == k25->from_int(-1)) {
      a = k25->decode(e);
      break;
    }
  ASSERT_FALSE(a.coeffs.empty());
  auto r2 = monomial_eval(*k25, a, 1);
  EXPECT_EQ(r2.case_id, 2);
  ASSERT_TRUE(r2.integer_value.has_value());
  EXPECT_EQ(*r2.integer_value, 25);
  EXPECT_EQ(r2.state.l, 2u);
  EXPECT_EQ(brute_force_sum(QuadFunc::make(k25, {{a, 1}}), 1), CyclotomicInt::integer(5, 25));

  auto k81 = default_field(3, 4);
  auto r3 = monomial_eval(*k81, k81->one(), 1);
  EXPECT_EQ(r3.case_id, 3);
  EXPECT_EQ(*r3.integer_value, -27);
  EXPECT_EQ(brute_force_sum(QuadFunc::make(k81, {{k81->one(), 1}}), 1), CyclotomicInt::integer(3, -27));
  EXPECT_EQ(kind_of([&] { monomial_eval(*k81, k81->zero(), 1); }), ErrorKind::ZeroCoefficient);
}

TEST(Monomial, AgreesWithBruteForce) {
  testgen::Gen g(55);
  for (Residue p : {3u, 5u})
    for (unsigned N = 1; oracle::ipow(p, N) <= 78125; ++N) {
      auto K = default_field(p, N);
      for (std::uint64_t alpha = 0; alpha <= 4; ++alpha)
        for (int it = 0; it < 20; ++it) {
          auto a = g.nonzero_element(*K);
          auto r = monomial_eval(*K, a, alpha);
          auto S = brute_force_sum(QuadFunc::make(K, {{a, alpha}}), 1);
          EXPECT_EQ(S, expsum_to_cyclotomic(p, N, r.state.l, r.state.t)) << "p=" << p << " N=" << N << " a=" << alpha;
          if (r.integer_value) {
            EXPECT_EQ(S, CyclotomicInt::integer(p, *r.integer_value));
          }
        }
    }
}

TEST(Shift, Examples) {
  auto k5 = default_field(5, 1);
  auto f = QuadFunc::from_residues(k5, {1});
  TypeState st{5, 1, 0, 1};
  auto zero_b = shift_linear(f, k5->zero(), 1, st);
  EXPECT_FALSE(zero_b.zero);
  EXPECT_EQ(zero_b.phase, 0u);
  EXPECT_EQ(shifted_value(zero_b), gauss_cyclotomic(5));

  auto s = shift_linear(f, k5->one(), 1, st);
  EXPECT_FALSE(s.zero);
  EXPECT_EQ(*s.x0, k5->constant(3));
  EXPECT_EQ(s.phase, 4u);
  EXPECT_EQ(shifted_value(s), CyclotomicInt::zeta_power(5, 1) * gauss_cyclotomic(5));
  EXPECT_EQ(shifted_value(s), brute_force_sum_affine(f, 1, k5->one()));

  auto k3 = default_field(3, 1);
  auto h = QuadFunc::from_residues(k3, {2, 1});
  auto z = shift_linear(h, k3->one(), 1, {3, 1, 1, 1});
  EXPECT_TRUE(z.zero);
  EXPECT_TRUE(brute_force_sum_affine(h, 1, k3->one()).is_zero());
}

TEST(Shift, ProductIdentityByBruteForce) {
  testgen::Gen g(56);
  for (Residue p : {3u, 5u})
    for (int it = 0; it < 25; ++it) {
      auto f = testgen::to_quadfunc(default_field(p, 1), g.sparse(p, 3, 3));
      unsigned N = static_cast<unsigned>(g.range(1, p == 3 ? 6 : 4));
      auto K = default_field(p, N);
      auto b = g.element(*K);
      auto S = brute_force_sum(f, N);
      auto Sb = brute_force_sum_affine(f, N, b);
      auto st = direct_state(f, N);
      auto sh = shift_linear(f, b, N, st);
      auto prod = S * Sb.conj();
      if (sh.zero) {
        EXPECT_TRUE(Sb.is_zero());
        EXPECT_TRUE(prod.is_zero());
      } else {
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), p, N + st.l);
        Embedding e(f.ctx(), K);
        Residue tr = K->trace(QuadFunc::eval_in(*K, f.embedded(e).terms(), *sh.x0));
        std::vector<FieldElem> c;
        for (const auto& x : build_fstar(f).coeffs) c.push_back(e(x));
        EXPECT_EQ(LinearizedPoly::apply(*K, c, *sh.x0), K->frobenius(b, f.alpha()));
        EXPECT_EQ(prod, CyclotomicInt::zeta_power(p, tr) * scale);
        EXPECT_EQ(shifted_value(sh), Sb);
      }
    }
}
