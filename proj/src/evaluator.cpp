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
#include "expsum/evaluator.hpp"

#include <cmath>

#include "expsum/nullity.hpp"

namespace expsum {

std::string_view step_name(StepKind k) {
  switch (k) {
    case StepKind::Direct: return "direct";
    case StepKind::PLift: return "p-lift";
    case StepKind::TwoLift: return "2-lift";
    case StepKind::OddLift: return "odd-lift";
    case StepKind::Balanced: return "balanced";
    case StepKind::Monomial: return "monomial";
  }
  return "unknown";
}

std::string ExpSumValue::exact() const {
  const std::uint64_t r = N - l;
  std::string body;
  auto factor = [&](const char* sym, std::uint64_t e) {
    if (e == 0) return;
    if (!body.empty()) body += "*";
    body += sym;
    if (e > 1) body += "^" + std::to_string(e);
  };
  factor("g", r);
  factor("p", l);
  if (body.empty()) body = "1";
  return (t < 0 ? "-" : "") + body;
}

std::complex<double> ExpSumValue::approx() const {
  const std::uint64_t r = N - l;
  const std::uint64_t e = ((static_cast<std::uint64_t>(p) - 1) * (p - 1) / 4) % 4;
  static const std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  double mag = std::pow(static_cast<double>(p), static_cast<double>(r) / 2.0 + l);
  const std::complex<double> u = units[(e * (r % 4)) % 4];
  return {t * mag * u.real() + 0.0, t * mag * u.imag() + 0.0};
}

CyclotomicInt expsum_to_cyclotomic(const ExpSumValue& v) { return v.to_cyclotomic(); }

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    unsigned e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e) out.push_back({q, e});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

namespace {

// Answers l_m for increasing m from a single walk, restarting when asked to go back.
class NullityOracle {
 public:
  explicit NullityOracle(const QuadFunc& f) : f_(f) {}

  unsigned at(std::uint64_t m) {
    if (m == 0 || m % f_.n()) throw Error(ErrorKind::NotMultipleOfBase, "nullity query off the base degree");
    if (f_.alpha() == 0) return 0;
    if (!walk_ || walk_->exponent() > m) walk_.emplace(*f_.ctx(), to_skew(build_fstar(f_)));
    while (walk_->exponent() < m) walk_->step();
    return static_cast<unsigned>(walk_->gcd_qdegree());
  }

 private:
  const QuadFunc& f_;
  std::optional<skew::FrobeniusWalk> walk_;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b && a > UINT64_MAX / b) throw Error(ErrorKind::TooLarge, "degree overflows 64 bits");
  return a * b;
}

EvalPlan general_plan(const QuadFunc& f, std::uint64_t m, const EvalLimits& limits) {
  const std::uint64_t n = f.n(), p = f.p();
  EvalPlan pl;
  unsigned a = 0, c = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> odd;
  for (auto [q, e] : factorize(m)) {
    if (q == 2) a = e;
    else if (q == p) c = e;
    else odd.push_back({q, e});
  }
  std::uint64_t N = n;
  auto lim = lift_p_max_steps(f, n);
  if (c > 0 && (!lim || c <= *lim)) {
    if (n > limits.direct_limit)
      throw Error(ErrorKind::Unsupported, "base degree " + std::to_string(n) + " exceeds the direct limit");
    pl.base_N = n;
    pl.steps.push_back({StepKind::Direct, 0, 0, n});
    for (unsigned i = 0; i < c; ++i) N = checked_mul(N, p);
    pl.steps.push_back({StepKind::PLift, p, c, N});
  } else {
    for (unsigned i = 0; i < c; ++i) N = checked_mul(N, p);
    if (N > limits.direct_limit)
      throw Error(ErrorKind::Unsupported,
                  c > 0 ? "p-lift valuation condition fails and base n*p^c = " + std::to_string(N) +
                              " exceeds the direct limit"
                        : "base degree " + std::to_string(N) + " exceeds the direct limit");
    pl.base_N = N;
    pl.steps.push_back({StepKind::Direct, 0, 0, N});
  }
  if (a > 0) {
    for (unsigned i = 0; i < a; ++i) N = checked_mul(N, 2);
    pl.steps.push_back({StepKind::TwoLift, 2, a, N});
  }
  for (auto [q, e] : odd) {
    for (unsigned i = 0; i < e; ++i) N = checked_mul(N, q);
    pl.steps.push_back({StepKind::OddLift, q, e, N});
  }
  return pl;
}

ProvenanceStep record(StepKind kind, std::uint64_t from, const TypeState& st, std::uint64_t q = 0, unsigned s = 0,
                      std::string note = {}) {
  return {kind, from, st.N, q, s, st.l, st.t, std::move(note)};
}

ExpSumValue run_general(const QuadFunc& f, const EvalPlan& pl, NullityOracle& nul) {
  ExpSumValue v;
  v.p = f.p();
  TypeState st;
  for (const auto& step : pl.steps) {
    const std::uint64_t from = st.N;
    switch (step.kind) {
      case StepKind::Direct: {
        TypeNullity tn = type_direct(f, step.N / f.n());
        st = {f.p(), step.N, tn.l, tn.t};
        v.provenance.push_back(record(step.kind, step.N, st, 0, 0, "Gram matrix over F_p^" + std::to_string(step.N)));
        break;
      }
      case StepKind::PLift: {
        st = lift_p(st, f, step.s);
        unsigned l = nul.at(st.N);
        if (l != st.l)
          throw Error(ErrorKind::InternalInconsistency, "p-lift nullity " + std::to_string(st.l) +
                                                            " disagrees with computed " + std::to_string(l));
        v.provenance.push_back(record(step.kind, from, st, step.q, step.s));
        break;
      }
      case StepKind::TwoLift: {
        CtxPtr work = default_field(f.p(), static_cast<unsigned>(st.N));
        QuadFunc tilde = make_tilde(f, work);
        TypeNullity tt = type_direct(tilde, 1);
        TypeState ts{f.p(), st.N, tt.l, tt.t};
        st = lift_two(st, ts, step.s, nul.at(step.N));
        v.provenance.push_back(record(step.kind, from, st, 2, step.s,
                                      "twist type " + std::to_string(tt.t) + ", twist nullity " + std::to_string(tt.l)));
        break;
      }
      case StepKind::OddLift: {
        st = lift_odd_prime(st, step.q, step.s, nul.at(step.N));
        v.provenance.push_back(record(step.kind, from, st, step.q, step.s));
        break;
      }
      default:
        throw Error(ErrorKind::InternalInconsistency, "unexpected step in lift composition");
    }
  }
  v.N = st.N;
  v.l = st.l;
  v.t = st.t;
  return v;
}

ExpSumValue run_monomial(const QuadFunc& f, std::uint64_t N, NullityOracle& nul) {
  CtxPtr K = default_field(f.p(), static_cast<unsigned>(N));
  Embedding e(f.ctx(), K);
  const Term& term = f.terms().front();
  MonomialResult mr = monomial_eval(*K, e(term.a), term.alpha);
  unsigned l = nul.at(N);
  if (l != mr.state.l)
    throw Error(ErrorKind::InternalInconsistency, "monomial closed form nullity " + std::to_string(mr.state.l) +
                                                      " disagrees with computed " + std::to_string(l));
  ExpSumValue v;
  v.p = f.p();
  v.N = N;
  v.l = mr.state.l;
  v.t = mr.state.t;
  static const char* cases[] = {"", "case (i)", "case (ii)", "case (iii)"};
  v.provenance.push_back(record(StepKind::Monomial, N, mr.state, term.alpha, 0, cases[mr.case_id]));
  return v;
}

ExpSumValue run_balanced(const QuadFunc& f, std::uint64_t N, NullityOracle& nul) {
  ExpSumValue v;
  v.p = f.p();
  v.N = N;
  v.l = nul.at(N);
  v.t = type_balanced(f, N, v.l);
  v.provenance.push_back(record(StepKind::Balanced, N, v.state()));
  return v;
}

}  // namespace

EvalPlan plan(const QuadFunc& f, std::uint64_t m, const EvalLimits& limits) {
  if (m == 0) throw Error(ErrorKind::InvalidInput, "multiplier must be positive");
  const std::uint64_t N = checked_mul(m, f.n());
  if (f.is_monomial()) return {N, {{StepKind::Monomial, 0, 0, N}}};
  if (balanced_applies(f, N)) return {N, {{StepKind::Balanced, 0, 0, N}}};
  return general_plan(f, m, limits);
}

ExpSumValue evaluate(const QuadFunc& f, std::uint64_t m, const EvalLimits& limits) {
  EvalPlan pl = plan(f, m, limits);
  const std::uint64_t N = m * f.n();
  NullityOracle nul(f);
  const StepKind first = pl.steps.front().kind;
  ExpSumValue v;
  if (first == StepKind::Monomial) v = run_monomial(f, N, nul);
  else if (first == StepKind::Balanced) v = run_balanced(f, N, nul);
  else v = run_general(f, pl, nul);

  if (v.N != N || v.l != nul.at(N)) throw Error(ErrorKind::InternalInconsistency, "final nullity mismatch");

  if (limits.cross_check) {
    std::vector<ExpSumValue> others;
    if (first == StepKind::Monomial && balanced_applies(f, N)) others.push_back(run_balanced(f, N, nul));
    if (first != StepKind::Direct) {
      try {
        NullityOracle nul2(f);
        others.push_back(run_general(f, general_plan(f, m, limits), nul2));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Unsupported) throw;
      }
    }
    for (const auto& o : others) {
      if (o.t != v.t || o.l != v.l)
        throw Error(ErrorKind::InternalInconsistency,
                    "routes disagree: " + std::string(step_name(first)) + " gives (t=" + std::to_string(v.t) +
                        ", l=" + std::to_string(v.l) + "), " + std::string(step_name(o.provenance.back().kind)) +
                        " gives (t=" + std::to_string(o.t) + ", l=" + std::to_string(o.l) + ")");
      v.provenance.push_back(
          {o.provenance.back().kind, 0, N, 0, 0, o.l, o.t, "cross-check agrees"});
    }
  }
  return v;
}

VerifyReport verify(const QuadFunc& f, std::uint64_t m, std::uint64_t cap, const EvalLimits& limits) {
  VerifyReport r;
  r.brute = brute_force_sum(f, m, cap);
  r.value = evaluate(f, m, limits);
  r.closed_form = r.value.to_cyclotomic();
  r.equal = r.closed_form == r.brute;
  return r;
}

}  // namespace expsum
