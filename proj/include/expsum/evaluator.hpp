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

#include "expsum/cyclotomic.hpp"
#include "expsum/lifts.hpp"
#include "expsum/quadform.hpp"

namespace expsum {

enum class StepKind { Direct, PLift, TwoLift, OddLift, Balanced, Monomial };

std::string_view step_name(StepKind k);

struct ProvenanceStep {
  StepKind kind = StepKind::Direct;
  std::uint64_t from_N = 0;
  std::uint64_t to_N = 0;
  /// Prime and exponent for lifts; alpha for the monomial route.
  std::uint64_t q = 0;
  unsigned s = 0;
  unsigned l = 0;
  int t = 1;
  std::string note;
};

/// S(f, N) = t * g_p^{N-l} * p^l, with the steps that produced t.
struct ExpSumValue {
  Residue p = 0;
  std::uint64_t N = 0;
  unsigned l = 0;
  int t = 1;
  std::vector<ProvenanceStep> provenance;

  TypeState state() const { return {p, N, l, t}; }
  CyclotomicInt to_cyclotomic() const { return expsum_to_cyclotomic(p, N, l, t); }
  /// "t*g^r*p^l" with unit factors dropped, e.g. "-g^9*p^4" or "g".
  std::string exact() const;
  /// t * i^{(p-1)^2 r/4} * p^{r/2 + l}, r = N - l.
  std::complex<double> approx() const;
};

CyclotomicInt expsum_to_cyclotomic(const ExpSumValue& v);

struct EvalLimits {
  /// Largest degree at which the Gram-matrix route may be used as a base.
  std::uint64_t direct_limit = 256;
  /// Compare against a second route whenever one applies within direct_limit.
  bool cross_check = true;
};

struct PlanStep {
  StepKind kind = StepKind::Direct;
  std::uint64_t q = 0;
  unsigned s = 0;
  /// Degree after the step.
  std::uint64_t N = 0;
};

struct EvalPlan {
  std::uint64_t base_N = 0;
  std::vector<PlanStep> steps;
};

/// Strategy for S(f, m n); Unsupported when no route applies within limits.
EvalPlan plan(const QuadFunc& f, std::uint64_t m, const EvalLimits& limits = {});
ExpSumValue evaluate(const QuadFunc& f, std::uint64_t m, const EvalLimits& limits = {});

struct VerifyReport {
  bool equal = false;
  ExpSumValue value;
  CyclotomicInt closed_form;
  CyclotomicInt brute;
};

VerifyReport verify(const QuadFunc& f, std::uint64_t m, std::uint64_t cap = kDefaultBruteCap,
                    const EvalLimits& limits = {});

/// Prime factorization as (prime, exponent), increasing primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m);

}  // namespace expsum
