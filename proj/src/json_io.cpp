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
#include "expsum/json_io.hpp"

namespace expsum {

Json bigint_to_json(const BigInt& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (mpz_set_str(v.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
      throw Error(ErrorKind::InvalidInput, "bad decimal integer '" + j.get<std::string>() + "'");
    return v;
  }
  throw Error(ErrorKind::InvalidInput, "expected an integer or decimal string");
}

Json to_json(const CyclotomicInt& c) {
  Json a = Json::array();
  for (const auto& x : c.coords()) a.push_back(bigint_to_json(x));
  return a;
}

Json coeffs_to_json(const QuadFunc& f) {
  Json a = Json::array();
  for (const auto& t : f.terms()) {
    if (f.n() == 1) a.push_back(t.a.coeffs[0]);
    else a.push_back(t.a.coeffs);
  }
  return a;
}

namespace {

Json step_to_json(const ProvenanceStep& s) {
  Json j;
  j["step"] = std::string(step_name(s.kind));
  j["from_N"] = s.from_N;
  j["to_N"] = s.to_N;
  if (s.q) j["q"] = s.q;
  if (s.s) j["s"] = s.s;
  j["l"] = s.l;
  j["t"] = s.t;
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

ProvenanceStep step_from_json(const Json& j) {
  ProvenanceStep s;
  const std::string name = j.at("step").get<std::string>();
  for (StepKind k : {StepKind::Direct, StepKind::PLift, StepKind::TwoLift, StepKind::OddLift, StepKind::Balanced,
                     StepKind::Monomial})
    if (step_name(k) == name) s.kind = k;
  s.from_N = j.at("from_N").get<std::uint64_t>();
  s.to_N = j.at("to_N").get<std::uint64_t>();
  s.q = j.value("q", std::uint64_t{0});
  s.s = j.value("s", 0u);
  s.l = j.at("l").get<unsigned>();
  s.t = j.at("t").get<int>();
  s.note = j.value("note", std::string{});
  return s;
}

}  // namespace

Json to_json(const ResultDoc& r) {
  const ExpSumValue& v = r.value;
  Json j;
  j["p"] = r.p;
  j["n"] = r.n;
  if (!r.modulus.empty()) j["modulus"] = r.modulus;
  j["m"] = r.m;
  j["N"] = v.N;
  j["l"] = v.l;
  j["t"] = v.t;
  j["value_exact"] = v.exact();
  j["value_cyclotomic"] = to_json(v.to_cyclotomic());
  auto z = v.approx();
  j["value_complex"] = {z.real(), z.imag()};
  Json prov = Json::array();
  for (const auto& s : v.provenance) prov.push_back(step_to_json(s));
  j["provenance"] = prov;
  return j;
}

ResultDoc result_from_json(const Json& j) {
  ResultDoc r;
  r.p = j.at("p").get<Residue>();
  r.n = j.at("n").get<unsigned>();
  r.m = j.at("m").get<std::uint64_t>();
  if (j.contains("modulus")) r.modulus = j.at("modulus").get<std::vector<Residue>>();
  r.value.p = r.p;
  r.value.N = j.at("N").get<std::uint64_t>();
  r.value.l = j.at("l").get<unsigned>();
  r.value.t = j.at("t").get<int>();
  for (const auto& s : j.at("provenance")) r.value.provenance.push_back(step_from_json(s));
  if (r.value.exact() != j.at("value_exact").get<std::string>())
    throw Error(ErrorKind::InvalidInput, "value_exact inconsistent with (N, l, t)");
  return r;
}

Json to_json(const QuadFunc& f, const NullityProfile& prof) {
  Json j;
  j["p"] = prof.p;
  j["n"] = prof.n;
  if (f.n() > 1) j["modulus"] = f.ctx()->modulus();
  j["coeffs"] = coeffs_to_json(f);
  Json al = Json::array();
  for (const auto& t : f.terms()) al.push_back(t.alpha);
  j["alphas"] = al;
  j["s"] = prof.s;
  Json e = Json::array();
  for (auto [m, l] : prof.entries) e.push_back({m, l});
  j["entries"] = e;
  return j;
}

NullityProfile profile_from_json(const Json& j) {
  NullityProfile prof;
  prof.p = j.at("p").get<Residue>();
  prof.n = j.at("n").get<unsigned>();
  prof.s = j.at("s").get<std::uint64_t>();
  const auto& al = j.at("alphas");
  prof.alpha = al.empty() ? 0 : al.back().get<std::uint64_t>();
  for (const auto& e : j.at("entries")) prof.entries[e.at(0).get<std::uint64_t>()] = e.at(1).get<unsigned>();
  return prof;
}

Json to_json(const TableRow& r) {
  Json j;
  j["coeffs"] = r.coeffs;
  j["s"] = r.s;
  Json e = Json::array();
  for (auto [m, l] : r.pairs) e.push_back({m, l});
  j["pairs"] = e;
  return j;
}

TableRow row_from_json(const Json& j) {
  TableRow r;
  r.coeffs = j.at("coeffs").get<std::vector<Residue>>();
  r.s = j.at("s").get<std::uint64_t>();
  for (const auto& e : j.at("pairs")) r.pairs.push_back({e.at(0).get<std::uint64_t>(), e.at(1).get<unsigned>()});
  return r;
}

}  // namespace expsum
