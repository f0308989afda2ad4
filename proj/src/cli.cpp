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
#include "expsum/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <sstream>

#include "expsum/evaluator.hpp"
#include "expsum/json_io.hpp"
#include "expsum/nullity.hpp"
#include "expsum/tabulate.hpp"

namespace expsum {

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Unsupported:
    case ErrorKind::NotApplicable:
    case ErrorKind::ConditionViolated:
    case ErrorKind::SearchBudgetExceeded:
    case ErrorKind::TooLarge:
      return kExitUnsupported;
    case ErrorKind::InternalInconsistency:
      return kExitInternal;
    default:
      return kExitInvalid;
  }
}

namespace {

struct FuncArgs {
  Residue p = 0;
  unsigned n = 1;
  std::string modulus;
  std::string coeffs;
  std::string alphas;
};

struct Options {
  FuncArgs fn;
  std::uint64_t m = 1;
  std::string b;
  std::string a;
  std::uint64_t alpha = 0;
  std::uint64_t N = 1;
  std::string format = "text";
  std::uint64_t cap = kDefaultBruteCap;
  unsigned jobs = 1;
  unsigned alpha_max = 0;
  std::string diff;
  std::uint64_t direct_limit = EvalLimits{}.direct_limit;
  bool no_cross_check = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t end = s.find(sep, pos);
    out.push_back(s.substr(pos, end == std::string::npos ? std::string::npos : end - pos));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s, const char* what) {
  std::vector<std::uint64_t> out;
  for (const auto& tok : split(s, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (tok.empty() || used != tok.size() || tok.front() == '-')
      throw Error(ErrorKind::InvalidInput, std::string("bad entry '") + tok + "' in " + what);
    out.push_back(v);
  }
  return out;
}

CtxPtr base_field(const FuncArgs& a) {
  std::optional<std::vector<Residue>> mod;
  if (!a.modulus.empty()) {
    if (a.n < 2) throw Error(ErrorKind::InvalidInput, "--modulus needs --n >= 2");
    std::vector<Residue> g;
    for (auto v : parse_u64_list(a.modulus, "--modulus")) {
      if (v >= a.p) throw Error(ErrorKind::InvalidInput, "modulus coefficient not below p");
      g.push_back(static_cast<Residue>(v));
    }
    mod = std::move(g);
  }
  if (a.n > 1 && !mod) return default_field(a.p, a.n);
  return FieldCtx::build(a.p, a.n, mod);
}

QuadFunc build_function(const FuncArgs& a) {
  if (a.coeffs.empty()) throw Error(ErrorKind::InvalidInput, "--coeffs is required");
  CtxPtr k = base_field(a);
  std::vector<FieldElem> cs;
  if (a.n == 1) {
    for (const auto& tok : split(a.coeffs, a.coeffs.find(';') != std::string::npos ? ';' : ','))
      cs.push_back(k->parse(tok));
  } else {
    for (const auto& tok : split(a.coeffs, ';')) {
      if (split(tok, ',').size() > a.n)
        throw Error(ErrorKind::InvalidInput, "coefficient '" + tok + "' has more than n residues");
      cs.push_back(k->parse(tok));
    }
  }
  if (a.alphas.empty()) return QuadFunc::from_dense(k, cs);
  auto al = parse_u64_list(a.alphas, "--alphas");
  if (al.size() != cs.size())
    throw Error(ErrorKind::InvalidInput, "--alphas has " + std::to_string(al.size()) + " entries but --coeffs has " +
                                             std::to_string(cs.size()));
  std::vector<Term> terms;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_zero()) throw Error(ErrorKind::ZeroCoefficient, "sparse coefficients must be nonzero");
    terms.push_back({cs[i], al[i]});
  }
  return QuadFunc::make(k, std::move(terms));
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw Error(ErrorKind::InvalidInput, "unsupported --format '" + f + "' for this subcommand");
}

std::string complex_text(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string step_text(const ProvenanceStep& s) {
  std::ostringstream os;
  os << std::left << std::setw(9) << step_name(s.kind);
  if (s.from_N && s.from_N != s.to_N) os << "N " << s.from_N << " -> " << s.to_N;
  else os << "N " << s.to_N;
  if (s.kind == StepKind::Monomial) os << " (alpha=" << s.q << ")";
  else if (s.q) os << " (q=" << s.q << ", s=" << s.s << ")";
  os << ": l=" << s.l << ", t=" << s.t;
  if (!s.note.empty()) os << " [" << s.note << "]";
  return os.str();
}

std::string modulus_text(const FieldCtx& k) {
  std::string s;
  for (std::size_t i = 0; i < k.modulus().size(); ++i) s += (i ? "," : "") + std::to_string(k.modulus()[i]);
  return s;
}

void print_value_text(std::ostream& out, const QuadFunc& f, std::uint64_t m, const ExpSumValue& v) {
  out << "f = " << f.describe() << "\n";
  out << "p = " << f.p() << ", n = " << f.n() << ", m = " << m << ", N = " << v.N << "\n";
  if (f.n() > 1) out << "modulus = " << modulus_text(*f.ctx()) << "\n";
  out << "t = " << v.t << "\n";
  out << "l = " << v.l << "\n";
  out << "value = " << v.exact() << "\n";
  out << "cyclotomic = " << v.to_cyclotomic().to_string() << "\n";
  out << "complex = " << complex_text(v.approx()) << "\n";
  out << "provenance:\n";
  for (const auto& s : v.provenance) out << "  " << step_text(s) << "\n";
}

ResultDoc result_doc(const QuadFunc& f, std::uint64_t m, ExpSumValue v) {
  ResultDoc d;
  d.p = f.p();
  d.n = f.n();
  d.m = m;
  if (f.n() > 1) d.modulus = f.ctx()->modulus();
  d.value = std::move(v);
  return d;
}

EvalLimits limits_of(const Options& o) {
  EvalLimits lim;
  lim.direct_limit = o.direct_limit;
  lim.cross_check = !o.no_cross_check;
  return lim;
}

int cmd_eval(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "json", "csv"});
  QuadFunc f = build_function(o.fn);
  ExpSumValue v = evaluate(f, o.m, limits_of(o));
  if (o.format == "json") out << to_json(result_doc(f, o.m, v)).dump(2) << "\n";
  else if (o.format == "csv")
    out << "p;n;m;N;l;t;value\n"
        << f.p() << ';' << f.n() << ';' << o.m << ';' << v.N << ';' << v.l << ';' << v.t << ';' << v.exact() << "\n";
  else print_value_text(out, f, o.m, v);
  return kExitOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "json", "csv"});
  QuadFunc f = build_function(o.fn);
  NullityProfile prof = nullity_profile(f);
  std::vector<std::pair<std::uint64_t, unsigned>> pairs(prof.entries.begin(), prof.entries.end());
  if (o.format == "json") {
    out << to_json(f, prof).dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "s;pairs\n" << prof.s << ';' << format_pairs(pairs) << "\n";
  } else {
    out << "f = " << f.describe() << "\n";
    if (f.n() > 1) out << "modulus = " << modulus_text(*f.ctx()) << "\n";
    out << "s = " << prof.s << "\n";
    out << "pairs = " << format_pairs(pairs) << "\n";
  }
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "json", "csv"});
  if (o.fn.p == 0) throw Error(ErrorKind::InvalidInput, "--p is required");
  FieldCtx::build(o.fn.p, 1);
  auto rows = generate_table(o.fn.p, o.alpha_max, std::max(1u, o.jobs));
  if (!o.diff.empty()) {
    DiffReport rep = diff_reference(rows, read_csv_file(o.diff));
    for (const auto& d : rep.diffs)
      out << "row " << d.row + 1 << " " << d.column << ": expected " << d.expected << ", got " << d.actual << "\n";
    out << (rep.empty() ? "OK: " : "FAIL: ") << rep.rows << " rows, " << rep.diffs.size() << " diffs\n";
    return rep.empty() ? kExitOk : kExitInternal;
  }
  if (o.format == "json") {
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(to_json(r));
    out << a.dump(2) << "\n";
  } else {
    write_csv(out, rows);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "json"});
  QuadFunc f = build_function(o.fn);
  VerifyReport r = verify(f, o.m, o.cap, limits_of(o));
  if (o.format == "json") {
    Json j = to_json(result_doc(f, o.m, r.value));
    j["brute_cyclotomic"] = to_json(r.brute);
    j["equal"] = r.equal;
    out << j.dump(2) << "\n";
  } else {
    out << "f = " << f.describe() << "\n";
    out << "N = " << r.value.N << "\n";
    out << "closed form = " << r.value.exact() << " = " << r.closed_form.to_string() << "\n";
    out << "brute force = " << r.brute.to_string() << "\n";
    out << (r.equal ? "exact-equal" : "MISMATCH") << "\n";
  }
  return r.equal ? kExitOk : kExitInternal;
}

int cmd_shift(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "json"});
  QuadFunc f = build_function(o.fn);
  if (o.b.empty()) throw Error(ErrorKind::InvalidInput, "--b is required");
  const std::uint64_t N = o.m * f.n();
  CtxPtr K = default_field(f.p(), static_cast<unsigned>(N));
  FieldElem b = K->parse(o.b);
  ExpSumValue v = evaluate(f, o.m, limits_of(o));
  ShiftedSum sh = shift_linear(f, b, N, v.state());
  CyclotomicInt val = shifted_value(sh);
  if (o.format == "json") {
    Json j;
    j["p"] = f.p();
    j["n"] = f.n();
    j["m"] = o.m;
    j["N"] = N;
    if (N > 1) j["field_modulus"] = K->modulus();
    j["b"] = b.coeffs;
    j["zero"] = sh.zero;
    if (!sh.zero) {
      j["phase"] = sh.phase;
      j["x0"] = sh.x0->coeffs;
      j["base"] = to_json(result_doc(f, o.m, v));
    }
    j["value_cyclotomic"] = to_json(val);
    out << j.dump(2) << "\n";
  } else {
    out << "f = " << f.describe() << "\n";
    out << "N = " << N << ", b = " << K->format(b) << "\n";
    if (N > 1) out << "field modulus = " << modulus_text(*K) << "\n";
    if (sh.zero) {
      out << "S(f + bx) = 0\n";
    } else {
      out << "x0 = " << K->format(*sh.x0) << "\n";
      out << "phase = " << sh.phase << "\n";
      out << "S(f + bx) = z^-" << sh.phase << " * (" << v.exact() << ")\n";
      out << "cyclotomic = " << val.to_string() << "\n";
    }
  }
  return kExitOk;
}

int cmd_monomial(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "json"});
  if (o.a.empty()) throw Error(ErrorKind::InvalidInput, "--a is required");
  if (o.N == 0 || o.N > 0xffffffffULL) throw Error(ErrorKind::InvalidInput, "--N out of range");
  CtxPtr K = default_field(o.fn.p, static_cast<unsigned>(o.N));
  FieldElem a = K->parse(o.a);
  MonomialResult r = monomial_eval(*K, a, o.alpha);
  ExpSumValue v;
  v.p = o.fn.p;
  v.N = o.N;
  v.l = r.state.l;
  v.t = r.state.t;
  static const char* cases[] = {"", "i", "ii", "iii"};
  if (o.format == "json") {
    Json j;
    j["p"] = o.fn.p;
    j["N"] = o.N;
    if (o.N > 1) j["field_modulus"] = K->modulus();
    j["a"] = a.coeffs;
    j["alpha"] = o.alpha;
    j["case"] = cases[r.case_id];
    j["l"] = v.l;
    j["t"] = v.t;
    j["value_exact"] = v.exact();
    if (r.integer_value) j["value_integer"] = bigint_to_json(*r.integer_value);
    j["value_cyclotomic"] = to_json(v.to_cyclotomic());
    out << j.dump(2) << "\n";
  } else {
    out << "a = " << K->format(a) << ", alpha = " << o.alpha << ", N = " << o.N << "\n";
    if (o.N > 1) out << "field modulus = " << modulus_text(*K) << "\n";
    out << "case (" << cases[r.case_id] << ")\n";
    out << "t = " << v.t << ", l = " << v.l << "\n";
    out << "value = " << (r.integer_value ? r.integer_value->get_str() : v.exact()) << "\n";
    out << "cyclotomic = " << v.to_cyclotomic().to_string() << "\n";
  }
  return kExitOk;
}

void add_function_options(CLI::App* sub, Options& o) {
  sub->add_option("--p", o.fn.p, "odd prime characteristic")->required();
  sub->add_option("--n", o.fn.n, "degree of the coefficient field over F_p");
  sub->add_option("--modulus", o.fn.modulus, "monic modulus c0,...,cn of the coefficient field");
  sub->add_option("--coeffs", o.fn.coeffs,
                  "coefficients a0,...,ak; for n > 1 residue vectors separated by ';'")
      ->required();
  sub->add_option("--alphas", o.fn.alphas, "exponents alpha_i for sparse input");
}

void add_limit_options(CLI::App* sub, Options& o) {
  sub->add_option("--direct-limit", o.direct_limit, "largest degree handled by the Gram-matrix route");
  sub->add_flag("--no-cross-check", o.no_cross_check, "skip the second evaluation route");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact exponential sums of quadratic functions over finite fields", "expsum"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "evaluate S(f, mn)");
  add_function_options(eval, o);
  eval->add_option("--m", o.m, "multiplier of the base degree");
  eval->add_option("--format", o.format, "text, json or csv");
  add_limit_options(eval, o);

  auto* profile = app.add_subcommand("profile", "splitting exponent and nullity profile");
  add_function_options(profile, o);
  profile->add_option("--format", o.format, "text, json or csv");

  auto* table = app.add_subcommand("table", "nullity table over F_p");
  table->add_option("--p", o.fn.p, "odd prime")->required();
  table->add_option("--alpha-max", o.alpha_max, "largest exponent")->required();
  table->add_option("--jobs", o.jobs, "worker threads");
  table->add_option("--diff", o.diff, "reference CSV to compare against");
  table->add_option("--format", o.format, "csv or json");

  auto* ver = app.add_subcommand("verify", "compare the closed form with brute force");
  add_function_options(ver, o);
  ver->add_option("--m", o.m, "multiplier of the base degree");
  ver->add_option("--cap", o.cap, "largest field size for brute force");
  ver->add_option("--format", o.format, "text or json");
  add_limit_options(ver, o);

  auto* shift = app.add_subcommand("shift", "S(f + bx, mn) from S(f, mn)");
  add_function_options(shift, o);
  shift->add_option("--m", o.m, "multiplier of the base degree");
  shift->add_option("--b", o.b, "linear coefficient in the default field of degree mn");
  shift->add_option("--format", o.format, "text or json");
  add_limit_options(shift, o);

  auto* mono = app.add_subcommand("monomial", "closed form for S(a x^{p^alpha+1}, N)");
  mono->add_option("--p", o.fn.p, "odd prime")->required();
  mono->add_option("--a", o.a, "coefficient in the default field of degree N")->required();
  mono->add_option("--alpha", o.alpha, "exponent alpha")->required();
  mono->add_option("--N", o.N, "field degree")->required();
  mono->add_option("--format", o.format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (table->parsed()) {
      if (o.format == "text") o.format = "csv";
      return cmd_table(o, out);
    }
    if (eval->parsed()) return cmd_eval(o, out);
    if (profile->parsed()) return cmd_profile(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (shift->parsed()) return cmd_shift(o, out);
    if (mono->parsed()) {
      FieldCtx::build(o.fn.p, 1);
      return cmd_monomial(o, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalid;
}

}  // namespace expsum
