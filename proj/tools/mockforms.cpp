// mockforms: command-line front end to the identity catalogue.
//
// Exit codes: 0 pass, 1 fail, 2 usage or error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mockforms/functions.hpp"
#include "mockforms/registry.hpp"

using namespace mockforms;
using cplx = std::complex<double>;

namespace {

constexpr int PASS = 0, FAIL = 1, USAGE = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ExpRational parse_rational(const std::string& flag, const std::string& v) {
  try {
    return ExpRational::parse(v);
  } catch (const Error&) {
    throw Usage(flag + ": expected an integer or a/b rational, got '" + v + "'");
  }
}

// --qmax, else MOCKFORMS_DEFAULT_QMAX, else the given fallback
std::optional<ExpRational> qmax_or_env(const std::string& flag, std::optional<ExpRational> fallback) {
  if (!flag.empty()) return parse_rational("--qmax", flag);
  if (const char* env = std::getenv("MOCKFORMS_DEFAULT_QMAX")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v <= 0)
      throw Usage(std::string("MOCKFORMS_DEFAULT_QMAX must be a positive integer, got '") + env + "'");
    return ExpRational(v);
  }
  return fallback;
}

cplx parse_complex(const std::string& flag, const std::string& v) {
  std::istringstream in(v);
  double re = 0, im = 0;
  char comma = 0;
  if (!(in >> re >> comma >> im) || comma != ',' || !in.eof())
    throw Usage(flag + ": expected re,im (e.g. 0.1,0.9), got '" + v + "'");
  return {re, im};
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Usage("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string params_text(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ", ") + k + "=" + v;
  return "{" + s + "}";
}

std::string fmt(double v) {
  std::ostringstream o;
  o << std::setprecision(3) << v;
  return o.str();
}

void print_report(const Report& r) {
  std::string verdict = r.status == "pass" ? "PASS" : r.status == "fail" ? "FAIL" : "ERROR";
  std::cout << r.id << " " << params_text(r.params) << " [" << r.mode << "]";
  if (r.trunc) std::cout << " trunc " << r.trunc->str();
  std::cout << ": " << verdict;
  if (r.expect == "fail") std::cout << " (mutant, expected to fail)";
  std::cout << "\n";
  if (r.residual) std::cout << "  residual " << fmt(*r.residual) << " (tol " << fmt(r.tol.value_or(0)) << ", seed " << r.seed.value_or(0) << ")\n";
  if (!r.witness.is_null()) std::cout << "  witness " << r.witness.dump() << "\n";
  if (!r.error.empty()) std::cout << "  " << r.error << "\n";
}

int exit_for(const std::string& status) { return status == "pass" ? PASS : status == "fail" ? FAIL : USAGE; }

// ------------------------------------------------------------------ list

int cmd_list(bool all, const std::string& json) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : catalogue()) {
    if (!e.enabled && !all) continue;
    nlohmann::json dom = nlohmann::json::object();
    for (const auto& d : e.domain) dom[d.key] = d.allowed;
    out.push_back({{"id", e.id}, {"mode", e.mode}, {"enabled", e.enabled}, {"params", dom}, {"summary", e.summary}});
    std::cout << std::left << std::setw(20) << e.id << std::setw(10) << e.mode;
    for (const auto& d : e.domain) {
      std::string vals;
      for (const auto& v : d.allowed) vals += (vals.empty() ? "" : ",") + v;
      std::cout << d.key << "=" << vals << "  ";
    }
    if (!e.valid_text.empty()) std::cout << "(" << e.valid_text << ")  ";
    if (!e.enabled) std::cout << "[disabled]";
    std::cout << "\n    " << e.summary << "\n";
  }
  if (!json.empty()) write_json(json, out);
  return PASS;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string id, qmax, json, mode;
  std::map<std::string, std::string> flags;  // m s p a n
  std::vector<std::string> extra;            // key=value
  std::optional<int> points;
  std::optional<double> tol;
  std::string guard = "4";
  std::uint64_t seed = 7;
  bool mutate = false;
};

Params collect_params(const std::map<std::string, std::string>& flags, const std::vector<std::string>& extra) {
  Params p;
  for (const auto& [k, v] : flags)
    if (!v.empty()) p[k] = v;
  for (const auto& kv : extra) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw Usage("--param expects key=value, got '" + kv + "'");
    p[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return p;
}

int cmd_verify(const VerifyArgs& a) {
  std::string base = a.id;
  if (base.size() > 4 && base.substr(base.size() - 4) == "~MUT") base.resize(base.size() - 4);
  const CatalogEntry& e = find_case(base);
  Params p = collect_params(a.flags, a.extra);
  if (!a.mode.empty()) p["mode"] = a.mode;
  resolve_params(e, p);  // range errors surface here, before any work
  if ((a.mutate || base != a.id) && !e.has_mutation) throw InvalidParams(e.id + " has no mutation variant");

  RunOptions opt;
  opt.trunc = qmax_or_env(a.qmax, std::nullopt);
  opt.guard = parse_rational("--guard", a.guard);
  opt.points = a.points;
  opt.tol = a.tol;
  opt.seed = a.seed;
  if (a.points && *a.points <= 0) throw Usage("--points must be positive");
  if (a.tol && !(*a.tol > 0)) throw Usage("--tol must be positive");

  Report r = run_case(a.id, p, opt, a.mutate);
  print_report(r);
  if (!a.json.empty()) write_json(a.json, to_json(r));
  return exit_for(r.status);
}

// ------------------------------------------------------------------ expand / eval

const std::vector<std::string>& function_flags() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& fn : function_names())
      for (const auto& [key, _] : function_defaults(fn))
        if (std::find(k.begin(), k.end(), key) == k.end()) k.push_back(key);
    return k;
  }();
  return keys;
}

FunctionSpec spec_from(const std::string& fn, const std::map<std::string, std::string>& flags) {
  FunctionSpec s{fn, {}};
  for (const auto& [k, v] : flags)
    if (!v.empty()) s.args[k] = v;
  return normalise(s);
}

std::string spec_text(const FunctionSpec& s) {
  std::string t;
  for (const auto& [k, v] : s.args) t += (t.empty() ? "" : ", ") + k + "=" + v;
  return s.fn + "(" + t + ")";
}

int cmd_expand(const std::string& fn, const std::map<std::string, std::string>& flags, const std::string& qmax,
               const std::string& json) {
  FunctionSpec s = spec_from(fn, flags);
  ExpRational T = *qmax_or_env(qmax, ExpRational(10));
  QXSeries f = expand_function(s, T);
  std::cout << spec_text(s) << " to q^" << T.str() << "\n" << format_series(f, 40) << "\n";
  if (!json.empty()) write_json(json, to_json(f));
  return PASS;
}

int cmd_eval(const std::string& fn, const std::map<std::string, std::string>& flags, const std::string& qmax,
             const std::string& tau_s, const std::string& z_s, double tol) {
  FunctionSpec s = spec_from(fn, flags);
  cplx tau = parse_complex("--tau", tau_s), z = parse_complex("--z", z_s);
  if (tau.imag() <= 0) throw Usage("--tau needs a positive imaginary part");
  ExpRational T = *qmax_or_env(qmax, ExpRational(30));
  cplx direct = evaluate_function(s, tau, z);
  cplx series = evaluate(expand_function(s, T), tau, z);
  double res = std::abs(direct - series) / (1 + std::max(std::abs(direct), std::abs(series)));
  std::cout << std::setprecision(15) << spec_text(s) << " at tau=" << tau << ", z=" << z << "\n"
            << "  direct sum   " << direct << "\n"
            << "  series q^" << T.str() << " " << series << "\n"
            << std::setprecision(3) << "  residual     " << res << " (tol " << tol << ")\n";
  return res < tol ? PASS : FAIL;
}

// ------------------------------------------------------------------ spans

struct SpansArgs {
  std::string space = "V", s, parity, qmax, guard = "4", op = "dim", json;
  long m = 0;
  std::uint64_t seed = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<QXSeries> build_space(const std::string& space, long m, const ExpRational& s, Parity parity,
                                  const ExpRational& T) {
  if (space == "Theta") return build_Theta(m, parity, T);
  if (space == "V") return build_V(m, s, T);
  if (space == "U") return build_U(m, s, T);
  if (space == "CHnum") return concat(build_V(m, 0, T), build_V(m, ExpRational(1, 2), T));
  throw Usage("--space must be Theta, V, U or CHnum, got '" + space + "'");
}

// quotients lose a little precision; build until every generator is known to T
std::vector<QXSeries> space_to(const std::string& space, long m, const ExpRational& s, Parity parity,
                               const ExpRational& T) {
  ExpRational inner = T;
  for (int round = 0; round < 8; ++round) {
    auto gens = build_space(space, m, s, parity, inner);
    ExpRational low = T;
    for (const auto& g : gens)
      if (g.trunc() && *g.trunc() < low) low = *g.trunc();
    if (low >= T) return gens;
    inner = inner + (T - low) + 1;
  }
  throw InsufficientPrecision("could not build " + space + " to q^" + T.str());
}

int rank_unstable(const Error& e) {
  std::cout << "FAIL: " << e.what() << "\n  the truncation is too low to settle this; raise --qmax\n";
  return FAIL;
}

int cmd_spans(const SpansArgs& a) {
  if (a.m <= 0) throw Usage("--m must be a positive integer");
  SpanOptions opt;
  opt.trunc = *qmax_or_env(a.qmax, ExpRational(12));
  opt.guard = parse_rational("--guard", a.guard);
  opt.seed = a.seed;
  if (opt.guard.sign() < 0 || opt.guard >= opt.trunc) throw Usage("--guard must lie in [0, qmax)");
  const ExpRational s = a.s.empty() ? ExpRational(0) : parse_rational("--s", a.s);
  if (s != ExpRational(0) && s != ExpRational(1, 2)) throw Usage("--s must be 0 or 1/2");
  Parity parity = Parity::all;
  if (!a.parity.empty()) {
    try {
      parity = parse_parity(a.parity);
    } catch (const Error&) {
      throw Usage("--parity must be all, even or odd");
    }
  }
  auto spaces = split(a.space, ',');
  nlohmann::json rep{{"op", a.op}, {"space", a.space}, {"m", a.m}, {"trunc", opt.trunc.str()}, {"guard", opt.guard.str()}};
  int code = PASS;

  try {
    if (a.op == "dim") {
      if (spaces.size() != 1) throw Usage("--op dim takes one --space");
      auto gens = space_to(spaces[0], a.m, s, parity, opt.trunc);
      RankReport rr = rank_report(gens, opt);
      rep["generators"] = gens.size();
      rep["ranks"] = {rr.rank, rr.rank_guarded, rr.rank_random};
      std::cout << "ranks: elimination " << rr.rank << ", guarded " << rr.rank_guarded << ", random substitution "
                << rr.rank_random << " (" << gens.size() << " generators)\n";
      std::size_t d = span_dim(gens, opt);
      rep["dim"] = d;
      std::cout << "dim " << d << "\n";
    } else if (a.op == "equal") {
      if (spaces.size() != 2) throw Usage("--op equal takes two spaces, e.g. --space V,U");
      auto A = space_to(spaces[0], a.m, s, parity, opt.trunc), B = space_to(spaces[1], a.m, s, parity, opt.trunc);
      SpanVerdict v = span_equal(A, B, opt);
      rep["status"] = v.pass ? "pass" : "fail";
      nlohmann::json fails = nlohmann::json::array();
      for (const auto& f : v.failures) {
        nlohmann::json w{{"side", std::string(1, f.side)}, {"index", f.index}};
        if (f.certificate) w["certificate"] = {{"x", f.certificate->x.str()}, {"q", f.certificate->q.str()}};
        fails.push_back(w);
        std::cout << "  generator " << f.index << " of " << spaces[f.side == 'A' ? 0 : 1] << " is not in span "
                  << spaces[f.side == 'A' ? 1 : 0];
        if (f.certificate) std::cout << " (first mismatch at x^" << f.certificate->x.str() << " q^" << f.certificate->q.str() << ")";
        std::cout << "\n";
      }
      rep["failures"] = fails;
      ExpRational verified = opt.trunc;
      for (const auto* side : {&v.a_in_b, &v.b_in_a})
        for (const auto& d : *side)
          if (d.in_span && d.verified_to < verified) verified = d.verified_to;
      std::cout << "span " << spaces[0] << " = span " << spaces[1] << ": " << (v.pass ? "PASS" : "FAIL");
      if (v.pass) std::cout << " (every decomposition verified to q^" << verified.str() << ")";
      std::cout << "\n";
      code = v.pass ? PASS : FAIL;
    } else if (a.op == "tower") {
      static const std::map<std::string, std::string> ids{{"V", "V-TOWER"}, {"Theta", "THETA-TOWER"}, {"CHnum", "CH-TOWER"}};
      auto it = ids.find(a.space);
      if (it == ids.end()) throw Usage("--op tower works on --space V, Theta or CHnum");
      RunOptions ro;
      ro.trunc = opt.trunc;
      ro.guard = opt.guard;
      Report r = run_case(it->second, {{"m", std::to_string(a.m)}}, ro);
      print_report(r);
      rep = to_json(r);
      code = exit_for(r.status);
    } else {
      throw Usage("--op must be dim, equal or tower");
    }
  } catch (const RankUnstable& e) {
    rep["status"] = "fail";
    rep["error"] = e.what();
    code = rank_unstable(e);
  } catch (const InsufficientPrecision& e) {
    rep["status"] = "fail";
    rep["error"] = e.what();
    code = rank_unstable(e);
  }
  if (!a.json.empty()) write_json(a.json, rep);
  return code;
}

// ------------------------------------------------------------------ suite

int cmd_suite(const std::string& filter, const std::vector<std::string>& only, const std::string& qmax, unsigned jobs,
              std::uint64_t seed, const std::string& json, bool timing) {
  SuiteFilter f;
  f.glob = filter;
  for (const auto& kv : only) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw Usage("--only expects key=v1,v2,..., got '" + kv + "'");
    std::vector<std::string> vals;
    for (const auto& v : split(kv.substr(eq + 1), ',')) vals.push_back(parse_rational("--only", v).str());
    f.only[kv.substr(0, eq)] = vals;
  }
  RunOptions opt;
  opt.trunc = qmax_or_env(qmax, std::nullopt);
  opt.seed = seed;
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  SuiteSummary s = run_suite(f, opt, jobs);
  for (const auto& r : s.cases)
    if (r.status != "pass") print_report(r);
  std::cout << "total " << s.total << ": pass " << s.pass << ", fail " << s.fail << ", error " << s.error << "\n";
  if (!json.empty()) write_json(json, to_json(s, timing));
  return s.fail == 0 && s.error == 0 ? PASS : FAIL;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify mock theta identities, expand theta/eta/Phi series and analyse their spans."};
  app.require_subcommand(1);

  bool list_all = false;
  std::string list_json;
  auto* list = app.add_subcommand("list", "List the identity catalogue");
  list->add_flag("--all", list_all, "Include disabled entries");
  list->add_option("--json", list_json, "Write the catalogue as JSON (- for stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run one identity");
  verify->add_option("--id", va.id, "Catalogue id (append ~MUT for the mutant)")->required();
  for (const char* k : {"m", "s", "p", "a", "n"}) verify->add_option(std::string("--") + k, va.flags[k], "Parameter " + std::string(k));
  verify->add_option("--mode", va.mode, "symbolic or numeric, where the case offers both");
  verify->add_option("--param", va.extra, "Other parameters as key=value (sign, part, ...)");
  verify->add_option("--qmax", va.qmax, "Truncation order (symbolic / spans)");
  verify->add_option("--guard", va.guard, "Guard orders for span checks");
  verify->add_option("--points", va.points, "Numeric sample points");
  verify->add_option("--tol", va.tol, "Numeric tolerance");
  verify->add_option("--seed", va.seed, "Sampling seed");
  verify->add_flag("--mutate", va.mutate, "Run the built-in mutant");
  verify->add_option("--json", va.json, "Write the report (- for stdout)");

  std::string fn, fn_qmax, fn_json, tau = "0,1", z = "0.1,0.05";
  double eval_tol = 1e-8;
  std::map<std::string, std::string> fn_flags;
  auto* expand = app.add_subcommand("expand", "Expand a function as a q-series");
  auto* eval = app.add_subcommand("eval", "Evaluate a function numerically and against its series");
  for (auto* cmd : {expand, eval}) {
    cmd->add_option("--fn", fn, "theta, eta, vartheta, phi or numerator")->required();
    for (const auto& k : function_flags()) cmd->add_option("--" + k, fn_flags[k]);
    cmd->add_option("--qmax", fn_qmax, "Truncation order");
  }
  expand->add_option("--json", fn_json, "Write the series (- for stdout)");
  eval->add_option("--tau", tau, "tau as re,im");
  eval->add_option("--z", z, "z as re,im");
  eval->add_option("--tol", eval_tol, "Agreement tolerance");

  SpansArgs sa;
  auto* spans = app.add_subcommand("spans", "Dimension and equality of generator spans");
  spans->add_option("--space", sa.space, "Theta, V, U or CHnum; two comma-separated for --op equal");
  spans->add_option("--m", sa.m, "Level")->required();
  spans->add_option("--s", sa.s, "0 or 1/2 (V, U)");
  spans->add_option("--parity", sa.parity, "all, even or odd (Theta)");
  spans->add_option("--qmax", sa.qmax, "Truncation order");
  spans->add_option("--guard", sa.guard, "Guard orders");
  spans->add_option("--op", sa.op, "dim, equal or tower");
  spans->add_option("--seed", sa.seed, "Seed for the random-substitution rank");
  spans->add_option("--json", sa.json, "Write the result (- for stdout)");

  std::string filter = "*", suite_qmax, suite_json;
  std::vector<std::string> only;
  unsigned jobs = 1;
  std::uint64_t suite_seed = 7;
  bool no_timing = false;
  auto* suite = app.add_subcommand("suite", "Run the default sweep of the catalogue");
  suite->add_option("--filter", filter, "Id glob, e.g. 'NUM-*'");
  suite->add_option("--only", only, "Restrict a parameter sweep: key=v1,v2");
  suite->add_option("--qmax", suite_qmax, "Override every case's truncation");
  suite->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  suite->add_option("--seed", suite_seed, "Sampling seed");
  suite->add_option("--json", suite_json, "Write the summary (- for stdout)");
  suite->add_flag("--no-timing", no_timing, "Omit millis from the JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return USAGE;
  }

  try {
    if (*list) return cmd_list(list_all, list_json);
    if (*verify) return cmd_verify(va);
    if (*expand) return cmd_expand(fn, fn_flags, fn_qmax, fn_json);
    if (*eval) return cmd_eval(fn, fn_flags, fn_qmax, tau, z, eval_tol);
    if (*spans) return cmd_spans(sa);
    if (*suite) return cmd_suite(filter, only, suite_qmax, jobs, suite_seed, suite_json, !no_timing);
  } catch (const UnknownIdentity& e) {
    std::cerr << "error: " << e.what() << " (see 'mockforms list')\n";
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return USAGE;
}
