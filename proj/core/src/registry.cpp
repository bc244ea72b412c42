#include "mockforms/registry.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "cases.hpp"

namespace mockforms {

namespace cases {

ExpRational rat(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw InvalidParams("missing parameter " + key);
  return ExpRational::parse(it->second);
}

long integer(const Params& p, const std::string& key) {
  ExpRational v = rat(p, key);
  if (!v.is_integer()) throw InvalidParams(key + " must be an integer");
  return v.floor_long();
}

SignVariant sign_of(const Params& p, const std::string& key) {
  auto it = p.find(key);
  return it == p.end() ? SignVariant::plus : parse_sign_variant(it->second);
}

std::vector<std::string> int_range(long lo, long hi) {
  std::vector<std::string> out;
  for (long i = lo; i <= hi; ++i) out.push_back(std::to_string(i));
  return out;
}

ParamDomain dom(std::string key, std::vector<std::string> allowed, std::vector<std::string> suite) {
  if (suite.empty()) suite = allowed;
  return {std::move(key), std::move(allowed), std::move(suite)};
}

nlohmann::json witness_json(const Discrepancy& d) {
  return {{"q", d.q.str()}, {"x", d.x.str()}, {"lhs", cyc_to_json(d.lhs)}, {"rhs", cyc_to_json(d.rhs)}};
}

Outcome compare_symbolic(const SidesBuilder& build, const ExpRational& Q) {
  ExpRational inner = Q;
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto [L, R] = build(inner);
    ExpRational have = Q;
    for (const QXSeries* s : {&L, &R})
      if (s->trunc() && *s->trunc() < have) have = *s->trunc();
    if (have >= Q) {
      EqualityVerdict v = equal_up_to(L, R, Q);
      Outcome out;
      out.pass = v.pass;
      if (v.witness) out.witness = witness_json(*v.witness);
      out.trunc = Q;
      return out;
    }
    inner = inner + (Q - have) + 1;
  }
  throw InsufficientPrecision("could not reach q^" + Q.str() + " on both sides");
}

Outcome compare_symbolic_items(const std::vector<std::pair<std::string, SidesBuilder>>& items, const ExpRational& Q) {
  Outcome out;
  out.pass = true;
  out.trunc = Q;
  for (const auto& [label, build] : items) {
    Outcome o = compare_symbolic(build, Q);
    if (!o.pass) {
      o.witness["item"] = label;
      return o;
    }
  }
  return out;
}

QXSeries mono(const QXSeries& f, const CycNumber& c, const ExpRational& a, const ExpRational& b) {
  return mono_scale(f, c, a, b);
}

CycNumber ep(const ExpRational& r) { return root_of_unity(frac(r)); }

QXSeries th(const ExpRational& j, const ExpRational& M, const ExpRational& T, SignVariant sign, const AffineArg& arg,
            long K) {
  ThetaSpec spec;
  spec.j = j;
  spec.M = M;
  spec.sign = sign;
  spec.K = K;
  spec.arg = arg;
  return theta(spec, T);
}

QXSeries th0(const ExpRational& j, const ExpRational& M, SignVariant sign, const ExpRational& T) {
  ThetaSpec spec;
  spec.j = j;
  spec.M = M;
  spec.sign = sign;
  spec.arg = AffineArg::zero();
  return theta_at_zero(spec, T);
}

QXSeries quotient(const QXSeries& num, const QXSeries& den, const ExpRational& T) {
  return mul(num, invert_unit(den, T));
}

double scale_free(cplx a, cplx b) { return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b))); }

nlohmann::json cj(cplx v) { return nlohmann::json::array({v.real(), v.imag()}); }

Outcome compare_numeric(const NumericSample& sample, int points, double tol, std::uint64_t seed) {
  if (points <= 0) throw InvalidParams("points must be positive");
  Sampler S(seed);
  Outcome out;
  double worst = -1;
  for (int i = 0; i < points; ++i) {
    std::optional<Sample> got;
    for (int attempt = 0; attempt < 50 && !got; ++attempt) {
      try {
        got = sample(S);
      } catch (const NearPole&) {
      }
    }
    if (!got) throw NearPole("could not find a pole-free sample point");
    double r = scale_free(got->lhs, got->rhs);
    if (!std::isfinite(r)) r = INFINITY;
    if (r > worst) {
      worst = r;
      out.witness = got->point;
      out.witness["lhs"] = cj(got->lhs);
      out.witness["rhs"] = cj(got->rhs);
      out.witness["index"] = i;
    }
  }
  out.residual = worst;
  out.pass = worst < tol;
  out.tol = tol;
  out.seed = seed;
  return out;
}

cplx bilateral(const std::function<cplx(long)>& f, double eps) {
  cplx acc = f(0);
  int small = 0;
  for (long j = 1;; ++j) {
    cplx a = f(j), b = f(-j);
    acc += a + b;
    if (std::abs(a) + std::abs(b) < eps * (1.0 + std::abs(acc))) {
      if (++small >= 2 && j >= 6) break;
    } else {
      small = 0;
    }
    if (j > 400) throw InsufficientPrecision("outer sum does not converge");
  }
  return acc;
}

std::optional<nlohmann::json> verdict_witness(const SpanVerdict& v) {
  if (v.pass) return std::nullopt;
  nlohmann::json w = nlohmann::json::object();
  if (!v.failures.empty()) {
    const SpanFailure& f = v.failures.front();
    w["side"] = std::string(1, f.side);
    w["index"] = f.index;
    if (f.certificate) {
      w["x"] = f.certificate->x.str();
      w["q"] = f.certificate->q.str();
    }
  }
  return w;
}

Outcome run_span_checks(const std::vector<SpanCheck>& checks, const SpanOptions& opt) {
  Outcome out;
  out.pass = true;
  out.trunc = opt.trunc;
  for (const auto& c : checks) {
    auto w = c.run(opt);
    if (w) {
      out.pass = false;
      out.witness = *w;
      out.witness["check"] = c.label;
      return out;
    }
  }
  return out;
}

std::vector<QXSeries> at_least(const std::function<std::vector<QXSeries>(const ExpRational&)>& build,
                               const ExpRational& T) {
  ExpRational inner = T;
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto gens = build(inner);
    ExpRational have = T;
    for (const auto& g : gens)
      if (g.trunc() && *g.trunc() < have) have = *g.trunc();
    if (have >= T) return gens;
    inner = inner + (T - have) + 1;
  }
  throw InsufficientPrecision("generators could not be built to q^" + T.str());
}

SpanOptions span_options(const RunOptions& o) {
  SpanOptions s;
  s.trunc = o.trunc.value_or(ExpRational(12));
  s.guard = o.guard;
  s.seed = o.seed;
  return s;
}

}  // namespace cases

namespace {

// Catalogue order; suite reports follow it.
const std::vector<std::string> ORDER{
    "KP",          "OSP-DENOM",   "OSP-DENOM-I", "THETA-SHIFT-A", "THETA-SHIFT-B", "THETA-SHIFT-B-NEG",
    "THETA-SHIFT-C", "F-REARR-0", "F-REARR-H",   "SUMDIFF-0",     "SUMDIFF-H",     "PHI0-EXPL",
    "PHIH-EXPL",   "SPEC-0",      "SPEC-H",      "SHIFT-A",       "SHIFT-T8",      "NUM-0",
    "NUM-H",       "THETA-CLOSE", "THETA-EVAL",  "THETA-EVAL-2I-R1", "THETA-EVAL-2I-R2", "THETA-TOWER",
    "VU-EQ",       "QUOT-PINDEP", "QUOT-CLOSE",  "V-TOWER",       "CH-TOWER",      "CH-PROD",
    "CH-MONO",     "DIM-TABLE"};

std::vector<CatalogEntry> build_catalogue() {
  std::vector<CatalogEntry> all;
  cases::add_numeric(all);
  cases::add_symbolic(all);
  cases::add_spans(all);
  auto rank = [](const std::string& id) {
    auto it = std::find(ORDER.begin(), ORDER.end(), id);
    return it - ORDER.begin();
  };
  std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return rank(a.id) < rank(b.id); });
  return all;
}

std::string normalise(const std::string& v) {
  try {
    return ExpRational::parse(v).str();
  } catch (const ParseError&) {
    return v;
  }
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

RunOptions effective(const CatalogEntry& e, const RunOptions& o) {
  RunOptions r = o;
  if (!r.trunc) r.trunc = e.trunc;
  if (!r.points) r.points = e.points;
  if (!r.tol) r.tol = e.tol;
  return r;
}

constexpr const char* MUT = "~MUT";

}  // namespace

const std::vector<CatalogEntry>& catalogue() {
  static const std::vector<CatalogEntry> c = build_catalogue();
  return c;
}

const CatalogEntry& find_case(const std::string& id) {
  for (const auto& e : catalogue())
    if (e.id == id) return e;
  throw UnknownIdentity("unknown identity '" + id + "'");
}

Params resolve_params(const CatalogEntry& e, const Params& given) {
  Params out;
  for (const auto& [k, v] : given) {
    auto it = std::find_if(e.domain.begin(), e.domain.end(), [&](const ParamDomain& d) { return d.key == k; });
    if (it == e.domain.end()) {
      std::vector<std::string> keys;
      for (const auto& d : e.domain) keys.push_back(d.key);
      throw InvalidParams(e.id + " has no parameter '" + k + "'" +
                          (keys.empty() ? std::string(" (it takes none)") : " (valid: " + join(keys) + ")"));
    }
  }
  for (const auto& d : e.domain) {
    auto it = given.find(d.key);
    if (it == given.end()) {
      out[d.key] = d.suite.front();
      continue;
    }
    std::string v = normalise(it->second);
    if (std::find(d.allowed.begin(), d.allowed.end(), v) == d.allowed.end())
      throw InvalidParams(e.id + ": " + d.key + " = " + it->second + " is out of range; valid: " + join(d.allowed));
    out[d.key] = v;
  }
  if (e.valid && !e.valid(out)) throw InvalidParams(e.id + ": parameters must satisfy " + e.valid_text);
  return out;
}

Report run_case(const std::string& id_in, const Params& params, const RunOptions& opt, bool mutate) {
  std::string id = id_in;
  if (id.size() > 4 && id.compare(id.size() - 4, 4, MUT) == 0) {
    id.resize(id.size() - 4);
    mutate = true;
  }
  const CatalogEntry& e = find_case(id);
  if (mutate && !e.has_mutation) throw InvalidParams(id + " has no mutation variant");
  Params P = resolve_params(e, params);

  Report r;
  r.id = mutate ? id + MUT : id;
  r.params = P;
  auto mode = P.find("mode");
  r.mode = mode != P.end() ? mode->second : e.mode;
  r.expect = mutate ? "fail" : "pass";
  RunOptions eo = effective(e, opt);
  auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = e.run(P, eo, mutate);
    bool holds = o.pass;
    r.status = (mutate ? !holds : holds) ? "pass" : "fail";
    r.witness = std::move(o.witness);
    r.residual = o.residual;
    r.trunc = o.trunc;
    r.tol = o.tol;
    r.seed = o.seed;
  } catch (const Error& err) {
    r.status = "error";
    r.error = err.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

nlohmann::json to_json(const Report& r, bool with_timing) {
  nlohmann::json j;
  j["id"] = r.id;
  j["params"] = r.params;
  j["mode"] = r.mode;
  j["status"] = r.status;
  if (r.expect != "pass") j["expect"] = r.expect;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  if (r.residual) j["residual"] = *r.residual;
  if (r.trunc) j["trunc"] = r.trunc->str();
  if (r.tol) j["tol"] = *r.tol;
  if (r.seed) j["seed"] = *r.seed;
  if (!r.error.empty()) j["error"] = r.error;
  if (with_timing) j["millis"] = std::round(r.millis * 1000.0) / 1000.0;
  return j;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

namespace {

struct Task {
  std::string id;
  Params params;
  bool mutate;
};

void sweep(const CatalogEntry& e, const SuiteFilter& f, std::size_t i, Params& cur, std::vector<Params>& out) {
  if (i == e.domain.size()) {
    if (!e.valid || e.valid(cur)) out.push_back(cur);
    return;
  }
  const ParamDomain& d = e.domain[i];
  auto only = f.only.find(d.key);
  for (const auto& v : d.suite) {
    if (only != f.only.end()) {
      bool keep = false;
      for (const auto& w : only->second) keep = keep || normalise(w) == v;
      if (!keep) continue;
    }
    cur[d.key] = v;
    sweep(e, f, i + 1, cur, out);
  }
  cur.erase(d.key);
}

}  // namespace

SuiteSummary run_suite(const SuiteFilter& filter, const RunOptions& opt, unsigned jobs) {
  std::vector<Task> tasks;
  for (const auto& e : catalogue()) {
    if (!e.enabled) continue;
    bool plain = glob_match(filter.glob, e.id);
    bool mutant = e.has_mutation && glob_match(filter.glob, e.id + MUT);
    if (!plain && !mutant) continue;
    std::vector<Params> sets;
    Params cur;
    sweep(e, filter, 0, cur, sets);
    for (const auto& p : sets) {
      tasks.push_back({e.id, p, false});
      if (e.has_mutation) tasks.push_back({e.id, p, true});
    }
    // a glob aimed at the mutants only ("*~MUT") keeps just those
    if (!plain) std::erase_if(tasks, [&](const Task& t) { return t.id == e.id && !t.mutate; });
  }

  SuiteSummary s;
  s.cases.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) s.cases[i] = run_case(tasks[i].id, tasks[i].params, opt, tasks[i].mutate);
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  s.total = s.cases.size();
  for (const auto& r : s.cases) {
    if (r.status == "pass") ++s.pass;
    else if (r.status == "fail") ++s.fail;
    else ++s.error;
  }
  return s;
}

nlohmann::json to_json(const SuiteSummary& s, bool with_timing) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& r : s.cases) cases.push_back(to_json(r, with_timing));
  return {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail}, {"error", s.error}, {"cases", cases}};
}

}  // namespace mockforms
