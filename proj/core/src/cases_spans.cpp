// Span statements over truncated Laurent series in q.

#include "cases.hpp"

namespace mockforms::cases {
namespace {

using Gens = std::vector<QXSeries>;
using Build = std::function<Gens(const ExpRational&)>;
const ExpRational H(1, 2);

QXSeries t01(const ExpRational& T) { return th(0, 1, T); }
QXSeries t11(const ExpRational& T) { return th(1, 1, T); }

Build theta_space(long m, Parity par) {
  return [=](const ExpRational& T) { return build_Theta(m, par, T); };
}
Build v_space(long m, const ExpRational& s) {
  return [=](const ExpRational& T) { return build_V(m, s, T); };
}
Build v_full(long m) {
  return [=](const ExpRational& T) { return concat(build_V(m, 0, T), build_V(m, H, T)); };
}
Build times01(Build b) {
  return [=](const ExpRational& T) { return times(t01(T), b(T)); };
}
Build times11(Build b) {
  return [=](const ExpRational& T) { return times(t11(T), b(T)); };
}
Build join(Build a, Build b) {
  return [=](const ExpRational& T) { return concat(a(T), b(T)); };
}
Build times_n11(Build b) {
  return [=](const ExpRational& T) { return times(numerator(1, 1, T), b(T)); };
}

SpanCheck equal(std::string label, Build a, Build b) {
  return {std::move(label), [=](const SpanOptions& opt) {
            return verdict_witness(span_equal(at_least(a, opt.trunc), at_least(b, opt.trunc), opt));
          }};
}
// span(sub) inside span(space)
SpanCheck inside(std::string label, Build sub, Build space) {
  return {std::move(label), [=](const SpanOptions& opt) {
            return verdict_witness(span_contains(at_least(space, opt.trunc), at_least(sub, opt.trunc), opt));
          }};
}
SpanCheck dim_is(std::string label, Build b, std::size_t expected) {
  return {std::move(label), [=](const SpanOptions& opt) -> std::optional<nlohmann::json> {
            RankReport r = rank_report(at_least(b, opt.trunc), opt);
            if (r.rank == expected && r.rank_guarded == expected && r.rank_random == expected) return std::nullopt;
            return nlohmann::json{{"expected", expected},
                                  {"rank", r.rank},
                                  {"rank_guarded", r.rank_guarded},
                                  {"rank_random", r.rank_random}};
          }};
}

Outcome theta_close(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m");
  const auto E = Parity::even, D = Parity::odd;
  if (mut) return run_span_checks({inside("theta01 odd -> even", times01(theta_space(m, D)), theta_space(m + 1, E))},
                                  span_options(o));
  return run_span_checks({inside("theta01", times01(theta_space(m, Parity::all)), theta_space(m + 1, Parity::all)),
                          inside("theta11", times11(theta_space(m, Parity::all)), theta_space(m + 1, Parity::all)),
                          inside("theta01 even", times01(theta_space(m, E)), theta_space(m + 1, E)),
                          inside("theta01 odd", times01(theta_space(m, D)), theta_space(m + 1, D)),
                          inside("theta11 even", times11(theta_space(m, E)), theta_space(m + 1, D)),
                          inside("theta11 odd", times11(theta_space(m, D)), theta_space(m + 1, E))},
                         span_options(o));
}

Outcome theta_tower(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m");
  const auto A = Parity::all, E = Parity::even, D = Parity::odd;
  if (mut) return run_span_checks({equal("theta01 only", theta_space(m + 1, A), times01(theta_space(m, A)))}, span_options(o));
  return run_span_checks(
      {equal("full", theta_space(m + 1, A), join(times01(theta_space(m, A)), times11(theta_space(m, A)))),
       equal("even", theta_space(m + 1, E), join(times01(theta_space(m, E)), times11(theta_space(m, D)))),
       equal("odd", theta_space(m + 1, D), join(times01(theta_space(m, D)), times11(theta_space(m, E)))),
       dim_is("dim theta01 Theta", times01(theta_space(m, A)), static_cast<std::size_t>(m - 1)),
       dim_is("dim Theta", theta_space(m + 1, A), static_cast<std::size_t>(m))},
      span_options(o));
}

Outcome vu_eq(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m");
  const ExpRational s = rat(P, "s"), su = mut ? H - s : s;
  return run_span_checks({equal("V = U", v_space(m, s), [=](const ExpRational& T) { return build_U(m, su, T); })},
                         span_options(o));
}

Outcome quot_pindep(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m");
  const ExpRational s = rat(P, "s"), p(integer(P, "p")), M(m + 1);
  const ExpRational a = s.sign() == 0 ? ExpRational(2) * p - H : ExpRational(2) * p + H;
  const ExpRational su = mut ? H - s : s;
  Build target = [=](const ExpRational& T) {
    return Gens{sub(quotient(th(a, M, T), th(-H, 1, T), T), quotient(th(-a, M, T), th(H, 1, T), T))};
  };
  return run_span_checks({inside("quotient in U", target, [=](const ExpRational& T) { return build_U(m, su, T); })},
                         span_options(o));
}

std::vector<SpanCheck> v_tower_checks(long m) {
  return {equal("0", v_space(m + 1, 0), join(times01(v_space(m, 0)), times11(v_space(m, H)))),
          equal("1/2", v_space(m + 1, H), join(times01(v_space(m, H)), times11(v_space(m, 0))))};
}

Outcome v_tower(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m");
  if (mut)
    return run_span_checks({equal("swapped", v_space(m + 1, H), join(times01(v_space(m, 0)), times11(v_space(m, H))))},
                           span_options(o));
  return run_span_checks(v_tower_checks(m), span_options(o));
}

Outcome ch_tower(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m");
  if (mut)
    return run_span_checks({equal("full vs s = 0 part", v_space(m + 1, 0), join(times01(v_full(m)), times11(v_full(m))))},
                           span_options(o));
  auto checks = v_tower_checks(m);
  checks.push_back(equal("full", v_full(m + 1), join(times01(v_full(m)), times11(v_full(m)))));
  return run_span_checks(checks, span_options(o));
}

// theta_{1,1} f g over f in A, g in B
Build products(Build a, Build b) {
  return [=](const ExpRational& T) {
    Gens out;
    QXSeries t = t11(T);
    Gens fa = a(T), gb = b(T);
    for (const auto& f : fa)
      for (const auto& g : gb) out.push_back(t * f * g);
    return out;
  };
}

Outcome ch_prod(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m"), n = integer(P, "n");
  const long k = m + n;
  if (mut)
    return run_span_checks({inside("odd odd -> odd", products(v_space(m, 0), v_space(n, 0)), times_n11(v_space(k, 0)))},
                           span_options(o));
  std::vector<SpanCheck> checks{
      equal("product", products(v_full(m), v_full(n)), times_n11(v_full(k))),
      inside("even even", products(v_space(m, H), v_space(n, H)), times_n11(v_space(k, H))),
      inside("even odd", products(v_space(m, H), v_space(n, 0)), times_n11(v_space(k, 0))),
      inside("odd odd", products(v_space(m, 0), v_space(n, 0)), times_n11(v_space(k, H)))};
  if (m != n) checks.push_back(inside("odd even", products(v_space(m, 0), v_space(n, H)), times_n11(v_space(k, 0))));
  return run_span_checks(checks, span_options(o));
}

// theta_{1,1}^j theta_{0,1}^{m-j} for j of the given parity
Build monomials(long m, Parity par) {
  return [=](const ExpRational& T) {
    Gens out;
    QXSeries a = t11(T), b = t01(T);
    for (long j = 0; j <= m; ++j) {
      if ((par == Parity::even && j % 2) || (par == Parity::odd && j % 2 == 0)) continue;
      out.push_back(power(a, static_cast<int>(j)) * power(b, static_cast<int>(m - j)));
    }
    return out;
  };
}

Outcome ch_mono(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m");
  if (mut)
    return run_span_checks({equal("odd vs even monomials", times11(v_space(m, 0)), times_n11(monomials(m, Parity::even)))},
                           span_options(o));
  return run_span_checks({equal("full", times11(v_full(m)), times_n11(monomials(m, Parity::all))),
                          equal("odd", times11(v_space(m, 0)), times_n11(monomials(m, Parity::odd))),
                          equal("even", times11(v_space(m, H)), times_n11(monomials(m, Parity::even))),
                          dim_is("dim", v_full(m), static_cast<std::size_t>(m + 1))},
                         span_options(o));
}

// dim V^{[m,0]} = [(m+1)/2], dim V^{[m,1/2]} = [m/2] + 1
std::size_t expected_dim(long m, const ExpRational& s) {
  return static_cast<std::size_t>(s.sign() == 0 ? (m + 1) / 2 : m / 2 + 1);
}

Outcome dim_table(const Params& P, const RunOptions& o, bool) {
  const long m = integer(P, "m");
  const ExpRational s = rat(P, "s");
  return run_span_checks({dim_is("dim V", v_space(m, s), expected_dim(m, s))}, span_options(o));
}

}  // namespace

void add_spans(std::vector<CatalogEntry>& out) {
  auto entry = [&](std::string id, std::string summary, std::vector<ParamDomain> d,
                   std::function<Outcome(const Params&, const RunOptions&, bool)> fn, bool mutation = true) {
    CatalogEntry e;
    e.id = std::move(id);
    e.mode = "spans";
    e.summary = std::move(summary);
    e.domain = std::move(d);
    e.run = std::move(fn);
    e.has_mutation = mutation;
    e.trunc = ExpRational(12);
    out.push_back(std::move(e));
  };
  const std::vector<std::string> s01{"0", "1/2"};

  entry("THETA-CLOSE", "theta_{0,1} Theta^[m] and theta_{1,1} Theta^[m] lie in Theta^[m+1], with parities",
        {dom("m", int_range(2, 5), int_range(2, 4))}, theta_close);
  entry("THETA-TOWER", "Theta^[m+1] = theta_{0,1} Theta^[m] + theta_{1,1} Theta^[m], with parities and dimensions",
        {dom("m", int_range(2, 5), int_range(2, 4))}, theta_tower);
  entry("VU-EQ", "V^[m,s] = U^[m,s]", {dom("m", int_range(1, 4), int_range(1, 3)), dom("s", s01)}, vu_eq);
  entry("QUOT-PINDEP", "the p-shifted theta quotient lies in U^[m,s]",
        {dom("m", int_range(1, 4), int_range(1, 3)), dom("s", s01), dom("p", int_range(-2, 3), int_range(0, 2))},
        quot_pindep);
  entry("V-TOWER", "theta_{0,1} V^[m,s] + theta_{1,1} V^[m,1/2-s] = V^[m+1,s]",
        {dom("m", int_range(1, 4), int_range(1, 3))}, v_tower);
  entry("CH-TOWER", "character-numerator tower: both parities and the full space",
        {dom("m", int_range(1, 4), int_range(1, 3))}, ch_tower);
  {
    entry("CH-PROD", "theta_{1,1} V^[m] V^[n] = N(1,1) V^[m+n], with parities",
          {dom("m", int_range(1, 3)), dom("n", int_range(1, 3))}, ch_prod);
    out.back().valid = [](const Params& P) { return integer(P, "m") + integer(P, "n") <= 4; };
    out.back().valid_text = "m + n <= 4";
  }
  entry("CH-MONO", "theta_{1,1} V^[m] = N(1,1) span{theta_{1,1}^j theta_{0,1}^{m-j}}, with parities; dim V^[m] = m+1",
        {dom("m", int_range(1, 4), int_range(1, 3))}, ch_mono);
  entry("DIM-TABLE", "dim V^[m,0] = [(m+1)/2] and dim V^[m,1/2] = [m/2]+1, three ranks agreeing",
        {dom("m", int_range(1, 5), int_range(1, 4)), dom("s", s01)}, dim_table, false);
}

}  // namespace mockforms::cases
