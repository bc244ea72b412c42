#include "mockforms/spans.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <random>
#include <set>

namespace mockforms {

namespace {

constexpr long INF = LONG_MAX / 4;

long padd(long a, long b) { return (a >= INF || b >= INF) ? INF : a + b; }

// Truncated Laurent series in q^{1/dq}: c[i] is the coefficient of key v+i, all keys
// in [v + c.size(), prec) are zero, keys >= prec unknown. prec == INF only for the
// exact zero created by elimination.
struct LS {
  long v = 0;
  long prec = INF;
  std::vector<CycNumber> c;

  bool zero() const { return c.empty(); }
  bool exact_zero() const { return c.empty() && prec >= INF; }
  long val() const { return c.empty() ? prec : v; }
  long end() const { return v + static_cast<long>(c.size()); }
};

void trim(LS& a) {
  std::size_t lo = 0;
  while (lo < a.c.size() && a.c[lo].is_zero()) ++lo;
  std::size_t hi = a.c.size();
  while (hi > lo && a.c[hi - 1].is_zero()) --hi;
  if (lo == hi) {
    a.c.clear();
    a.v = 0;
    return;
  }
  a.c.erase(a.c.begin() + static_cast<long>(hi), a.c.end());
  a.c.erase(a.c.begin(), a.c.begin() + static_cast<long>(lo));
  a.v += static_cast<long>(lo);
}

struct Ctx {
  int order;
  CycNumber czero() const { return CycNumber(mpq_class(0), order); }
};

LS ls_sub(const Ctx& cx, const LS& a, const LS& b) {
  LS r;
  r.prec = std::min(a.prec, b.prec);
  if (a.zero() && b.zero()) return r;
  long lo = a.zero() ? b.v : (b.zero() ? a.v : std::min(a.v, b.v));
  long hi = std::min(r.prec, std::max(a.zero() ? lo : a.end(), b.zero() ? lo : b.end()));
  if (hi <= lo) return r;
  r.v = lo;
  r.c.assign(static_cast<std::size_t>(hi - lo), cx.czero());
  for (long k = std::max(lo, a.v); k < std::min(hi, a.end()); ++k) r.c[k - lo] = a.c[k - a.v];
  for (long k = std::max(lo, b.v); k < std::min(hi, b.end()); ++k) {
    auto& t = r.c[k - lo];
    t = cyc_sub(t, b.c[k - b.v]);
  }
  trim(r);
  return r;
}

LS ls_mul(const Ctx& cx, const LS& a, const LS& b) {
  if (a.exact_zero() || b.exact_zero()) return LS{};
  LS r;
  r.prec = std::min(padd(a.prec, b.val()), padd(b.prec, a.val()));
  if (a.zero() || b.zero()) return r;
  long lo = a.v + b.v;
  long hi = std::min(r.prec, a.end() + b.end() - 1);
  if (hi <= lo) return r;
  r.v = lo;
  r.c.assign(static_cast<std::size_t>(hi - lo), cx.czero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    long ki = a.v + static_cast<long>(i);
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      long k = ki + b.v + static_cast<long>(j);
      if (k >= hi) break;
      if (b.c[j].is_zero()) continue;
      cyc_addmul_to(r.c[k - lo], a.c[i], b.c[j]);
    }
  }
  trim(r);
  return r;
}

// a / b, b known nonzero.
LS ls_div(const Ctx& cx, const LS& a, const LS& b) {
  if (a.exact_zero()) return LS{};
  long vb = b.v;
  LS r;
  r.prec = std::min(a.prec >= INF ? INF : a.prec - vb, padd(b.prec, a.val()) - 2 * vb);
  if (a.zero()) return r;
  long lo = a.v - vb;
  if (r.prec <= lo) return r;
  CycNumber binv = cyc_inverse(b.c[0]);
  r.v = lo;
  r.c.assign(static_cast<std::size_t>(r.prec - lo), cx.czero());
  for (long k = lo; k < r.prec; ++k) {
    long ak = k + vb;
    CycNumber acc = (ak >= a.v && ak < a.end()) ? a.c[ak - a.v] : cx.czero();
    for (long j = 1; j < static_cast<long>(b.c.size()) && k - j >= lo; ++j) {
      if (b.c[j].is_zero()) continue;
      const auto& rk = r.c[k - j - lo];
      if (rk.is_zero()) continue;
      acc = cyc_sub(acc, cyc_mul(b.c[j], rk));
    }
    r.c[k - lo] = cyc_mul(acc, binv);
  }
  trim(r);
  return r;
}

// Common lattice for a family of series.
struct Frame {
  long dq = 1, dx = 1;
  int order = 1;
};

Frame frame_of(const std::vector<const QXSeries*>& fs) {
  Frame f;
  long N = 1;
  for (const auto* s : fs) {
    f.dq = lcm_checked(f.dq, s->dq());
    f.dx = lcm_checked(f.dx, s->dx());
    N = lcm_checked(N, s->order());
  }
  f.order = static_cast<int>(N);
  return f;
}

// x-key -> LS component of a series, with precision capped at cut.
std::map<long, LS> components(const QXSeries& s0, const Frame& fr, long cut) {
  QXSeries s = s0.on_lattice(fr.dq, fr.dx).with_order(fr.order);
  long prec = std::min(s.trunc_key(), cut);
  std::map<long, std::vector<std::pair<long, const CycNumber*>>> raw;
  for (const auto& [qk, poly] : s.terms()) {
    if (qk >= prec) break;
    for (const auto& [xk, c] : poly) raw[xk].push_back({qk, &c});
  }
  std::map<long, LS> out;
  Ctx cx{fr.order};
  for (auto& [xk, list] : raw) {
    LS l;
    l.prec = prec;
    l.v = list.front().first;
    l.c.assign(static_cast<std::size_t>(list.back().first - l.v + 1), cx.czero());
    for (auto& [qk, c] : list) l.c[qk - l.v] = *c;
    trim(l);
    out.emplace(xk, std::move(l));
  }
  return out;
}

struct System {
  Ctx cx{1};
  std::vector<long> row_keys;          // x-key per row (or point index)
  std::vector<std::vector<LS>> M;      // rows x (G [+1])
  std::size_t G = 0;
  std::vector<long> pivot_of_col;      // row index or -1
  std::vector<bool> used;
  std::size_t rank = 0;
};

void eliminate(System& S) {
  std::size_t R = S.M.size();
  std::size_t C = R ? S.M[0].size() : S.G;
  S.used.assign(R, false);
  S.pivot_of_col.assign(S.G, -1);
  for (std::size_t col = 0; col < S.G; ++col) {
    long best = -1;
    for (std::size_t r = 0; r < R; ++r) {
      if (S.used[r] || S.M[r][col].zero()) continue;
      if (best < 0 || S.M[r][col].val() < S.M[best][col].val()) best = static_cast<long>(r);
    }
    if (best < 0) continue;
    S.used[best] = true;
    S.pivot_of_col[col] = best;
    ++S.rank;
    const auto& prow = S.M[best];
    for (std::size_t r = 0; r < R; ++r) {
      // an inexact zero still carries its unknown tail into the other columns
      if (static_cast<long>(r) == best || S.M[r][col].exact_zero()) continue;
      LS f = ls_div(S.cx, S.M[r][col], prow[col]);
      for (std::size_t k = 0; k < C; ++k) {
        if (k == col || prow[k].exact_zero()) continue;
        S.M[r][k] = ls_sub(S.cx, S.M[r][k], ls_mul(S.cx, f, prow[k]));
      }
      S.M[r][col] = LS{};
    }
  }
}

System build_system(const std::vector<QXSeries>& gens, const QXSeries* target, const ExpRational& cut) {
  std::vector<const QXSeries*> all;
  for (const auto& g : gens) all.push_back(&g);
  if (target) all.push_back(target);
  Frame fr = frame_of(all);
  long cutk = (cut * ExpRational(fr.dq)).ceil_long();
  std::vector<std::map<long, LS>> comps;
  std::set<long> keys;
  std::vector<long> precs;
  for (const auto* s : all) {
    comps.push_back(components(*s, fr, cutk));
    precs.push_back(std::min(s->on_lattice(fr.dq, fr.dx).trunc_key(), cutk));
    for (const auto& [k, _] : comps.back()) keys.insert(k);
  }
  System S;
  S.cx = Ctx{fr.order};
  S.G = gens.size();
  for (long xk : keys) {
    std::vector<LS> row;
    for (std::size_t i = 0; i < all.size(); ++i) {
      auto it = comps[i].find(xk);
      if (it != comps[i].end()) {
        row.push_back(it->second);
      } else {
        LS z;
        z.prec = precs[i];
        row.push_back(z);
      }
    }
    S.row_keys.push_back(xk);
    S.M.push_back(std::move(row));
  }
  return S;
}

QXSeries to_series(const LS& l, long dq, int order) {
  QXSeries::Terms t;
  for (std::size_t i = 0; i < l.c.size(); ++i)
    if (!l.c[i].is_zero()) t[l.v + static_cast<long>(i)][0] = l.c[i];
  std::optional<ExpRational> tr;
  if (l.prec < INF) tr = ExpRational(l.prec, dq);
  return QXSeries::from_keys(dq, 1, order, std::move(t), tr);
}

struct Solve {
  bool consistent = true;
  std::optional<NotInSpan> cert;
  std::vector<QXSeries> coeffs;
  std::vector<bool> pivots;  // column has a pivot
  std::size_t rank = 0;
};

Solve solve(const QXSeries& target, const std::vector<QXSeries>& gens, const ExpRational& cut) {
  System S = build_system(gens, &target, cut);
  eliminate(S);
  std::vector<const QXSeries*> all;
  for (const auto& g : gens) all.push_back(&g);
  all.push_back(&target);
  Frame fr = frame_of(all);
  Solve out;
  out.rank = S.rank;
  for (long p : S.pivot_of_col) out.pivots.push_back(p >= 0);
  std::optional<std::pair<long, long>> worst;  // (q-key, x-key)
  for (std::size_t r = 0; r < S.M.size(); ++r) {
    if (S.used[r]) continue;
    const LS& t = S.M[r][S.G];
    if (t.zero()) continue;
    std::pair<long, long> w{t.v, S.row_keys[r]};
    if (!worst || w < *worst) worst = w;
  }
  if (worst) {
    out.consistent = false;
    out.cert = NotInSpan{ExpRational(worst->second, fr.dx), ExpRational(worst->first, fr.dq)};
    return out;
  }
  for (std::size_t j = 0; j < S.G; ++j) {
    long p = S.pivot_of_col[j];
    if (p < 0) {
      out.coeffs.push_back(QXSeries());
      continue;
    }
    LS c = ls_div(S.cx, S.M[p][S.G], S.M[p][j]);
    out.coeffs.push_back(to_series(c, fr.dq, fr.order));
  }
  return out;
}

std::optional<ExpRational> common_trunc(const QXSeries& a, const QXSeries& b) {
  if (a.is_exact()) return b.trunc();
  if (b.is_exact()) return a.trunc();
  return std::min(*a.trunc(), *b.trunc());
}

}  // namespace

Decomposition decompose_in_span(const QXSeries& target, const std::vector<QXSeries>& gens, const SpanOptions& opt) {
  if (opt.guard.sign() <= 0) throw InvalidParams("guard must be positive");
  Decomposition d;
  Solve lo = solve(target, gens, opt.trunc - opt.guard);
  Solve hi = solve(target, gens, opt.trunc);
  d.rank = hi.rank;
  if (!lo.consistent || !hi.consistent) {
    d.certificate = lo.consistent ? hi.cert : lo.cert;
    return d;
  }
  if (lo.pivots != hi.pivots)
    throw RankUnstable("pivot structure differs between trunc-guard and trunc; raise trunc");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto ct = common_trunc(lo.coeffs[i], hi.coeffs[i]);
    if (!ct) {
      if (!(lo.coeffs[i] == hi.coeffs[i])) throw InsufficientPrecision("coefficients disagree");
      continue;
    }
    if (!equal_up_to(lo.coeffs[i].truncated(*ct), hi.coeffs[i].truncated(*ct), *ct).pass)
      throw InsufficientPrecision("coefficients at trunc-guard and trunc disagree; raise trunc");
  }
  QXSeries resid = target.is_exact() ? target.truncated(opt.trunc) : target;
  if (resid.trunc() && *resid.trunc() > opt.trunc) resid = resid.truncated(opt.trunc);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!(hi.coeffs[i] == QXSeries())) resid = sub(resid, mul(hi.coeffs[i], gens[i]));
  d.verified_to = resid.trunc() ? *resid.trunc() : opt.trunc;
  if (!resid.empty()) {
    const auto& [qk, poly] = *resid.terms().begin();
    d.certificate = NotInSpan{resid.xexp(poly.begin()->first), resid.qexp(qk)};
    return d;
  }
  d.in_span = true;
  d.coeffs = std::move(hi.coeffs);
  return d;
}

RankReport rank_report(const std::vector<QXSeries>& gens, const SpanOptions& opt) {
  RankReport rep;
  if (gens.empty()) return rep;
  {
    System S = build_system(gens, nullptr, opt.trunc);
    eliminate(S);
    rep.rank = S.rank;
  }
  {
    System S = build_system(gens, nullptr, opt.trunc - opt.guard);
    eliminate(S);
    rep.rank_guarded = S.rank;
  }
  // Random rational substitutions x^{1/dx} <- rho_p, one row per point.
  std::vector<const QXSeries*> all;
  for (const auto& g : gens) all.push_back(&g);
  Frame fr = frame_of(all);
  long cutk = (opt.trunc * ExpRational(fr.dq)).ceil_long();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> num(2, 13), den(1, 7);
  std::set<mpq_class> seen;
  std::vector<mpq_class> rho;
  std::size_t P = gens.size() + 2;
  while (rho.size() < P) {
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    if (r == 1 || !seen.insert(r).second) continue;
    rho.push_back(r);
  }
  Ctx cx{fr.order};
  System S;
  S.cx = cx;
  S.G = gens.size();
  std::vector<std::map<long, LS>> comps;
  for (const auto* g : all) comps.push_back(components(*g, fr, cutk));
  for (std::size_t p = 0; p < P; ++p) {
    std::vector<LS> row;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      LS acc;
      acc.prec = std::min(gens[i].on_lattice(fr.dq, fr.dx).trunc_key(), cutk);
      for (const auto& [xk, comp] : comps[i]) {
        mpz_class n = rho[p].get_num(), d = rho[p].get_den();
        if (xk < 0) std::swap(n, d);
        mpz_class pn, pd;
        mpz_pow_ui(pn.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(std::labs(xk)));
        mpz_pow_ui(pd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(std::labs(xk)));
        CycNumber w(mpq_class(pn, pd), fr.order);
        LS term = comp;
        for (auto& c : term.c) c = cyc_neg(cyc_mul(c, w));
        acc = ls_sub(cx, acc, term);
      }
      row.push_back(std::move(acc));
    }
    S.row_keys.push_back(static_cast<long>(p));
    S.M.push_back(std::move(row));
  }
  eliminate(S);
  rep.rank_random = S.rank;
  return rep;
}

std::size_t span_dim(const std::vector<QXSeries>& gens, const SpanOptions& opt) {
  RankReport r = rank_report(gens, opt);
  if (r.rank != r.rank_guarded || r.rank != r.rank_random)
    throw RankUnstable("ranks disagree (rank " + std::to_string(r.rank) + ", guarded " +
                       std::to_string(r.rank_guarded) + ", substituted " + std::to_string(r.rank_random) +
                       "); raise trunc");
  return r.rank;
}

SpanVerdict span_contains(const std::vector<QXSeries>& B, const std::vector<QXSeries>& A, const SpanOptions& opt) {
  SpanVerdict v;
  for (std::size_t i = 0; i < A.size(); ++i) {
    Decomposition d = decompose_in_span(A[i], B, opt);
    if (!d.in_span) {
      v.pass = false;
      v.failures.push_back({'A', i, d.certificate});
    }
    v.a_in_b.push_back(std::move(d));
  }
  return v;
}

SpanVerdict span_equal(const std::vector<QXSeries>& A, const std::vector<QXSeries>& B, const SpanOptions& opt) {
  SpanVerdict v = span_contains(B, A, opt);
  for (std::size_t i = 0; i < B.size(); ++i) {
    Decomposition d = decompose_in_span(B[i], A, opt);
    if (!d.in_span) {
      v.pass = false;
      v.failures.push_back({'B', i, d.certificate});
    }
    v.b_in_a.push_back(std::move(d));
  }
  return v;
}

Parity parse_parity(const std::string& s) {
  if (s == "all") return Parity::all;
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw ParseError("parity must be all, even or odd");
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "all";
  }
}

std::vector<QXSeries> build_Theta(long m, Parity parity, const ExpRational& trunc) {
  if (m <= 0) throw InvalidLevel("Theta space needs m >= 1");
  std::vector<QXSeries> out;
  for (long j = 1; j <= m - 1; ++j) {
    if (parity == Parity::even && j % 2 != 0) continue;
    if (parity == Parity::odd && j % 2 == 0) continue;
    out.push_back(theta_diff(ExpRational(j), ExpRational(m), trunc));
  }
  return out;
}

std::vector<ExpRational> v_shifts(long m, const ExpRational& s) {
  std::vector<ExpRational> out;
  ExpRational top(m + 1, 2);
  ExpRational start = s.sign() == 0 ? ExpRational(1) : s;
  for (ExpRational t = start; t <= top; t += ExpRational(1)) out.push_back(t);
  return out;
}

std::vector<QXSeries> build_V(long m, const ExpRational& s, const ExpRational& trunc) {
  if (m <= 0) throw InvalidLevel("V space needs m >= 1");
  if (!(s == ExpRational(0) || s == ExpRational(1, 2))) throw InvalidParams("s must be 0 or 1/2");
  std::vector<QXSeries> out;
  for (const auto& t : v_shifts(m, s)) out.push_back(numerator(m, t, trunc));
  return out;
}

std::vector<QXSeries> build_U(long m, const ExpRational& s, const ExpRational& trunc) {
  if (m <= 0) throw InvalidLevel("U space needs m >= 1");
  bool half = s == ExpRational(1, 2);
  if (!half && s.sign() != 0) throw InvalidParams("s must be 0 or 1/2");
  const ExpRational h(1, 2), M(m + 1);
  QXSeries inv_m = invert_unit(theta(-h, ExpRational(1), trunc), trunc);
  QXSeries inv_p = invert_unit(theta(h, ExpRational(1), trunc), trunc);
  QXSeries a = theta(half ? h : -h, M, trunc), b = theta(half ? -h : h, M, trunc);
  std::vector<QXSeries> out{sub(mul(a, inv_m), mul(b, inv_p))};
  auto diffs = build_Theta(m, half ? Parity::odd : Parity::even, trunc);
  out.insert(out.end(), diffs.begin(), diffs.end());
  return out;
}

std::vector<QXSeries> times(const QXSeries& f, const std::vector<QXSeries>& gens) {
  std::vector<QXSeries> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(mul(f, g));
  return out;
}

std::vector<QXSeries> concat(std::vector<QXSeries> a, const std::vector<QXSeries>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace mockforms
