// Exact q-series cases: theta shift formulas, the specialised Phi identities and
// the numerator formulas, evaluation facts at z = tau + 1/2, product identities.

#include "cases.hpp"

namespace mockforms::cases {
namespace {

const ExpRational H(1, 2);
const CycNumber I = root_of_unity(1, 4, 4);
const CycNumber MINUS_I = root_of_unity(3, 4, 4);

CycNumber sgn(bool negate) { return CycNumber(negate ? -1 : 1); }
long pm1(long e) { return (e % 2 == 0) ? 1 : -1; }
CycNumber signed_c(long sign, const CycNumber& c) { return sign < 0 ? cyc_neg(c) : c; }

// ------------------------------------------------------------ theta shifts

Outcome theta_shift_a(const Params& P, const RunOptions& o, bool mut) {
  const ExpRational p(integer(P, "p"));
  const ExpRational c = p + H, qe = -(c * c) / 4;
  const AffineArg a1{1, H + p, -H}, a2{1, -H - p, H};
  return compare_symbolic_items(
      {{"1", [=](const ExpRational& T) {
          return std::pair{vartheta(VarthetaKind::v11, 2, a1, T), mono(th(p - H, 1, T), sgn(mut), qe, -c / 2)};
        }},
       {"2", [=](const ExpRational& T) {
          return std::pair{vartheta(VarthetaKind::v11, 2, a2, T), mono(th(-p + H, 1, T), CycNumber(-1), qe, c / 2)};
        }}},
      *o.trunc);
}

// neg_index: the down-shift item "1ii" with index -1 on the left instead of 1
Outcome theta_shift_b_impl(const Params& P, const RunOptions& o, bool mut, bool neg_index) {
  const long m = integer(P, "m");
  const ExpRational p(integer(P, "p")), M(m + 1), c = ExpRational(2) * p + 1;
  const AffineArg up{1, c / (ExpRational(2) * M), ExpRational(-1) / (ExpRational(2) * M)};
  const AffineArg down{1, -c / (ExpRational(2) * M), ExpRational(1) / (ExpRational(2) * M)};
  const CycNumber e1 = ep(ExpRational(1) / (ExpRational(4) * M));
  const ExpRational qe = -(c * c) / (ExpRational(16) * M);
  const auto minus = SignVariant::minus;
  std::vector<std::pair<std::string, SidesBuilder>> items{
      {"1i", [=](const ExpRational& T) {
         return std::pair{th(-1, M, T, minus, up), mono(th(p - H, M, T), mut ? -e1 : e1, qe, -c / 4)};
       }},
      {"1ii", [=](const ExpRational& T) {
         return std::pair{th(neg_index ? -1 : 1, M, T, minus, down), mono(th(-p + H, M, T), e1, qe, c / 4)};
       }},
      {"2i", [=](const ExpRational& T) {
         return std::pair{th(0, M, T, minus, up), mono(th(p + H, M, T), CycNumber(1), qe, -c / 4)};
       }},
      {"2ii", [=](const ExpRational& T) {
         return std::pair{th(0, M, T, minus, down), mono(th(-p - H, M, T), CycNumber(1), qe, c / 4)};
       }}};
  if (neg_index) items = {items[1]};
  return compare_symbolic_items(items, *o.trunc);
}

Outcome theta_shift_b(const Params& P, const RunOptions& o, bool mut) { return theta_shift_b_impl(P, o, mut, false); }
Outcome theta_shift_b_neg(const Params& P, const RunOptions& o, bool mut) {
  return theta_shift_b_impl(P, o, mut, true);
}

// Both items are perturbed by the mutation: for some (m, p) the first one is 0 = 0.
Outcome theta_shift_c(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m");
  const ExpRational mr(m), p(integer(P, "p")), M(m + 1), c = ExpRational(2) * p + 1;
  const AffineArg arg{0, mr * c / (ExpRational(2) * M), -mr / (ExpRational(2) * M)};
  const ExpRational qe = -(mr * mr * c * c) / (ExpRational(16) * M);
  const SignVariant sg = sigma(m);
  const auto minus = SignVariant::minus;
  return compare_symbolic_items(
      {{"1", [=](const ExpRational& T) {
          CycNumber k = ep(-mr / (ExpRational(4) * M));
          return std::pair{th(1, M, T, minus, arg), mono(th0(1 + mr * (p + H), M, sg, T), mut ? -k : k, qe)};
        }},
       {"2", [=](const ExpRational& T) {
          return std::pair{th(0, M, T, minus, arg), mono(th0(mr * (p + H), M, sg, T), sgn(mut), qe)};
        }}},
      *o.trunc);
}

// ------------------------------------------------------------ double sums

// sum_j sum_k sg (-1)^{(m+1)j} e^{pi i k} q^{ex(j,k)} [theta_{2k,m} - theta_{-2k,m}](tau,z)
// k integer with 0 < k <= mj (sg +1) or mj < k <= 0 (sg -1), or k in 1/2 + Z with the
// strict bounds when `half`.
QXSeries double_sum(long m, const ExpRational& c, bool half, const ExpRational& T) {
  const ExpRational mr(m), M1(m + 1);
  const ExpRational delta = half ? c / M1 : (H + c) / M1;
  auto ex = [&](long j, const ExpRational& k) {
    ExpRational a = ExpRational(j) + delta, b = k + c;
    return M1 * a * a - b * b / mr;
  };
  // crude lower bound over the whole k-range of row j; convex in |j|
  auto row_bound = [&](long j) {
    ExpRational a = ExpRational(j) + delta, b = mr * ExpRational(std::labs(j)) + 1 + abs(c);
    return M1 * a * a - b * b / mr;
  };
  QXSeries acc = QXSeries::zero(T);
  for (long dir : {1L, -1L}) {
    for (long j = dir;; j += dir) {
      if (row_bound(j) >= T && row_bound(j + dir) >= row_bound(j)) break;
      std::vector<ExpRational> ks;
      long lo2, hi2;  // range of 2k
      if (dir > 0) {
        lo2 = half ? 1 : 2;
        hi2 = half ? 2 * m * j - 1 : 2 * m * j;
      } else {
        lo2 = half ? 2 * m * j + 1 : 2 * m * j + 2;
        hi2 = half ? -1 : 0;
      }
      for (long k2 = lo2; k2 <= hi2; k2 += 2) ks.emplace_back(k2, 2);
      const long sg = (dir > 0 ? 1 : -1) * pm1((m + 1) * j);
      for (const auto& k : ks) {
        ExpRational e = ex(j, k);
        ExpRational d = frac(k / mr);
        if (ExpRational(1) - d < d) d = ExpRational(1) - d;
        if (e + mr * d * d >= T) continue;
        QXSeries td = theta_diff(ExpRational(2) * k, mr, T - e);
        acc = add(acc, mono(td, signed_c(sg, ep(k / 2)), e));
      }
    }
  }
  return acc;
}

QXSeries eta3(const ExpRational& T) { return power(eta(2, T), 3); }

// theta_{a,m+1}/theta_{b,1} - theta_{c,m+1}/theta_{d,1}
QXSeries quotient_pair(long m, const ExpRational& a, const ExpRational& b, const ExpRational& c, const ExpRational& d,
                       const ExpRational& T) {
  const ExpRational M(m + 1);
  return sub(quotient(th(a, M, T), th(b, 1, T), T), quotient(th(c, M, T), th(d, 1, T), T));
}

QXSeries phi_at(long m, const ExpRational& s, long p, const ExpRational& T) {
  PhiParams pp;
  pp.m = ExpRational(m, 2);
  pp.s = s;
  return phi_symbolic(pp, 2, numerator_arg1(p), numerator_arg2(p), TMode::zero, T);
}

// ------------------------------------------------------------ specialisation

Outcome spec0(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m"), p = integer(P, "p");
  const ExpRational mr(m), pr(p), c = mr * (ExpRational(2) * pr + 1) / 4;
  const ExpRational qe = -mr * (ExpRational(2) * pr + 1) * (ExpRational(2) * pr + 1) / 16;
  return compare_symbolic(
      [=](const ExpRational& T) {
        QXSeries lhs = mono(th0(1 + mr * (pr + H), m + 1, sigma(m), T) * phi_at(m, 0, p, T), CycNumber(1), qe);
        QXSeries eta_term = eta3(T) * quotient_pair(m, pr - H, pr - H, -pr + H, -pr + H, T);
        QXSeries rhs = double_sum(m, c, false, T) + (mut ? -eta_term : eta_term);
        return std::pair{lhs, rhs};
      },
      *o.trunc);
}

Outcome spech(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m"), p = integer(P, "p");
  const ExpRational mr(m), pr(p), c = mr * (ExpRational(2) * pr + 1) / 4;
  const ExpRational qe = -mr * (ExpRational(2) * pr + 1) * (ExpRational(2) * pr + 1) / 16;
  return compare_symbolic(
      [=](const ExpRational& T) {
        QXSeries lhs = mono(th0(mr * (pr + H), m + 1, sigma(m), T) * phi_at(m, H, p, T), CycNumber(1), qe);
        QXSeries eta_term = scale(eta3(T) * quotient_pair(m, pr + H, pr - H, -pr - H, -pr + H, T), MINUS_I);
        QXSeries rhs = double_sum(m, c, true, T) + (mut ? -eta_term : eta_term);
        return std::pair{lhs, rhs};
      },
      *o.trunc);
}

// ------------------------------------------------------------ numerator formulas

// sum_{k=1}^{n} (-1)^k q^{-(k - shift + m/4)^2/m} [theta_{2(k-shift),m} - theta_{-2(k-shift),m}]
QXSeries finite_corr(long m, long n, const ExpRational& shift, SignVariant sign, const ExpRational& T) {
  const ExpRational mr(m);
  QXSeries acc = QXSeries::zero(T);
  for (long k = 1; k <= n; ++k) {
    ExpRational kk = ExpRational(k) - shift, b = kk + mr / 4;
    ExpRational e = -(b * b) / mr;
    acc = add(acc, mono(theta_diff(ExpRational(2) * kk, mr, T - e, sign), CycNumber(pm1(k)), e));
  }
  return acc;
}

Outcome num0(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m"), p = integer(P, "p");
  const ExpRational mr(m), pr(p), c = mr * (ExpRational(4) * pr + 1) / 4;
  const ExpRational j0 = ExpRational(2) * pr - 1 - mr / 2;
  const CycNumber sp(pm1(p));
  return compare_symbolic(
      [=](const ExpRational& T) {
        QXSeries t1 = th0(j0, m + 1, sigma(m), T);
        QXSeries lhs = t1 * numerator(m, 0, T);
        QXSeries eta_term = scale(eta3(T) * quotient_pair(m, ExpRational(2) * pr - H, -H, -ExpRational(2) * pr + H, H, T), sp);
        QXSeries rhs = (mut ? -eta_term : eta_term) + scale(double_sum(m, c, false, T), sp) +
                       t1 * finite_corr(m, p * m, 0, SignVariant::plus, T);
        return std::pair{lhs, rhs};
      },
      *o.trunc);
}

Outcome numh(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m"), p = integer(P, "p");
  const ExpRational mr(m), pr(p), c = mr * (ExpRational(4) * pr + 1) / 4;
  const ExpRational j0 = ExpRational(2) * pr - mr / 2;
  const CycNumber sp(pm1(p));
  return compare_symbolic(
      [=](const ExpRational& T) {
        QXSeries t2 = th0(j0, m + 1, sigma(m), T);
        QXSeries lhs = t2 * numerator(m, H, T);
        QXSeries eta_term = scale(eta3(T) * quotient_pair(m, ExpRational(2) * pr + H, -H, -ExpRational(2) * pr - H, H, T),
                                  signed_c(pm1(p), MINUS_I));
        QXSeries rhs = (mut ? -eta_term : eta_term) + scale(double_sum(m, c, true, T), sp) +
                       scale(t2 * finite_corr(m, p * m, H, SignVariant::plus, T), MINUS_I);
        return std::pair{lhs, rhs};
      },
      *o.trunc);
}

// ------------------------------------------------------------ shifts of Phi

PhiParams phi_params(long m, const ExpRational& s, SignVariant v) {
  PhiParams pp;
  pp.m = ExpRational(m, 2);
  pp.s = s;
  pp.variant = v == SignVariant::minus ? SignVariant::minus : SignVariant::none;
  return pp;
}

// Phi(2 tau, z1 + 2a tau, z2 - 2a tau, 0) against the unshifted Phi and its theta
// correction, at z1 = z + tau/2 - 1/2, z2 = z - tau/2 + 1/2 (symbolic) or at generic
// points (numeric). Both sides are rescaled by the prefactor first, otherwise
// they are tiny and a truncated or scale-free comparison cannot tell them apart.
// The correction vanishes for some m, s, so the mutation flips the prefactor sign.
Outcome shift_a(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m"), a = integer(P, "a");
  const ExpRational mr(m), ar(a), s = rat(P, "s");
  const SignVariant v = sign_of(P);
  const long va = v == SignVariant::minus ? pm1(a) : 1;
  const PhiParams pp = phi_params(m, s, v);
  const long n = a * m;

  if (P.at("mode") == "numeric") {
    return compare_numeric(
        [=](Sampler& S) {
          cplx tau = S.tau(), w1 = S.z(tau), w2 = S.z(tau);
          cplx l = phi_numeric(pp, {2.0 * tau, w1 + 2.0 * double(a) * tau, w2 - 2.0 * double(a) * tau});
          cplx corr = 0;
          for (long k = 1; k <= n; ++k) {
            double ks = double(k) - s.to_double();
            corr += numeric::e2pi(-0.5 * ks * (w1 - w2) - ks * ks / double(m) * tau) *
                    (numeric::theta(2 * ks, double(m), tau, (w1 + w2) / 2.0, v) -
                     numeric::theta(-2 * ks, double(m), tau, (w1 + w2) / 2.0, v));
          }
          cplx pre = numeric::e2pi(0.5 * double(m * a) * (w1 - w2) + double(m * a * a) * tau);
          cplx base = phi_numeric(pp, {2.0 * tau, w1, w2});
          cplx r = double(mut ? -va : va) * pre * (base - corr);
          double d = std::abs(pre) * (1 + std::abs(base) + std::abs(corr));
          l /= d;
          r /= d;
          return Sample{l, r, {{"tau", cj(tau)}, {"z1", cj(w1)}, {"z2", cj(w2)}}};
        },
        *o.points, *o.tol, o.seed);
  }

  return compare_symbolic(
      [=](const ExpRational& T) {
        const ExpRational pre = mr * ar / 2 + mr * ar * ar;
        QXSeries lhs = mono(phi_symbolic(pp, 2, numerator_arg1(2 * a), numerator_arg2(2 * a), TMode::zero, T + pre),
                            CycNumber(1), -pre);
        QXSeries corr = QXSeries::zero(T);
        for (long k = 1; k <= n; ++k) {
          ExpRational ks = ExpRational(k) - s;
          ExpRational e = -ks / 2 - ks * ks / mr;
          corr = add(corr, mono(theta_diff(ExpRational(2) * ks, mr, T - e, v), ep(ks / 2), e));
        }
        QXSeries base = phi_symbolic(pp, 2, numerator_arg1(0), numerator_arg2(0), TMode::zero, T);
        QXSeries rhs = scale(sub(base, corr), CycNumber((mut ? -va : va) * pm1(m * a)));
        return std::pair{lhs, rhs};
      },
      *o.trunc);
}

Outcome shift_t8(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m"), a = integer(P, "a");
  const ExpRational mr(m), ar(a), s = rat(P, "s");
  const SignVariant v = sign_of(P);
  const long va = v == SignVariant::minus ? pm1(a) : 1;
  const PhiParams pp = phi_params(m, s, v);
  return compare_symbolic(
      [=](const ExpRational& T) {
        QXSeries lhs = phi_symbolic(pp, 2, numerator_arg1(0), numerator_arg2(0), TMode::tau_over_8, T);
        ExpRational b = ar + ExpRational(1, 4);
        QXSeries shifted = phi_symbolic(pp, 2, numerator_arg1(2 * a), numerator_arg2(2 * a), TMode::zero, T);
        long k0 = va * pm1(m * a) * (mut ? -1 : 1);
        QXSeries rhs = mono(shifted, CycNumber(k0), -mr * b * b) + scale(finite_corr(m, a * m, s, v, T), ep(-s / 2));
        return std::pair{lhs, rhs};
      },
      *o.trunc);
}

// ------------------------------------------------------------ z = tau + 1/2

const AffineArg AT_TAU_HALF{0, 1, H};

QXSeries alternating_squares(const ExpRational& T) {  // sum_j (-1)^j q^{j^2}
  std::vector<QXSeries::Term> terms;
  for (long j = 0; ExpRational(j * j) < T; ++j) {
    terms.push_back({ExpRational(j * j), 0, CycNumber(pm1(j))});
    if (j) terms.push_back({ExpRational(j * j), 0, CycNumber(pm1(j))});
  }
  return QXSeries::from_terms(terms, T);
}

Outcome nonzero_below(const QXSeries& f, const ExpRational& Q, const std::string& label) {
  Outcome out;
  out.trunc = Q;
  auto v = f.valuation();
  out.pass = v && *v < Q && !f.empty();
  if (!out.pass) out.witness = {{"item", label}, {"reason", "vanishes below q^" + Q.str()}};
  return out;
}

Outcome theta_eval(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m");
  const ExpRational Q = *o.trunc;
  Outcome eq = compare_symbolic_items(
      {{"1i", [](const ExpRational& T) { return std::pair{th(0, 1, T, SignVariant::plus, AT_TAU_HALF), QXSeries::zero(T)}; }},
       {"1ii", [=](const ExpRational& T) {
          return std::pair{th(1, 1, T, SignVariant::plus, AT_TAU_HALF),
                           mono(alternating_squares(T + ExpRational(1, 4)), mut ? I : MINUS_I, ExpRational(-1, 4))};
        }},
       {"2ii", [](const ExpRational& T) {
          QXSeries plus = euler_product(EulerKind::one_plus, T + ExpRational(3, 8));
          QXSeries prod = euler_product(EulerKind::one_minus, T + ExpRational(3, 8)) * plus * plus;
          return std::pair{vartheta(VarthetaKind::v11, 1, AT_TAU_HALF, T), mono(prod, CycNumber(-2), ExpRational(-3, 8))};
        }},
       {"b", [=](const ExpRational& T) {
          QXSeries t01 = th(0, 1, T, SignVariant::plus, AT_TAU_HALF), acc = QXSeries::zero(T);
          // each product is x-free; tagging the j-th one with x^j keeps them apart
          for (long j = 1; j <= m - 1; ++j) {
            QXSeries g = theta_diff(j, m, T, SignVariant::plus, AT_TAU_HALF) * t01;
            acc = add(acc, mono(g, CycNumber(1), 0, ExpRational(j)));
          }
          return std::pair{acc, QXSeries::zero(T)};
        }}},
      Q);
  if (!eq.pass) return eq;
  QXSeries t11 = th(1, 1, Q + 8, SignVariant::plus, AT_TAU_HALF);
  QXSeries c = power(t11, static_cast<int>(m - 1)) * vartheta(VarthetaKind::v11, 1, AT_TAU_HALF, Q + 8);
  return nonzero_below(c, Q, "c");
}

// The two readings of vartheta11 = i(theta_{1,2} - theta_{-1,2}): identically in z,
// and after evaluation at z = tau + 1/2.
Outcome vartheta_reading(const RunOptions& o, bool mut, const AffineArg& arg) {
  return compare_symbolic(
      [=](const ExpRational& T) {
        return std::pair{vartheta(VarthetaKind::v11, 1, arg, T),
                         scale(theta_diff(1, 2, T, SignVariant::plus, arg), mut ? MINUS_I : I)};
      },
      *o.trunc);
}

// ------------------------------------------------------------ product identities

Outcome quot_close(const Params& P, const RunOptions& o, bool mut) {
  const long m = integer(P, "m");
  const ExpRational M(m + 2), L((m + 1) * (m + 2)), m1(m + 1);
  auto rsum = [=](const ExpRational& base, long step, long odd, long mult_sign, const ExpRational& T) {
    QXSeries acc = QXSeries::zero(T);
    for (long r = 0; r < m + 2; ++r) {
      ExpRational jr = base + ExpRational(mult_sign * (2 * r + odd));
      ExpRational jl = H - ExpRational(step * r + odd) * m1;
      acc = add(acc, th(jr, M, T) * th0(jl, L, SignVariant::plus, T));
    }
    return acc;
  };
  Outcome eq = compare_symbolic_items(
      {{"a", [=](const ExpRational& T) {
          QXSeries r = rsum(H, 2, 0, 1, T);
          return std::pair{th(0, 1, T) * th(H, m1, T), mut ? -r : r};
        }},
       {"b", [=](const ExpRational& T) { return std::pair{th(0, 1, T) * th(-H, m1, T), rsum(-H, 2, 0, -1, T)}; }},
       {"c", [=](const ExpRational& T) { return std::pair{th(1, 1, T) * th(H, m1, T), rsum(H, 2, 1, 1, T)}; }},
       {"d", [=](const ExpRational& T) { return std::pair{th(1, 1, T) * th(-H, m1, T), rsum(-H, 2, 1, -1, T)}; }}},
      *o.trunc);
  if (!eq.pass || mut) return eq;

  // the memberships these identities prove
  SpanOptions so = span_options(o);
  std::vector<SpanCheck> checks;
  struct Item { const char* label; long theta_j; ExpRational s_from, s_to; };
  for (const Item& it : {Item{"theta01 U[m,0]", 0, 0, 0}, Item{"theta01 U[m,1/2]", 0, H, H}, Item{"theta11 U[m,0]", 1, 0, H}, Item{"theta11 U[m,1/2]", 1, H, 0}}) {
    checks.push_back({it.label, [=](const SpanOptions& opt) {
                        auto target = at_least(
                            [&](const ExpRational& T) {
                              return std::vector<QXSeries>{th(it.theta_j, 1, T) * build_U(m, it.s_from, T).front()};
                            },
                            opt.trunc);
                        auto space = at_least([&](const ExpRational& T) { return build_U(m + 1, it.s_to, T); }, opt.trunc);
                        return verdict_witness(span_contains(space, target, opt));
                      }});
  }
  Outcome sp = run_span_checks(checks, so);
  sp.trunc = eq.trunc;
  return sp;
}

std::vector<std::string> p_range() { return int_range(-2, 2); }

}  // namespace

void add_symbolic(std::vector<CatalogEntry>& out) {
  auto entry = [&](std::string id, std::string summary, std::vector<ParamDomain> d,
                   std::function<Outcome(const Params&, const RunOptions&, bool)> fn, ExpRational trunc,
                   bool enabled = true) {
    CatalogEntry e;
    e.id = std::move(id);
    e.mode = "symbolic";
    e.summary = std::move(summary);
    e.domain = std::move(d);
    e.run = std::move(fn);
    e.has_mutation = true;
    e.enabled = enabled;
    e.trunc = trunc;
    out.push_back(std::move(e));
  };
  const auto m15 = int_range(1, 5), m14 = int_range(1, 4), p02 = int_range(0, 2);

  entry("THETA-SHIFT-A", "vartheta11(2tau, z +- (tau/2 - 1/2 + p tau)) as theta_{+-(p-1/2),1}",
        {dom("p", p_range())}, theta_shift_a, 8);
  entry("THETA-SHIFT-B", "level m+1 theta^{(-)} at z + ((2p+1)tau -+ 1)/(2(m+1))",
        {dom("m", m15), dom("p", p_range())}, theta_shift_b, 8);
  entry("THETA-SHIFT-B-NEG", "the down-shift item with theta^{(-)}_{-1,m+1} on the left (fails by design)",
        {dom("m", m15, {"1"}), dom("p", p_range(), {"0"})}, theta_shift_b_neg, 8, false);
  entry("THETA-SHIFT-C", "level m+1 theta^{(-)} at the z-free point (m(2p+1)tau - m)/(2(m+1))",
        {dom("m", m15), dom("p", p_range())}, theta_shift_c, 8);
  entry("SPEC-0", "theta constant times Phi^{[m/2,0]}(2tau, z + tau/2 - 1/2 + p tau, z - tau/2 + 1/2 - p tau, 0)",
        {dom("m", int_range(1, 6), m14), dom("p", int_range(0, 3), p02)}, spec0, 8);
  entry("SPEC-H", "theta constant times Phi^{[m/2,1/2]} at the same point",
        {dom("m", int_range(1, 6), m14), dom("p", int_range(0, 3), p02)}, spech, 8);
  entry("SHIFT-A", "Phi^{(+-)[m/2,s]}(2tau, z1 + 2a tau, z2 - 2a tau, 0) against the unshifted function",
        {dom("m", int_range(1, 4), int_range(1, 3)), dom("s", {"0", "1/2", "1"}, {"0", "1/2"}),
         dom("a", int_range(1, 3), int_range(1, 2)), dom("sign", {"plus", "minus"}),
         dom("mode", {"symbolic", "numeric"})},
        shift_a, 8);
  // Both sides carry |q|^{m a^2} while the summands are O(1): doubles cannot resolve a >= 2.
  out.back().valid = [](const Params& P) { return P.at("mode") != "numeric" || integer(P, "a") == 1; };
  out.back().valid_text = "a = 1 in numeric mode";
  out.back().points = 10;
  out.back().tol = 1e-9;
  entry("SHIFT-T8", "Phi^{(+-)[m/2,s]}(2tau, z1, z2, tau/8) against the 2a tau shift; a = 0 is q^{-m/16} Phi(.., 0)",
        {dom("m", m14), dom("s", {"0", "1/2", "1"}, {"0", "1/2"}), dom("a", int_range(0, 3), int_range(0, 2)),
         dom("sign", {"plus", "minus"})},
        shift_t8, 8);
  entry("NUM-0", "explicit formula for the numerator N(m, 0)",
        {dom("m", int_range(1, 6), m14), dom("p", int_range(0, 3), p02)}, num0, 10);
  entry("NUM-H", "explicit formula for the numerator N(m, 1/2)",
        {dom("m", int_range(1, 6), m14), dom("p", int_range(0, 3), p02)}, numh, 10);
  entry("THETA-EVAL",
        "theta_{0,1}, theta_{1,1}, vartheta11 at z = tau + 1/2; theta_{0,1} Theta^[m] vanishes there, "
        "theta_{1,1}^{m-1} vartheta11 does not",
        {dom("m", int_range(2, 5), int_range(2, 4))}, theta_eval, 12);
  entry("THETA-EVAL-2I-R1", "vartheta11 = i(theta_{1,2} - theta_{-1,2}) identically in z",
        {}, [](const Params&, const RunOptions& o, bool mut) { return vartheta_reading(o, mut, AffineArg{}); }, 12, false);
  entry("THETA-EVAL-2I-R2", "vartheta11 = i(theta_{1,2} - theta_{-1,2}) at z = tau + 1/2",
        {}, [](const Params&, const RunOptions& o, bool mut) { return vartheta_reading(o, mut, AT_TAU_HALF); }, 12, false);
  entry("QUOT-CLOSE",
        "product decompositions of theta_{0,1} theta_{+-1/2,m+1} and theta_{1,1} theta_{+-1/2,m+1}, "
        "and the resulting U^[m+1] memberships",
        {dom("m", int_range(1, 4), int_range(1, 3))}, quot_close, 12);
}

}  // namespace mockforms::cases
