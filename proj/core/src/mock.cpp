#include "mockforms/mock.hpp"

#include <cmath>

namespace mockforms {

std::string to_string(PhiPart p) {
  switch (p) {
    case PhiPart::first: return "first";
    case PhiPart::second: return "second";
    default: return "full";
  }
}

PhiPart parse_phi_part(const std::string& s) {
  if (s == "full") return PhiPart::full;
  if (s == "first") return PhiPart::first;
  if (s == "second") return PhiPart::second;
  throw ParseError("part must be full, first or second");
}

namespace {

long den_of(const ExpRational& e) { return e.den_long(); }

CycNumber rou(const ExpRational& e, long N) {
  ExpRational f = frac(e);
  return root_of_unity(f.num().get_si(), f.den_long(), static_cast<int>(N));
}

// One half of Phi: sum_r c_r x^{u_r} q^{v_r} / (1 - rho x^a q^{b_r}), b_r = b0 + K r.
// The numerator data are affine/quadratic in r:
//   u_r = u1 r + u0,  v_r = v2 r^2 + v1 r + v0,  phase_r = g1 r + g0 (units of 2 pi i).
struct HalfSum {
  ExpRational u1, u0, v2, v1, v0, g1, g0;
  ExpRational a, b0, rho;
  long K;
  bool alternate;
};

QXSeries expand_half(const HalfSum& h, const ExpRational& trunc) {
  long N = 1;
  for (const auto* e : {&h.g1, &h.g0, &h.rho}) N = lcm_checked(N, den_of(*e));
  if (h.alternate) N = lcm_checked(N, 2);
  if (N > 1 << 20) throw ExponentOverflow("ambient order too large");
  const ExpRational K(h.K);

  auto v = [&](long r) { ExpRational R(r); return h.v2 * R * R + h.v1 * R + h.v0; };
  auto bq = [&](long r) { return h.b0 + K * ExpRational(r); };
  auto val = [&](long r) {
    ExpRational b = bq(r);
    return b.sign() < 0 ? v(r) - b : v(r);
  };

  // val is convex in r; find the minimiser, then walk outward.
  long r0 = (-h.v1 / (ExpRational(2) * h.v2)).floor_long();
  while (val(r0 - 1) < val(r0)) --r0;
  while (val(r0 + 1) < val(r0)) ++r0;

  CycNumber rho = rou(h.rho, N);
  CycNumber rho_inv = cyc_inverse(rho);
  std::vector<QXSeries::Term> terms;
  auto emit = [&](long r) {
    if (val(r) >= trunc) return false;
    ExpRational R(r);
    ExpRational b = bq(r);
    if (b.sign() == 0) throw PoleAtQZero("denominator has a pole at q^0 (r = " + std::to_string(r) + ")");
    ExpRational u = h.u1 * R + h.u0, vr = v(r);
    CycNumber c = rou(h.g1 * R + h.g0, N);
    if (h.alternate && (r % 2 != 0)) c = cyc_neg(c);
    if (b.sign() > 0) {
      for (long n = 0;; ++n) {
        ExpRational e = vr + ExpRational(n) * b;
        if (e >= trunc) break;
        terms.push_back({e, u + ExpRational(n) * h.a, c});
        c = cyc_mul(c, rho);
      }
    } else {
      c = cyc_neg(cyc_mul(c, rho_inv));
      for (long n = 1;; ++n) {
        ExpRational e = vr - ExpRational(n) * b;
        if (e >= trunc) break;
        terms.push_back({e, u - ExpRational(n) * h.a, c});
        c = cyc_mul(c, rho_inv);
      }
    }
    return true;
  };
  for (long r = r0; emit(r); ++r) {
  }
  for (long r = r0 - 1; emit(r); --r) {
  }
  return QXSeries::from_terms(terms, trunc, 1, 1, static_cast<int>(N));
}

}  // namespace

QXSeries phi_symbolic(const PhiParams& p, long K, const AffineArg& a1, const AffineArg& a2, TMode t,
                      const ExpRational& trunc) {
  if (p.m.sign() <= 0) throw InvalidLevel("Phi needs m > 0, got " + p.m.str());
  if (K <= 0) throw InvalidLevel("tau scale K must be positive");
  const ExpRational& m = p.m;
  const ExpRational& s = p.s;
  const ExpRational Kr(K);
  bool alt = p.variant == SignVariant::minus;
  // q-exponent shift from the t argument
  ExpRational tq = t == TMode::tau_over_8 ? -m / ExpRational(8) : ExpRational(0);
  ExpRational inner = trunc - tq;

  QXSeries out = QXSeries::zero(trunc);
  if (p.part != PhiPart::second) {
    if ((a1.beta / Kr).is_integer()) throw PoleAtQZero("first part: beta1/K is an integer");
    HalfSum h{m * (a1.alpha + a2.alpha), s * a1.alpha,
              Kr * m, Kr * s + m * (a1.beta + a2.beta), s * a1.beta,
              m * (a1.gamma + a2.gamma), s * a1.gamma,
              a1.alpha, a1.beta, a1.gamma, K, alt};
    out = expand_half(h, inner);
  }
  if (p.part != PhiPart::first) {
    if ((a2.beta / Kr).is_integer()) throw PoleAtQZero("second part: beta2/K is an integer");
    HalfSum h{-m * (a1.alpha + a2.alpha), -s * a2.alpha,
              Kr * m, Kr * s - m * (a1.beta + a2.beta), -s * a2.beta,
              -m * (a1.gamma + a2.gamma), -s * a2.gamma,
              -a2.alpha, -a2.beta, -a2.gamma, K, alt};
    QXSeries second = expand_half(h, inner);
    out = p.part == PhiPart::second ? second : sub(out, second);
  }
  if (tq.sign() != 0) out = mono_scale(out, CycNumber(1), tq, ExpRational(0));
  return out;
}

std::complex<double> phi_numeric(const PhiParams& p, const NumericPoint& pt, double tol) {
  using cplx = std::complex<double>;
  if (pt.tau.imag() <= 0) throw InvalidLevel("Im tau must be positive");
  if (p.m.sign() <= 0) throw InvalidLevel("Phi needs m > 0");
  const double m = p.m.to_double(), s = p.s.to_double();
  const double it = pt.tau.imag();
  bool alt = p.variant == SignVariant::minus;

  auto half = [&](cplx zs, cplx zd, double dir) {
    // sum_r sign^r e(dir m r (z1+z2) + dir s zs + (m r^2 + s r) tau) / (1 - e(dir zd + r tau))
    cplx zsum = pt.z1 + pt.z2;
    double lin = dir * m * zsum.imag() + s * it;
    double rstar = -lin / (2 * m * it);
    cplx acc = 0;
    auto term = [&](long r) {
      cplx den = 1.0 - numeric::e2pi(dir * zd + double(r) * pt.tau);
      if (std::abs(den) < 1e-6) throw NearPole("denominator within 1e-6 of zero");
      cplx num = numeric::e2pi(dir * m * double(r) * zsum + dir * s * zs + (m * r * r + s * r) * pt.tau);
      if (alt && (r % 2 != 0)) num = -num;
      return num / den;
    };
    for (int d : {1, -1}) {
      long r = d > 0 ? 0 : -1;
      int small = 0;
      for (;; r += d) {
        cplx v = term(r);
        acc += v;
        bool past = d > 0 ? r > rstar : r < rstar;
        if (past && std::abs(v) < tol * 1e-2) {
          if (++small >= 3) break;
        } else {
          small = 0;
        }
        if (std::abs(r) > 100000) throw InvalidLevel("Phi sum does not converge");
      }
    }
    return acc;
  };

  cplx v = 0;
  if (p.part != PhiPart::second) v += half(pt.z1, pt.z1, 1.0);
  if (p.part == PhiPart::full) v -= half(pt.z2, pt.z2, -1.0);
  if (p.part == PhiPart::second) v = half(pt.z2, pt.z2, -1.0);
  if (pt.t != cplx(0, 0)) v *= numeric::e2pi(-m * pt.t);
  return v;
}

AffineArg numerator_arg1(long p) { return {ExpRational(1), ExpRational(1, 2) + ExpRational(p), ExpRational(-1, 2)}; }
AffineArg numerator_arg2(long p) { return {ExpRational(1), ExpRational(-1, 2) - ExpRational(p), ExpRational(1, 2)}; }

QXSeries numerator(long m, const ExpRational& s, const ExpRational& trunc, long p) {
  if (m <= 0) throw InvalidLevel("numerator needs m >= 1");
  PhiParams pp;
  pp.m = ExpRational(m, 2);
  pp.s = s;
  return phi_symbolic(pp, 2, numerator_arg1(p), numerator_arg2(p), TMode::tau_over_8, trunc);
}

}  // namespace mockforms
