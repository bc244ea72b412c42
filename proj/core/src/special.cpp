#include "mockforms/special.hpp"

#include <cmath>
#include <sstream>

namespace mockforms {

std::string AffineArg::str() const {
  std::ostringstream os;
  os << alpha.str() << "*z + " << beta.str() << "*tau + " << gamma.str();
  return os.str();
}

QXSeries theta(const ThetaSpec& spec, const ExpRational& trunc) {
  if (spec.M.sign() <= 0) throw InvalidLevel("theta level must be positive, got " + spec.M.str());
  if (spec.K <= 0) throw InvalidLevel("tau scale K must be positive");
  const ExpRational K(spec.K);
  const ExpRational& M = spec.M;
  const auto& [alpha, beta, gamma] = spec.arg;
  ExpRational c0 = spec.j / (ExpRational(2) * M);
  // exponent f(k) = K M k^2 + M beta k, minimal at k = -beta/(2K)
  ExpRational kstar = -beta / (ExpRational(2) * K);
  long nstar = (kstar - c0).floor_long();
  std::vector<QXSeries::Term> terms;
  auto emit = [&](long n) {
    ExpRational k = c0 + ExpRational(n);
    ExpRational qe = K * M * k * k + M * beta * k;
    if (qe >= trunc) return false;
    CycNumber c = gamma.sign() == 0 ? CycNumber(1) : root_of_unity(M * k * gamma);
    if (spec.sign == SignVariant::minus && (n % 2 != 0)) c = cyc_neg(c);
    terms.push_back({qe, M * k * alpha, c});
    return true;
  };
  for (long n = nstar + 1; emit(n); ++n) {
  }
  for (long n = nstar; emit(n); --n) {
  }
  return QXSeries::from_terms(terms, trunc);
}

QXSeries theta(const ExpRational& j, const ExpRational& M, const ExpRational& trunc, SignVariant sign) {
  ThetaSpec s;
  s.j = j;
  s.M = M;
  s.sign = sign;
  return theta(s, trunc);
}

QXSeries theta_diff(const ExpRational& j, const ExpRational& M, const ExpRational& trunc, SignVariant sign,
                    const AffineArg& arg) {
  ThetaSpec a{j, M, sign, 1, arg};
  ThetaSpec b{-j, M, sign, 1, arg};
  return sub(theta(a, trunc), theta(b, trunc));
}

QXSeries theta_at_zero(ThetaSpec spec, const ExpRational& trunc) {
  spec.arg = AffineArg::zero();
  return theta(spec, trunc);
}

QXSeries eta(long K, const ExpRational& trunc) {
  if (K <= 0) throw InvalidLevel("eta needs K > 0");
  std::vector<QXSeries::Term> terms;
  auto emit = [&](long n) {
    ExpRational e = ExpRational(K, 24) + ExpRational(K) * ExpRational(n * (3 * n - 1), 2);
    if (e >= trunc) return false;
    terms.push_back({e, ExpRational(0), CycNumber(n % 2 == 0 ? 1 : -1)});
    return true;
  };
  for (long n = 0; emit(n); ++n) {
  }
  for (long n = -1; emit(n); --n) {
  }
  return QXSeries::from_terms(terms, trunc, 24);
}

VarthetaKind parse_vartheta_kind(const std::string& s) {
  if (s == "11") return VarthetaKind::v11;
  if (s == "10") return VarthetaKind::v10;
  if (s == "01") return VarthetaKind::v01;
  throw ParseError("vartheta kind must be 11, 10 or 01");
}

QXSeries vartheta(VarthetaKind kind, long K, const AffineArg& arg, const ExpRational& trunc) {
  ThetaSpec s;
  s.M = ExpRational(1, 2);
  s.K = K;
  s.arg = arg.scaled(ExpRational(2));
  switch (kind) {
    case VarthetaKind::v11:
      s.j = ExpRational(1, 2);
      s.sign = SignVariant::minus;
      return scale(theta(s, trunc), root_of_unity(1, 4, 4));
    case VarthetaKind::v10:
      s.j = ExpRational(1, 2);
      s.sign = SignVariant::plus;
      return scale(theta(s, trunc), CycNumber(mpq_class(1, 2)));
    default:
      s.j = ExpRational(0);
      s.sign = SignVariant::minus;
      return theta(s, trunc);
  }
}

QXSeries euler_product(EulerKind kind, const ExpRational& trunc) {
  QXSeries r = QXSeries::constant(CycNumber(1));
  if (trunc.sign() <= 0) return r;  // empty product
  long sgn = kind == EulerKind::one_minus ? -1 : 1;
  for (long n = 1; ExpRational(n) < trunc; ++n) {
    QXSeries f = QXSeries::from_terms(
        {{ExpRational(0), ExpRational(0), CycNumber(1)}, {ExpRational(n), ExpRational(0), CycNumber(sgn)}},
        std::nullopt);
    r = mul(r, f).truncated(trunc);
  }
  return r.is_exact() ? r.truncated(trunc) : r;
}

namespace numeric {

cplx e2pi(cplx w) { return std::exp(cplx(0, 2 * M_PI) * w); }

cplx theta(double j, double M, cplx tau, cplx z, SignVariant sign) {
  double c0 = j / (2 * M);
  double kstar = -z.imag() / (2 * tau.imag());
  long n0 = static_cast<long>(std::floor(kstar - c0));
  auto logmag = [&](double k) { return -2 * M_PI * M * (k * k * tau.imag() + k * z.imag()); };
  double peak = std::max(logmag(c0 + n0), logmag(c0 + n0 + 1));
  cplx sum = 0;
  auto term = [&](long n) {
    double k = c0 + n;
    cplx t = e2pi(M * k * k * tau + M * k * z);
    if (sign == SignVariant::minus && (n % 2 != 0)) t = -t;
    return t;
  };
  for (long n = n0 + 1;; ++n) {
    sum += term(n);
    if (logmag(c0 + n) < peak - 46) break;  // e^-46 ~ 1e-20
  }
  for (long n = n0;; --n) {
    sum += term(n);
    if (logmag(c0 + n) < peak - 46) break;
  }
  return sum;
}

cplx eta(cplx tau) {
  cplx q = e2pi(tau);
  cplx p = e2pi(tau / 24.0);
  cplx qn = q;
  for (int n = 1; n < 100000; ++n) {
    p *= (1.0 - qn);
    if (std::abs(qn) < 1e-20) break;
    qn *= q;
  }
  return p;
}

cplx vartheta(VarthetaKind kind, cplx tau, cplx z) {
  switch (kind) {
    case VarthetaKind::v11: return cplx(0, 1) * theta(0.5, 0.5, tau, 2.0 * z, SignVariant::minus);
    case VarthetaKind::v10: return 0.5 * theta(0.5, 0.5, tau, 2.0 * z, SignVariant::plus);
    default: return theta(0.0, 0.5, tau, 2.0 * z, SignVariant::minus);
  }
}

}  // namespace numeric

}  // namespace mockforms
