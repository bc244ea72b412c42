#pragma once

#include <complex>
#include <string>

#include "mockforms/series.hpp"

namespace mockforms {

// z-argument alpha*z + beta*tau + gamma.
struct AffineArg {
  ExpRational alpha{1};
  ExpRational beta{0};
  ExpRational gamma{0};

  static AffineArg identity() { return {}; }
  static AffineArg zero() { return {ExpRational(0), ExpRational(0), ExpRational(0)}; }
  AffineArg scaled(const ExpRational& c) const { return {alpha * c, beta * c, gamma * c}; }
  friend AffineArg operator+(const AffineArg& a, const AffineArg& b) {
    return {a.alpha + b.alpha, a.beta + b.beta, a.gamma + b.gamma};
  }
  friend AffineArg operator-(const AffineArg& a) { return {-a.alpha, -a.beta, -a.gamma}; }
  std::string str() const;
};

// theta^{(sign)}_{j,M}(K tau, arg) = sum_{k in j/2M + Z} sign^{k - j/2M} q^{K M k^2} e^{2 pi i M k arg}.
struct ThetaSpec {
  ExpRational j{0};
  ExpRational M{1};
  SignVariant sign = SignVariant::plus;
  long K = 1;
  AffineArg arg;
};

QXSeries theta(const ThetaSpec& spec, const ExpRational& trunc);
// Shorthand for theta_{j,M}(tau, z).
QXSeries theta(const ExpRational& j, const ExpRational& M, const ExpRational& trunc,
               SignVariant sign = SignVariant::plus);
// [theta_{j,M} - theta_{-j,M}](tau, arg)
QXSeries theta_diff(const ExpRational& j, const ExpRational& M, const ExpRational& trunc,
                    SignVariant sign = SignVariant::plus, const AffineArg& arg = {});

// theta with alpha = beta = gamma = 0.
QXSeries theta_at_zero(ThetaSpec spec, const ExpRational& trunc);

// eta(K tau) = q^{K/24} prod (1 - q^{K n}), via the pentagonal-number series.
QXSeries eta(long K, const ExpRational& trunc);

enum class VarthetaKind { v11, v10, v01 };
VarthetaKind parse_vartheta_kind(const std::string& s);

// vartheta_11 = i sum (-1)^n q^{(n+1/2)^2/2} x^{n+1/2}
// vartheta_10 = (1/2) sum q^{(n+1/2)^2/2} x^{n+1/2}   (calibrated; see README)
// vartheta_01 = sum (-1)^n q^{n^2/2} x^n
QXSeries vartheta(VarthetaKind kind, long K, const AffineArg& arg, const ExpRational& trunc);

enum class EulerKind { one_minus, one_plus };
// prod_{n >= 1} (1 -+ q^n), naive truncated product.
QXSeries euler_product(EulerKind kind, const ExpRational& trunc);

// ------------------------------------------------------------------ numeric

namespace numeric {

using cplx = std::complex<double>;

// e^{2 pi i w}
cplx e2pi(cplx w);

// Direct summation of theta^{(sign)}_{j,M}(tau, z); j, M as doubles.
cplx theta(double j, double M, cplx tau, cplx z, SignVariant sign = SignVariant::plus);
cplx eta(cplx tau);
cplx vartheta(VarthetaKind kind, cplx tau, cplx z);

}  // namespace numeric

}  // namespace mockforms
