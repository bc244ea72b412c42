#pragma once

#include <complex>

#include "mockforms/special.hpp"

namespace mockforms {

enum class PhiPart { full, first, second };

// Phi^{(variant)[m,s]}; Phi = Phi_1 - Phi_2 with
//   Phi_1 = sum_r sign^r e^{2 pi i m r(z1+z2) + 2 pi i s z1} q^{m r^2 + s r} / (1 - e^{2 pi i z1} q^r)
//   Phi_2 = sum_r sign^r e^{-2 pi i m r(z1+z2) - 2 pi i s z2} q^{m r^2 + s r} / (1 - e^{-2 pi i z2} q^r)
// and an overall factor e^{-2 pi i m t}.
struct PhiParams {
  ExpRational m{1};
  ExpRational s{0};
  SignVariant variant = SignVariant::none;
  PhiPart part = PhiPart::full;
};

std::string to_string(PhiPart p);
PhiPart parse_phi_part(const std::string& s);

enum class TMode { zero, tau_over_8 };

// Phi(K tau, arg1, arg2, t) as an exact q-series. Needs beta1/K (first part) and
// beta2/K (second part) non-integral, otherwise some denominator has a pole at q^0.
QXSeries phi_symbolic(const PhiParams& p, long K, const AffineArg& arg1, const AffineArg& arg2, TMode t,
                      const ExpRational& trunc);

struct NumericPoint {
  std::complex<double> tau;
  std::complex<double> z1;
  std::complex<double> z2;
  std::complex<double> t{0.0, 0.0};
};

// Direct summation; terms are dropped once past the peak and below tol/100.
std::complex<double> phi_numeric(const PhiParams& p, const NumericPoint& pt, double tol = 1e-15);

// Phi^{[m/2,s]}(2 tau, z + tau/2 - 1/2 + p tau, z - tau/2 + 1/2 - p tau, tau/8).
QXSeries numerator(long m, const ExpRational& s, const ExpRational& trunc, long p = 0);

// The two affine arguments used by numerator().
AffineArg numerator_arg1(long p);
AffineArg numerator_arg2(long p);

}  // namespace mockforms
