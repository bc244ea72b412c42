#include "doctest.h"
#include "mockforms/functions.hpp"
#include "mockforms/spans.hpp"
#include "oracles.hpp"

using namespace mockforms;
using C = std::complex<double>;

namespace {

const ExpRational H(1, 2);

PhiParams params(ExpRational m, ExpRational s, PhiPart part = PhiPart::full, SignVariant v = SignVariant::none) {
  PhiParams p;
  p.m = m;
  p.s = s;
  p.part = part;
  p.variant = v;
  return p;
}

C at(const AffineArg& a, C tau, C z) { return a.alpha.to_double() * z + a.beta.to_double() * tau + a.gamma.to_double(); }

}  // namespace

TEST_CASE("phi_numeric against the direct double sum") {
  C tau(0.1, 0.9), z1(0.3, 0.25), z2(0.65, 0.4);
  for (double m : {0.5, 1.0, 1.5})
    for (double s : {0.0, 0.5, 1.0})
      for (bool alt : {false, true}) {
        PhiParams p = params(ExpRational::parse(std::to_string(int(2 * m)) + "/2"),
                             ExpRational::parse(std::to_string(int(2 * s)) + "/2"), PhiPart::full,
                             alt ? SignVariant::minus : SignVariant::none);
        C want = oracle::phi1(m, s, tau, z1, z2, alt) - oracle::phi2(m, s, tau, z1, z2, alt);
        C got = phi_numeric(p, {tau, z1, z2});
        CHECK(std::abs(got - want) / (1 + std::abs(want)) < 1e-12);
      }
}

TEST_CASE("the two halves") {
  C tau(0, 1), z1(0.2, 0.3), z2(0.4, 0.2);
  for (ExpRational s : {ExpRational(0), H, ExpRational(1)}) {
    ExpRational m(3, 2);
    C full = phi_numeric(params(m, s), {tau, z1, z2});
    C a = phi_numeric(params(m, s, PhiPart::first), {tau, z1, z2});
    C b = phi_numeric(params(m, s, PhiPart::second), {tau, z1, z2});
    CHECK(std::abs(full - (a - b)) < 1e-12);
    // Phi_2^{[m,s]}(z1, z2) = -Phi_1^{[m,1-s]}(z2, z1)
    C b2 = phi_numeric(params(m, ExpRational(1) - s, PhiPart::first), {tau, z2, z1});
    CHECK(std::abs(b + b2) < 1e-12);
    // and the whole function is swap symmetric
    CHECK(std::abs(full - phi_numeric(params(m, s), {tau, z2, z1})) < 1e-12);
  }
}

TEST_CASE("first minus second is full, symbolically") {
  AffineArg a1{1, ExpRational(1, 3), ExpRational(1, 5)}, a2{-1, ExpRational(-2, 3), 0};
  for (long K : {1, 2}) {
    PhiParams p = params(ExpRational(3, 2), H);
    QXSeries full = phi_symbolic(p, K, a1, a2, TMode::zero, 6);
    p.part = PhiPart::first;
    QXSeries f = phi_symbolic(p, K, a1, a2, TMode::zero, 6);
    p.part = PhiPart::second;
    QXSeries g = phi_symbolic(p, K, a1, a2, TMode::zero, 6);
    CHECK(full == f - g);
  }
}

TEST_CASE("t = tau/8 multiplies by q^{-m/16} at K = 2, m' = m/2") {
  for (long m = 1; m <= 4; ++m)
    for (ExpRational s : {ExpRational(0), H}) {
      PhiParams p = params(ExpRational(m, 2), s);
      QXSeries a = phi_symbolic(p, 2, numerator_arg1(0), numerator_arg2(0), TMode::tau_over_8, 8);
      QXSeries b = phi_symbolic(p, 2, numerator_arg1(0), numerator_arg2(0), TMode::zero, 9);
      CHECK(equal_up_to(a, mono_scale(b, 1, ExpRational(-m, 16), 0), 8).pass);
    }
}

TEST_CASE("phi series against direct summation") {
  C tau(0.02, 0.8), z(0.37, 0.05);
  AffineArg a1{1, ExpRational(1, 3), 0}, a2{1, ExpRational(-1, 4), ExpRational(1, 2)};
  PhiParams p = params(ExpRational(1), H, PhiPart::full, SignVariant::minus);
  QXSeries f = phi_symbolic(p, 1, a1, a2, TMode::zero, 20);
  C want = oracle::phi1(1, 0.5, tau, at(a1, tau, z), at(a2, tau, z), true) -
           oracle::phi2(1, 0.5, tau, at(a1, tau, z), at(a2, tau, z), true);
  CHECK(std::abs(evaluate(f, tau, z) - want) / (1 + std::abs(want)) < 1e-8);
}

TEST_CASE("integral beta over K is a pole at q^0") {
  PhiParams p = params(ExpRational(1), 0);
  CHECK_THROWS_AS(phi_symbolic(p, 2, {1, 0, 0}, numerator_arg2(0), TMode::zero, 4), PoleAtQZero);
  CHECK_THROWS_AS(expand_function({"phi", {{"m", "1"}, {"s", "0"}, {"beta1", "0"}}}, 4), PoleAtQZero);
}

TEST_CASE("Kac-Peterson at a fixed point") {
  // Phi^{(-)[1/2,1/2]}_1(tau, z, -z + 2a tau, 0) = -i e^{-2 pi i a z} eta(tau)^3 / vartheta11(tau, z)
  C tau(0, 0.8), z(0.3, 0.1);
  for (int a : {0, 1, 2}) {
    C lhs = phi_numeric(params(H, H, PhiPart::first, SignVariant::minus), {tau, z, -z + 2.0 * double(a) * tau});
    C rhs = C(0, -1) * oracle::e(-double(a) * z) * std::pow(oracle::eta(tau), 3) / oracle::vartheta11(tau, z);
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-9);
  }
}

TEST_CASE("numerators at m = 1: N(1,1) theta_{0,1} = -i N(1,1/2) theta_{1,1}") {
  const ExpRational Q(12);
  QXSeries lhs = numerator(1, 1, 14) * theta(0, 1, 14);
  QXSeries rhs = scale(numerator(1, H, 14) * theta(1, 1, 14), -root_of_unity(1, 4, 4));
  CHECK(equal_up_to(lhs, rhs, Q).pass);
  // N(1,1/2) is odd under x -> 1/x, so it is not theta_{1,1} times a q-series
  SpanOptions opt;
  CHECK_FALSE(decompose_in_span(numerator(1, H, 14), {theta(1, 1, 14)}, opt).in_span);
}

TEST_CASE("N(2, 1/2) and N(2, 3/2) are independent") {
  SpanOptions opt;
  CHECK(span_dim({numerator(2, H, 14), numerator(2, ExpRational(3, 2), 14)}, opt) == 2);
}
