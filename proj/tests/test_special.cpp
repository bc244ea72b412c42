#include "doctest.h"
#include "mockforms/special.hpp"
#include "oracles.hpp"

using namespace mockforms;

namespace {

const ExpRational H(1, 2);

QXSeries terms(std::vector<QXSeries::Term> t, long trunc) { return QXSeries::from_terms(t, ExpRational(trunc)); }

QXSeries eta_quotient(long K1, int p1, long K2, long trunc) {  // eta(K1)^p1 / eta(K2)
  QXSeries num = power(eta(K1, trunc + 2), p1);
  return (num * invert_unit(eta(K2, trunc + 2), trunc + 2)).truncated(trunc);
}

}  // namespace

TEST_CASE("theta_{0,1} and theta_{1,1} against direct summation") {
  CHECK(theta(0, 1, 5) == terms({{0, 0, 1}, {1, 1, 1}, {1, -1, 1}, {4, 2, 1}, {4, -2, 1}}, 5));
  CHECK(theta(1, 1, 3) == terms({{ExpRational(1, 4), H, 1}, {ExpRational(1, 4), -H, 1},
                                 {ExpRational(9, 4), ExpRational(3, 2), 1}, {ExpRational(9, 4), ExpRational(-3, 2), 1}},
                                3));
}

TEST_CASE("theta_{0,1} vanishes at z = tau + 1/2") {
  ThetaSpec s;
  s.arg = {0, 1, H};
  QXSeries f = theta(s, 12);
  CHECK(f.empty());
  CHECK(*f.trunc() >= ExpRational(11));
}

TEST_CASE("theta at z = 0") {
  CHECK(theta_at_zero({0, 1}, 5) == terms({{0, 0, 1}, {1, 0, 2}, {4, 0, 2}}, 5));
  CHECK(theta_at_zero({0, 1, SignVariant::minus}, 5) == terms({{0, 0, 1}, {1, 0, -2}, {4, 0, 2}}, 5));
  for (ExpRational j : {ExpRational(1, 2), ExpRational(1), ExpRational(3, 2)})
    CHECK(theta_at_zero({j, ExpRational(5, 2)}, 10) == theta_at_zero({-j, ExpRational(5, 2)}, 10));
}

TEST_CASE("eta: pentagonal series and naive product") {
  CHECK(eta(1, 6) == mono_scale(terms({{0, 0, 1}, {1, 0, -1}, {2, 0, -1}, {5, 0, 1}}, 6), 1, ExpRational(1, 24), 0)
                         .truncated(eta(1, 6).trunc().value()));
  auto naive = oracle::euler(20);
  QXSeries e = eta(1, 20);
  for (int n = 0; n + 1 < 20; ++n) CHECK(e.coeff(ExpRational(24 * n + 1, 24), 0) == CycNumber(naive[n]));
  QXSeries e2 = eta(2, 20), e1 = eta(1, 10);
  for (int n = 0; n < 9; ++n) CHECK(e2.coeff(ExpRational(1, 12) + ExpRational(2 * n), 0) == e1.coeff(ExpRational(1, 24) + ExpRational(n), 0));
}

TEST_CASE("Euler products") {
  CHECK(euler_product(EulerKind::one_minus, 4) == terms({{0, 0, 1}, {1, 0, -1}, {2, 0, -1}}, 4));
  QXSeries both = euler_product(EulerKind::one_plus, 12) * euler_product(EulerKind::one_minus, 12);
  auto want = oracle::euler(12, 2);
  for (int n = 0; n < 12; ++n) CHECK(both.coeff(n, 0) == CycNumber(want[n]));
  CHECK(equal_up_to(euler_product(EulerKind::one_minus, 0), QXSeries::constant(1), 0).pass);
}

TEST_CASE("vartheta_11 leading term") {
  QXSeries v = vartheta(VarthetaKind::v11, 1, {}, 4);
  CHECK(*v.valuation() == ExpRational(1, 8));
  CycNumber a = v.coeff(ExpRational(1, 8), H), b = v.coeff(ExpRational(1, 8), -H);
  CHECK_FALSE(cyc_is_zero(a));
  CHECK(a == -b);
}

TEST_CASE("vartheta_10 at z = a tau is q^{-a^2/2} eta(2tau)^2/eta(tau)") {
  for (long a : {0, 1, 2}) {
    QXSeries lhs = vartheta(VarthetaKind::v10, 1, {0, a, 0}, 10);
    QXSeries rhs = mono_scale(eta_quotient(2, 2, 1, 12), 1, ExpRational(-a * a, 2), 0);
    CHECK(equal_up_to(lhs, rhs, 10).pass);
  }
}

TEST_CASE("vartheta_01 at z = a tau on the doubled lattice") {
  // vartheta01(2 tau, 2a tau) = (-1)^a q^{-a^2} eta(tau)^2 / eta(2 tau)
  for (long a : {0, 1, 2}) {
    QXSeries lhs = vartheta(VarthetaKind::v01, 2, {0, 2 * a, 0}, 10);
    QXSeries rhs = mono_scale(eta_quotient(1, 2, 2, 14), CycNumber(a % 2 ? -1 : 1), ExpRational(-a * a), 0);
    CHECK(equal_up_to(lhs, rhs, 10).pass);
  }
}

TEST_CASE("numeric theta, eta, vartheta against direct sums") {
  using C = std::complex<double>;
  for (C tau : {C(0.1, 0.7), C(-0.3, 1.1)})
    for (C z : {C(0.2, 0.1), C(0.7, -0.3)}) {
      CHECK(std::abs(numeric::theta(0.5, 1.5, tau, z) - oracle::theta(0.5, 1.5, tau, z)) < 1e-12);
      CHECK(std::abs(numeric::theta(1, 2, tau, z, SignVariant::minus) - oracle::theta(1, 2, tau, z, true)) < 1e-12);
      CHECK(std::abs(numeric::vartheta(VarthetaKind::v11, tau, z) - oracle::vartheta11(tau, z)) < 1e-12);
      CHECK(std::abs(numeric::eta(tau) - oracle::eta(tau)) < 1e-12);
    }
}

TEST_CASE("series and numeric theta agree") {
  std::complex<double> tau(0.05, 0.9), z(0.3, 0.1);
  ThetaSpec s{ExpRational(-1, 2), ExpRational(7, 2), SignVariant::minus, 2, {2, H, ExpRational(1, 3)}};
  std::complex<double> arg = 2.0 * z + 0.5 * tau + 1.0 / 3;
  CHECK(std::abs(evaluate(theta(s, 30), tau, z) - oracle::theta(-0.5, 3.5, 2.0 * tau, arg, true)) < 1e-10);
}
