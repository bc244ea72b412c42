#include <random>

#include "doctest.h"
#include "mockforms/special.hpp"
#include "oracles.hpp"

using namespace mockforms;

namespace {

QXSeries q_poly(const std::vector<long>& c, long trunc) {
  std::vector<QXSeries::Term> t;
  for (std::size_t i = 0; i < c.size(); ++i) t.push_back({ExpRational(long(i)), 0, CycNumber(c[i])});
  return QXSeries::from_terms(t, ExpRational(trunc));
}

QXSeries random_series(std::mt19937_64& rng, long trunc) {
  std::vector<QXSeries::Term> t;
  for (int k = 0; k < 6; ++k)
    t.push_back({ExpRational(long(rng() % 12) - 2, 2), ExpRational(long(rng() % 5) - 2, 2),
                 cyc_add(CycNumber(mpq_class(long(rng() % 7) - 3), 4),
                         cyc_mul(CycNumber(mpq_class(long(rng() % 5)), 4), root_of_unity(1, 4, 4)))});
  return QXSeries::from_terms(t, ExpRational(trunc));
}

}  // namespace

TEST_CASE("addition: identity, cancellation, precision") {
  QXSeries f = theta(0, 1, 5);
  CHECK(f + QXSeries() == f);
  QXSeries m = QXSeries::monomial(1, ExpRational(1, 2), 1, ExpRational(3));
  QXSeries z = m + (-m);
  CHECK(z.empty());
  CHECK(*z.trunc() == ExpRational(3));
  QXSeries g = QXSeries::monomial(1, 0, 0, ExpRational(5));
  CHECK(*(QXSeries::monomial(1, 0, 0, ExpRational(3)) + g).trunc() == ExpRational(3));
}

TEST_CASE("multiplication") {
  QXSeries a = QXSeries::monomial(1, ExpRational(1, 4), ExpRational(1, 2));
  QXSeries b = QXSeries::monomial(1, ExpRational(1, 4), ExpRational(-1, 2));
  CHECK(a * b == QXSeries::monomial(1, ExpRational(1, 2), 0));

  std::mt19937_64 rng(11);
  for (int round = 0; round < 5; ++round) {
    QXSeries f = random_series(rng, 6), g = random_series(rng, 6), h = random_series(rng, 6);
    QXSeries lhs = f * (g + h), rhs = f * g + f * h;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Euler product times the partition series is 1") {
  QXSeries prod = euler_product(EulerKind::one_minus, 12);
  QXSeries inv = q_poly(oracle::partitions(12), 12);
  CHECK(equal_up_to(prod * inv, QXSeries::constant(1), 12).pass);
}

TEST_CASE("monomial scaling") {
  QXSeries f = theta(ExpRational(1, 2), ExpRational(3, 2), 6);
  CHECK(mono_scale(f, 1, 0, 0) == f);
  CycNumber i = root_of_unity(1, 4, 4);
  CHECK(mono_scale(QXSeries::constant(1), i, ExpRational(-3, 8), 0) ==
        QXSeries::monomial(i, ExpRational(-3, 8), 0));
  QXSeries g = mono_scale(mono_scale(f, 1, ExpRational(5, 4), ExpRational(-1, 3)), 1, ExpRational(-5, 4),
                          ExpRational(1, 3));
  CHECK(g == f);
}

TEST_CASE("geometric expansions") {
  // 1/(1 + x q^{1/2})
  QXSeries g = geom_expand(1, CycNumber(-1), 1, ExpRational(1, 2), 2);
  std::vector<QXSeries::Term> want{{0, 0, 1}, {ExpRational(1, 2), 1, -1}, {1, 2, 1}, {ExpRational(3, 2), 3, -1}};
  CHECK(g == QXSeries::from_terms(want, ExpRational(2)));

  // 1/(1 - x q^{-2}) = -sum_{n>=1} x^{-n} q^{2n}
  QXSeries h = geom_expand(1, CycNumber(1), 1, -2, 6);
  std::vector<QXSeries::Term> want2{{2, -1, -1}, {4, -2, -1}};
  CHECK(h == QXSeries::from_terms(want2, ExpRational(6)));

  QXSeries one_minus_xq = QXSeries::constant(1) - QXSeries::monomial(1, 1, 1);
  CHECK(equal_up_to(one_minus_xq * geom_expand(1, CycNumber(1), 1, 1, 10), QXSeries::constant(1), 10).pass);
  CHECK_THROWS_AS(geom_expand(1, CycNumber(1), 1, 0, 4), PoleAtQZero);
}

TEST_CASE("inverting units") {
  QXSeries m = QXSeries::monomial(1, ExpRational(1, 16), ExpRational(-1, 4));
  QXSeries mi = invert_unit(m, 8);
  CHECK(mi.term_count() == 1);
  CHECK(mi.coeff(ExpRational(-1, 16), ExpRational(1, 4)) == CycNumber(1));

  QXSeries t = theta(ExpRational(-1, 2), 1, 6);
  QXSeries p = t * invert_unit(t, 6);
  REQUIRE(p.trunc());
  CHECK(*p.trunc() >= ExpRational(5));
  CHECK(equal_up_to(p, QXSeries::constant(1), *p.trunc()).pass);

  QXSeries two = QXSeries::monomial(1, 0, ExpRational(1, 2)) + QXSeries::monomial(1, 0, ExpRational(-1, 2));
  CHECK_THROWS_AS(invert_unit(two, 4), NotAUnit);
}

TEST_CASE("comparison up to an order") {
  QXSeries f = theta(0, 1, 8);
  CHECK(equal_up_to(f, f, 8).pass);
  EqualityVerdict v = equal_up_to(f, f + QXSeries::monomial(1, 5, 1), 8);
  REQUIRE_FALSE(v.pass);
  CHECK(v.witness->q == ExpRational(5));
  CHECK(v.witness->x == ExpRational(1));
  CHECK_THROWS_AS(equal_up_to(f, f, 9), InsufficientPrecision);
}

TEST_CASE("JSON round trip and canonical form") {
  QXSeries f = theta(ExpRational(1, 2), ExpRational(3, 2), 6, SignVariant::minus) * QXSeries::constant(root_of_unity(1, 8, 8));
  nlohmann::json j = to_json(f);
  CHECK(j.at("lattice").size() == 2);
  CHECK(j.at("trunc") == "6");
  CHECK(series_from_json(j) == f);
  CHECK(to_json(series_from_json(j)).dump() == j.dump());
}

TEST_CASE("human listing is capped at 40 terms") {
  QXSeries f = theta(0, 1, 2000);
  std::string s = format_series(f, 40);
  CHECK(s.find("… (+" + std::to_string(f.term_count() - 40) + " more)") != std::string::npos);
  CHECK(format_series(theta(0, 1, 5), 40).find("more") == std::string::npos);
}

TEST_CASE("numeric evaluation of a truncated series") {
  std::complex<double> tau(0, 1.1), z(0.2, 0.1);
  QXSeries g = geom_expand(1, CycNumber(1), 1, 1, 30);
  std::complex<double> x = oracle::e(z), q = oracle::e(tau);
  CHECK(std::abs(evaluate(g, tau, z) - 1.0 / (1.0 - x * q)) < 1e-12);
}
