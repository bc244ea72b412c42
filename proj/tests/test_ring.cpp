#include <random>

#include "doctest.h"
#include "mockforms/ring.hpp"

using namespace mockforms;

TEST_CASE("rational exponents parse to canonical form") {
  CHECK(ExpRational::parse("6/8").str() == "3/4");
  CHECK(ExpRational::parse(" -2 / 4 ") == ExpRational(-1, 2));
  CHECK(ExpRational::parse("5") == ExpRational(5));
  CHECK_THROWS_AS(ExpRational::parse("x/2"), ParseError);
  CHECK_THROWS_AS(ExpRational::parse("1/0"), ParseError);
  CHECK(frac(ExpRational(-1, 4)) == ExpRational(3, 4));
}

TEST_CASE("roots of unity") {
  CycNumber i = root_of_unity(1, 4, 4);
  CHECK(cyc_mul(i, i) == CycNumber(-1));
  CHECK(cyc_add(root_of_unity(1, 3, 3), root_of_unity(2, 3, 3)) == CycNumber(-1));
  std::complex<double> z8 = embed_complex(root_of_unity(1, 8, 8));
  CHECK(std::abs(z8 - std::complex<double>(std::cos(M_PI / 4), std::sin(M_PI / 4))) < 1e-12);
  CHECK(cyc_mul(root_of_unity(1, 8, 8), root_of_unity(7, 8, 8)) == CycNumber(1));
  CHECK_THROWS_AS(root_of_unity(1, 3, 4), AmbientOrderTooSmall);
}

TEST_CASE("additive inverse of random elements") {
  std::mt19937_64 rng(3);
  for (int N : {1, 3, 4, 8, 12, 24}) {
    std::vector<mpq_class> c(euler_phi(N));
    for (auto& v : c) {
      v = mpq_class(long(rng() % 41) - 20, long(rng() % 9) + 1);
      v.canonicalize();
    }
    CycNumber x(N, c);
    CHECK(cyc_is_zero(cyc_add(x, cyc_neg(x))));
    if (!cyc_is_zero(x)) CHECK(cyc_mul(x, cyc_inverse(x)) == CycNumber(mpq_class(1), N));
  }
}

TEST_CASE("reduction in Q(zeta_12) matches polynomial division by t^4 - t^2 + 1") {
  // t^4 + t^8 reduced by hand with t^4 = t^2 - 1
  std::vector<long> p(9, 0);
  p[4] = 1;
  p[8] = 1;
  for (int d = 8; d >= 4; --d) {
    long lead = p[d];
    p[d] = 0;
    p[d - 2] += lead;
    p[d - 4] -= lead;
  }
  std::vector<mpq_class> want(p.begin(), p.begin() + 4);
  CycNumber got = cyc_add(root_of_unity(4, 12, 12), root_of_unity(8, 12, 12));
  CHECK(got == CycNumber(12, want));
  CHECK(got == CycNumber(-1));
}

TEST_CASE("lifting the ambient order") {
  CycNumber i = root_of_unity(1, 4, 4);
  CHECK(lift_order(i, 8) == root_of_unity(2, 8, 8));
  CHECK(lift_order(CycNumber(1), 12) == CycNumber(mpq_class(1), 12));
  CycNumber z = cyc_add(root_of_unity(1, 6, 6), CycNumber(mpq_class(2, 3), 6));
  CHECK(std::abs(embed_complex(lift_order(z, 24)) - embed_complex(z)) < 1e-12);
}

TEST_CASE("raw operations refuse mixed ambient orders") {
  CHECK_THROWS_AS(cyc_add(root_of_unity(1, 4, 4), root_of_unity(1, 3, 3)), OrderMismatch);
  CHECK_THROWS_AS(cyc_mul(root_of_unity(1, 4, 4), root_of_unity(1, 8, 8)), OrderMismatch);
}

TEST_CASE("zero has no inverse") { CHECK_THROWS_AS(cyc_inverse(CycNumber(mpq_class(0), 4)), ZeroDivision); }
