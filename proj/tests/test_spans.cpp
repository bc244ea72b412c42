#include "doctest.h"
#include "mockforms/spans.hpp"

using namespace mockforms;

namespace {

const ExpRational H(1, 2);
const ExpRational T(14);  // a little above the default trunc 12

// expected dimensions: m/2 or (m+1)/2 for s = 0, m/2 + 1 or (m+1)/2 for s = 1/2
std::size_t expected_dim(long m, bool half) {
  if (m % 2 == 0) return half ? m / 2 + 1 : m / 2;
  return (m + 1) / 2;
}

}  // namespace

TEST_CASE("generator counts") {
  CHECK(build_Theta(2, Parity::all, T).size() == 1);
  CHECK(build_Theta(1, Parity::all, T).empty());
  auto even4 = build_Theta(4, Parity::even, T);
  REQUIRE(even4.size() == 1);
  CHECK(even4[0] == theta_diff(2, 4, T));
  CHECK(build_V(2, 0, T).size() == 1);
  CHECK(build_V(2, H, T).size() == 2);
  CHECK(build_U(1, 0, T).size() == 1);
  for (long m = 1; m <= 4; ++m)
    for (bool half : {false, true}) CHECK(build_V(m, half ? H : ExpRational(0), T).size() == expected_dim(m, half));
}

TEST_CASE("decomposing a generator") {
  SpanOptions opt;
  auto gens = build_Theta(3, Parity::all, T);
  REQUIRE(gens.size() == 2);
  Decomposition d0 = decompose_in_span(gens[0], gens, opt);
  CHECK(d0.in_span);
  CHECK(equal_up_to(d0.coeffs[0], QXSeries::constant(1), opt.trunc - opt.guard).pass);
  CHECK(equal_up_to(d0.coeffs[1], QXSeries::zero(opt.trunc), opt.trunc - opt.guard).pass);
  Decomposition d1 = decompose_in_span(theta_diff(2, 3, T), gens, opt);
  CHECK(d1.in_span);
  CHECK(equal_up_to(d1.coeffs[1], QXSeries::constant(1), opt.trunc - opt.guard).pass);
}

TEST_CASE("Theta^[4] is generated by theta_{0,1} Theta^[3] and theta_{1,1} Theta^[3]") {
  SpanOptions opt;
  auto small = build_Theta(3, Parity::all, T);
  auto gens = concat(times(theta(0, 1, T), small), times(theta(1, 1, T), small));
  for (const auto& g : build_Theta(4, Parity::all, T)) CHECK(decompose_in_span(g, gens, opt).in_span);
}

TEST_CASE("dimension table") {
  SpanOptions opt;
  CHECK(span_dim(build_V(2, 0, T), opt) == 1);
  CHECK(span_dim(build_V(2, H, T), opt) == 2);
  CHECK(span_dim(build_V(3, 0, T), opt) == 2);
  CHECK(span_dim(build_V(3, H, T), opt) == 2);
  for (long m = 2; m <= 4; ++m) CHECK(span_dim(build_Theta(m, Parity::all, T), opt) == std::size_t(m - 1));
}

TEST_CASE("span equality") {
  SpanOptions opt;
  auto A = build_Theta(3, Parity::all, T);
  CHECK(span_equal(A, A, opt).pass);
  CHECK(span_equal(build_V(2, H, T), build_U(2, H, T), opt).pass);
  SpanVerdict v = span_equal(build_V(2, 0, T), build_Theta(2, Parity::even, T), opt);
  CHECK_FALSE(v.pass);
  REQUIRE_FALSE(v.failures.empty());
  CHECK(v.failures[0].certificate.has_value());
}

TEST_CASE("ranks that change inside the guard band are unstable") {
  SpanOptions opt;  // trunc 12, guard 4
  // x-components (1, 1) and (1, 1 + q^10): independent, but not below q^8
  QXSeries a = (QXSeries::constant(1) + QXSeries::monomial(1, 0, 1)).truncated(T);
  QXSeries b = a + QXSeries::monomial(1, 10, 1, T);
  RankReport r = rank_report({a, b}, opt);
  CHECK(r.rank == 2);
  CHECK(r.rank_guarded == 1);
  CHECK_THROWS_AS(span_dim({a, b}, opt), RankUnstable);
}
