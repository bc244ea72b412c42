#include <fstream>

#include "doctest.h"
#include "mockforms/functions.hpp"

using namespace mockforms;

namespace {

nlohmann::json load(const std::string& name) {
  std::ifstream in(std::string(MOCKFORMS_FIXTURE_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing fixture " << name);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("expected-series fixtures") {
  for (const auto& e : load("manifest.json")) {
    const std::string file = e.at("file");
    CAPTURE(file);
    FunctionSpec spec{e.at("fn"), e.at("args").get<std::map<std::string, std::string>>()};
    QXSeries want = series_from_json(load(file));
    ExpRational T = ExpRational::parse(e.at("qmax").get<std::string>());
    REQUIRE(want.trunc());
    CHECK(*want.trunc() == T);

    // the library still produces the stored series
    CHECK(expand_function(spec, T) == want);

    // and the stored series sums to the directly computed function value
    for (std::complex<double> z : {std::complex<double>(0.23, 0.04), std::complex<double>(0.61, -0.02)}) {
      std::complex<double> tau(0.02, 1.5);
      std::complex<double> a = evaluate(want, tau, z), b = evaluate_function(spec, tau, z);
      CHECK(std::abs(a - b) / (1 + std::abs(b)) < 1e-8);
    }
  }
}

TEST_CASE("theta_{0,1} fixture holds the five listed terms") {
  QXSeries f = series_from_json(load("theta_0_1.json"));
  CHECK(f.term_count() == 5);
  for (auto [q, x] : std::vector<std::pair<long, long>>{{0, 0}, {1, 1}, {1, -1}, {4, 2}, {4, -2}})
    CHECK(f.coeff(q, x) == CycNumber(1));
}
