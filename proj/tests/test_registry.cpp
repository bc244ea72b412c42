#include <set>

#include "doctest.h"
#include "mockforms/registry.hpp"

using namespace mockforms;

TEST_CASE("catalogue ids are unique and symbolic cases carry a mutant") {
  std::set<std::string> seen;
  for (const auto& e : catalogue()) {
    CHECK(seen.insert(e.id).second);
    if (e.enabled && e.mode == "symbolic") CHECK_MESSAGE(e.has_mutation, e.id);
  }
  for (const char* id : {"KP", "OSP-DENOM", "THETA-SHIFT-A", "NUM-0", "NUM-H", "SHIFT-T8", "VU-EQ", "CH-MONO", "DIM-TABLE"})
    CHECK(seen.count(id));
}

TEST_CASE("lookup and parameter validation") {
  CHECK_THROWS_AS(find_case("NOPE"), UnknownIdentity);
  const CatalogEntry& e = find_case("NUM-0");
  try {
    resolve_params(e, {{"m", "9"}});
    FAIL("out-of-range m accepted");
  } catch (const InvalidParams& err) {
    std::string msg = err.what();
    CHECK(msg.find("valid: 1, 2, 3, 4, 5, 6") != std::string::npos);
  }
  CHECK_THROWS_AS(resolve_params(e, {{"zz", "1"}}), InvalidParams);
  CHECK(resolve_params(find_case("SHIFT-T8"), {{"s", "2/4"}}).at("s") == "1/2");
  CHECK_THROWS_AS(resolve_params(find_case("CH-PROD"), {{"m", "3"}, {"n", "3"}}), InvalidParams);
}

TEST_CASE("worked cases") {
  Report kp = run_case("KP", {{"a", "1"}}, [] {
    RunOptions o;
    o.points = 20;
    o.tol = 1e-9;
    return o;
  }());
  CHECK(kp.status == "pass");
  REQUIRE(kp.residual);
  CHECK(*kp.residual < 1e-9);

  RunOptions t10;
  t10.trunc = ExpRational(10);
  Report num = run_case("NUM-0", {{"m", "2"}, {"p", "0"}}, t10);
  CHECK(num.status == "pass");

  Report mut = run_case("NUM-0~MUT", {{"m", "2"}, {"p", "0"}}, t10);
  CHECK(mut.status == "pass");  // the perturbed identity failed
  CHECK(mut.expect == "fail");
  REQUIRE(mut.witness.is_object());
  CHECK(mut.witness.contains("q"));
  CHECK(mut.witness.contains("x"));
}

TEST_CASE("reports are deterministic") {
  for (const char* id : {"KP", "NUM-H~MUT", "SUMDIFF-0"}) {
    Report a = run_case(id, {}), b = run_case(id, {});
    CHECK(to_json(a, false).dump() == to_json(b, false).dump());
  }
}

TEST_CASE("suite filtering") {
  CHECK(glob_match("THETA-*", "THETA-EVAL"));
  CHECK_FALSE(glob_match("THETA-*", "SHIFT-T8"));

  SuiteFilter f;
  f.glob = "NUM-*";
  f.only = {{"m", {"1"}}, {"p", {"0"}}};
  SuiteSummary s = run_suite(f);
  std::vector<std::string> ids;
  for (const auto& r : s.cases) ids.push_back(r.id);
  CHECK(ids == std::vector<std::string>{"NUM-0", "NUM-0~MUT", "NUM-H", "NUM-H~MUT"});
  CHECK(s.pass == 4);

  f.glob = "NOTHING-*";
  SuiteSummary none = run_suite(f);
  CHECK(none.total == 0);
  CHECK(to_json(none).at("cases").empty());

  std::set<std::string> families;
  for (const auto& e : catalogue())
    if (e.enabled && glob_match("THETA-*", e.id)) families.insert(e.id);
  CHECK(families.size() == 6);
}

TEST_CASE("thread count does not change the suite JSON") {
  SuiteFilter f;
  f.glob = "THETA-SHIFT-*";
  f.only = {{"p", {"-1", "2"}}};
  std::string one = to_json(run_suite(f, {}, 1), false).dump();
  std::string four = to_json(run_suite(f, {}, 4), false).dump();
  CHECK(one == four);
  CHECK(one.find("millis") == std::string::npos);
}
