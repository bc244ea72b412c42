#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mockforms/spans.hpp"

namespace mockforms {

using Params = std::map<std::string, std::string>;

// Allowed values of one parameter; `suite` is the subset swept by the default suite.
struct ParamDomain {
  std::string key;
  std::vector<std::string> allowed;
  std::vector<std::string> suite;
};

struct RunOptions {
  std::optional<ExpRational> trunc;  // symbolic / spans truncation (case default if unset)
  ExpRational guard{4};
  std::optional<int> points;
  std::optional<double> tol;
  std::uint64_t seed = 7;
};

struct Outcome {
  bool pass = false;
  nlohmann::json witness;               // null when absent
  std::optional<double> residual;
  std::optional<ExpRational> trunc;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
};

struct CatalogEntry {
  std::string id;
  std::string mode;  // symbolic | numeric | spans
  std::string summary;
  bool enabled = true;  // disabled entries run only when asked for by id
  std::vector<ParamDomain> domain;
  // joint constraint on the parameters, if any
  std::function<bool(const Params&)> valid;
  std::string valid_text;
  bool has_mutation = false;
  // defaults for RunOptions
  std::optional<ExpRational> trunc;
  std::optional<int> points;
  std::optional<double> tol;
  std::function<Outcome(const Params&, const RunOptions&, bool mutate)> run;
};

const std::vector<CatalogEntry>& catalogue();
const CatalogEntry& find_case(const std::string& id);  // UnknownIdentity

// Fills defaults and validates against the domain; InvalidParams names the valid range.
Params resolve_params(const CatalogEntry& e, const Params& given);

struct Report {
  std::string id;  // "<ID>~MUT" for mutation variants
  Params params;
  std::string mode;
  std::string status;  // pass | fail | error
  std::string expect = "pass";
  nlohmann::json witness;
  std::optional<double> residual;
  std::optional<ExpRational> trunc;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::string error;
  double millis = 0;
};

// Runs one case; a mutant passes iff the perturbed identity fails.
// Errors inside the computation become status "error".
Report run_case(const std::string& id, const Params& params, const RunOptions& opt = {}, bool mutate = false);

nlohmann::json to_json(const Report& r, bool with_timing = true);

struct SuiteFilter {
  std::string glob = "*";
  // restricts the sweep of a parameter to these values (keys absent from a case are ignored)
  std::map<std::string, std::vector<std::string>> only;
};

struct SuiteSummary {
  std::size_t total = 0, pass = 0, fail = 0, error = 0;
  std::vector<Report> cases;
};

// Expands the default sweep of every enabled entry whose id matches the glob
// (plus its mutants) and runs the cases on `jobs` threads. Order is deterministic.
SuiteSummary run_suite(const SuiteFilter& filter, const RunOptions& opt = {}, unsigned jobs = 1);
nlohmann::json to_json(const SuiteSummary& s, bool with_timing = true);

bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace mockforms
