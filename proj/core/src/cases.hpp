#pragma once

// Shared plumbing for the catalogue entries (not installed).

#include <complex>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mockforms/registry.hpp"

namespace mockforms::cases {

using cplx = std::complex<double>;

ExpRational rat(const Params& p, const std::string& key);
long integer(const Params& p, const std::string& key);
SignVariant sign_of(const Params& p, const std::string& key = "sign");

std::vector<std::string> int_range(long lo, long hi);
ParamDomain dom(std::string key, std::vector<std::string> allowed, std::vector<std::string> suite = {});

// ---- symbolic

// Builds (lhs, rhs) at an internal truncation; the driver raises the internal
// truncation until both sides are known below Q, then compares up to Q.
using SidesBuilder = std::function<std::pair<QXSeries, QXSeries>(const ExpRational& inner)>;
Outcome compare_symbolic(const SidesBuilder& build, const ExpRational& Q);
// Several independent items; the first failing one is reported.
Outcome compare_symbolic_items(const std::vector<std::pair<std::string, SidesBuilder>>& items, const ExpRational& Q);

nlohmann::json witness_json(const Discrepancy& d);

// q^a x^b c f
QXSeries mono(const QXSeries& f, const CycNumber& c, const ExpRational& a, const ExpRational& b = 0);
// e^{2 pi i r}
CycNumber ep(const ExpRational& r);
// theta^{(sign)}_{j,M}(tau, arg)
QXSeries th(const ExpRational& j, const ExpRational& M, const ExpRational& T,
            SignVariant sign = SignVariant::plus, const AffineArg& arg = {}, long K = 1);
QXSeries th0(const ExpRational& j, const ExpRational& M, SignVariant sign, const ExpRational& T);
QXSeries quotient(const QXSeries& num, const QXSeries& den, const ExpRational& T);

// ---- numeric

struct Sampler {
  explicit Sampler(std::uint64_t seed) : rng(seed) {}
  std::mt19937_64 rng;
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  cplx tau() { return {0.0, uniform(0.6, 1.2)}; }
  cplx z(cplx tau) { return {uniform(0.0, 1.0), uniform(0.05, tau.imag() - 0.05)}; }
};

struct Sample {
  cplx lhs, rhs;
  nlohmann::json point;
};
// One seeded sample; NearPole from the evaluation causes a resample.
using NumericSample = std::function<Sample(Sampler&)>;
Outcome compare_numeric(const NumericSample& sample, int points, double tol, std::uint64_t seed);

double scale_free(cplx a, cplx b);
nlohmann::json cj(cplx v);  // [re, im]

// Sums f(j) over all integers j, stopping once two consecutive |j| contribute
// below eps relative to the running total.
cplx bilateral(const std::function<cplx(long)>& f, double eps);

// ---- spans

// run returns nullopt on success, otherwise a witness.
struct SpanCheck {
  std::string label;
  std::function<std::optional<nlohmann::json>(const SpanOptions&)> run;
};
std::optional<nlohmann::json> verdict_witness(const SpanVerdict& v);
Outcome run_span_checks(const std::vector<SpanCheck>& checks, const SpanOptions& opt);
// Builds with increasing internal truncation until every series is known to opt.trunc.
std::vector<QXSeries> at_least(const std::function<std::vector<QXSeries>(const ExpRational&)>& build,
                               const ExpRational& T);

SpanOptions span_options(const RunOptions& o);

// registration
void add_symbolic(std::vector<CatalogEntry>& out);
void add_numeric(std::vector<CatalogEntry>& out);
void add_spans(std::vector<CatalogEntry>& out);

}  // namespace mockforms::cases
