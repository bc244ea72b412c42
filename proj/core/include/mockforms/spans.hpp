#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mockforms/mock.hpp"

namespace mockforms {

// Spans over truncated Laurent series in q. A QXSeries is read as the vector of its
// x-components (one truncated q-series per x-exponent).

struct SpanOptions {
  ExpRational trunc{12};
  ExpRational guard{4};
  std::uint64_t seed = 1;
};

// First (x-class, q-order) where the target could not be matched.
struct NotInSpan {
  ExpRational x;
  ExpRational q;
};

struct Decomposition {
  bool in_span = false;
  std::vector<QXSeries> coeffs;          // one x-free series per generator
  std::optional<NotInSpan> certificate;  // set when !in_span
  ExpRational verified_to;               // q-order up to which the residual is certified zero
  std::size_t rank = 0;
};

// Solves target = sum c_i g_i. The system is solved with all data cut at trunc - guard
// and again at trunc; both must be consistent, agree where both are known, and the
// re-multiplied residual must vanish.
Decomposition decompose_in_span(const QXSeries& target, const std::vector<QXSeries>& gens,
                                const SpanOptions& opt = {});

struct RankReport {
  std::size_t rank = 0;          // elimination rank at trunc
  std::size_t rank_guarded = 0;  // elimination rank at trunc - guard
  std::size_t rank_random = 0;   // rank after random rational x-substitutions
};

RankReport rank_report(const std::vector<QXSeries>& gens, const SpanOptions& opt = {});
// RankUnstable unless the three ranks of rank_report agree.
std::size_t span_dim(const std::vector<QXSeries>& gens, const SpanOptions& opt = {});

struct SpanFailure {
  char side;  // 'A': a generator of A outside span B, 'B' the reverse
  std::size_t index;
  std::optional<NotInSpan> certificate;
};

struct SpanVerdict {
  bool pass = true;
  std::vector<SpanFailure> failures;
  std::vector<Decomposition> a_in_b;
  std::vector<Decomposition> b_in_a;
};

// Every generator of A lies in span B and vice versa.
SpanVerdict span_equal(const std::vector<QXSeries>& A, const std::vector<QXSeries>& B,
                       const SpanOptions& opt = {});
// Only the first direction: span A is contained in span B.
SpanVerdict span_contains(const std::vector<QXSeries>& B, const std::vector<QXSeries>& A,
                          const SpanOptions& opt = {});

enum class Parity { all, even, odd };
Parity parse_parity(const std::string& s);
std::string to_string(Parity p);

// {[theta_{j,m} - theta_{-j,m}](tau,z) : 1 <= j <= m-1, parity filter on j}
std::vector<QXSeries> build_Theta(long m, Parity parity, const ExpRational& trunc);
// numerator(m, s') for s' in s + Z with 0 < s' <= (m+1)/2 (s' >= 1 when s = 0)
std::vector<QXSeries> build_V(long m, const ExpRational& s, const ExpRational& trunc);
// theta quotient generator plus the theta differences of matching parity
std::vector<QXSeries> build_U(long m, const ExpRational& s, const ExpRational& trunc);
// The s-values used by build_V.
std::vector<ExpRational> v_shifts(long m, const ExpRational& s);

// Products gen * f for every f, each gen.
std::vector<QXSeries> times(const QXSeries& f, const std::vector<QXSeries>& gens);
std::vector<QXSeries> concat(std::vector<QXSeries> a, const std::vector<QXSeries>& b);

}  // namespace mockforms
