#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mockforms/ring.hpp"

namespace mockforms {

// Truncated series sum_e q^e * P_e(x), exponents on the lattice (1/dq)Z x (1/dx)Z.
// Coefficients live in Q(zeta_N) for the series' ambient order N.
// A series is either exact (a finite Laurent polynomial, no truncation) or
// known only below trunc(): coefficients of q^e with e >= trunc are unknown.
class QXSeries {
 public:
  using XPoly = std::map<long, CycNumber>;   // x-key -> coefficient
  using Terms = std::map<long, XPoly>;       // q-key -> x-polynomial

  struct Term {
    ExpRational q;
    ExpRational x;
    CycNumber c;
  };

  QXSeries();  // exact zero
  static QXSeries zero(const ExpRational& trunc);
  static QXSeries constant(const CycNumber& c);
  static QXSeries monomial(const CycNumber& c, const ExpRational& qexp, const ExpRational& xexp,
                           std::optional<ExpRational> trunc = std::nullopt);
  // Collects terms (duplicates are summed, zeros and terms at or past trunc dropped).
  static QXSeries from_terms(const std::vector<Term>& terms, std::optional<ExpRational> trunc,
                             long dq_hint = 1, long dx_hint = 1, int order_hint = 1);
  // Direct construction on a known lattice; keys must already be valid.
  static QXSeries from_keys(long dq, long dx, int order, Terms terms, std::optional<ExpRational> trunc);

  long dq() const { return dq_; }
  long dx() const { return dx_; }
  int order() const { return order_; }
  bool is_exact() const { return !trunc_.has_value(); }
  const std::optional<ExpRational>& trunc() const { return trunc_; }
  // Keys strictly below this bound are known.
  long trunc_key() const { return tkey_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const;

  ExpRational qexp(long key) const { return ExpRational(key, dq_); }
  ExpRational xexp(long key) const { return ExpRational(key, dx_); }

  // Least stored q-exponent; for an empty inexact series this is trunc.
  // Exact zero has no valuation (nullopt).
  std::optional<ExpRational> valuation() const;
  std::optional<long> valuation_key() const;

  bool is_x_free() const;
  // Coefficient of q^qe x^xe (zero if absent); qe must be below trunc.
  CycNumber coeff(const ExpRational& qe, const ExpRational& xe) const;

  QXSeries on_lattice(long dq, long dx) const;
  QXSeries with_order(int order) const;
  QXSeries truncated(const ExpRational& t) const;

  friend bool operator==(const QXSeries& a, const QXSeries& b);

 private:
  long dq_ = 1;
  long dx_ = 1;
  int order_ = 1;
  std::optional<ExpRational> trunc_;
  long tkey_ = 0;
  Terms terms_;

  void set_trunc(std::optional<ExpRational> t);
  void prune();

  friend void unify(QXSeries& a, QXSeries& b);
};

// Brings both series to a common lattice and ambient order.
void unify(QXSeries& a, QXSeries& b);

QXSeries add(const QXSeries& f, const QXSeries& g);
QXSeries sub(const QXSeries& f, const QXSeries& g);
QXSeries neg(const QXSeries& f);
QXSeries mul(const QXSeries& f, const QXSeries& g);
QXSeries scale(const QXSeries& f, const CycNumber& c);
// f * c q^a x^b
QXSeries mono_scale(const QXSeries& f, const CycNumber& c, const ExpRational& a, const ExpRational& b);
QXSeries power(const QXSeries& f, int n);

// Expansion of 1/(1 - sign*c*x^a*q^b) to q^trunc; b = 0 raises PoleAtQZero.
QXSeries geom_expand(int sign, const CycNumber& c, const ExpRational& a, const ExpRational& b,
                     const ExpRational& trunc);

// 1/f, known to min(trunc, what f justifies). Leading q-coefficient of f must be one monomial.
QXSeries invert_unit(const QXSeries& f, const ExpRational& trunc);

struct Discrepancy {
  ExpRational q;
  ExpRational x;
  CycNumber lhs;
  CycNumber rhs;
};

struct EqualityVerdict {
  bool pass = true;
  std::optional<Discrepancy> witness;
};

// Compares all coefficients with q-exponent < Q.
EqualityVerdict equal_up_to(const QXSeries& f, const QXSeries& g, const ExpRational& Q);

// Numeric value of the stored (truncated) sum at q = e^{2 pi i tau}, x = e^{2 pi i z}.
std::complex<double> evaluate(const QXSeries& f, std::complex<double> tau, std::complex<double> z);

nlohmann::json cyc_to_json(const CycNumber& c);
CycNumber cyc_from_json(const nlohmann::json& j, int order);

nlohmann::json to_json(const QXSeries& f);
QXSeries series_from_json(const nlohmann::json& j);

// Human-readable listing, at most max_terms monomials followed by "... (+N more)".
std::string format_series(const QXSeries& f, std::size_t max_terms = 40);

inline QXSeries operator+(const QXSeries& a, const QXSeries& b) { return add(a, b); }
inline QXSeries operator-(const QXSeries& a, const QXSeries& b) { return sub(a, b); }
inline QXSeries operator*(const QXSeries& a, const QXSeries& b) { return mul(a, b); }
inline QXSeries operator-(const QXSeries& a) { return neg(a); }

}  // namespace mockforms
