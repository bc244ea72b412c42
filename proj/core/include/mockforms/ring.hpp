#pragma once

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mockforms/errors.hpp"

namespace mockforms {

// Exact rational exponent. Always canonical (mpq_class keeps it reduced).
class ExpRational {
 public:
  ExpRational() = default;
  ExpRational(long n) : v_(n) {}  // NOLINT: integers convert implicitly
  ExpRational(long n, long d);
  explicit ExpRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // "a", "-a/b", " 3 / 4 " are accepted.
  static ExpRational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  std::string str() const;

  // floor/ceil into a machine integer; ExponentOverflow if it does not fit.
  long floor_long() const;
  long ceil_long() const;
  // den() as a machine integer; throws ExponentOverflow.
  long den_long() const;

  ExpRational& operator+=(const ExpRational& o) { v_ += o.v_; return *this; }
  ExpRational& operator-=(const ExpRational& o) { v_ -= o.v_; return *this; }
  ExpRational& operator*=(const ExpRational& o) { v_ *= o.v_; return *this; }
  ExpRational& operator/=(const ExpRational& o);

  friend ExpRational operator+(ExpRational a, const ExpRational& b) { return a += b; }
  friend ExpRational operator-(ExpRational a, const ExpRational& b) { return a -= b; }
  friend ExpRational operator*(ExpRational a, const ExpRational& b) { return a *= b; }
  friend ExpRational operator/(ExpRational a, const ExpRational& b) { return a /= b; }
  friend ExpRational operator-(const ExpRational& a) { return ExpRational(mpq_class(-a.v_)); }

  friend bool operator==(const ExpRational& a, const ExpRational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const ExpRational& a, const ExpRational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

ExpRational abs(const ExpRational& a);
// Fractional part in [0,1).
ExpRational frac(const ExpRational& a);

long lcm_checked(long a, long b);

enum class SignVariant { plus, minus, none };

// sigma(m): minus for even m, plus for odd m.
SignVariant sigma(long m);
std::string to_string(SignVariant v);
SignVariant parse_sign_variant(std::string_view s);

// Element of Q(zeta_N), stored as coefficients of 1, t, ..., t^{phi(N)-1}
// modulo the N-th cyclotomic polynomial.
class CycNumber {
 public:
  CycNumber() : order_(1), c_(1) {}
  CycNumber(long n) : order_(1), c_(1, mpq_class(n)) {}  // NOLINT
  CycNumber(const mpq_class& r) : order_(1), c_(1, r) {}  // NOLINT
  CycNumber(const mpq_class& r, int order);
  CycNumber(int order, std::vector<mpq_class> coeffs);

  int order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  // True when the value lies in Q (only the constant coefficient survives).
  bool is_rational() const;
  mpq_class rational_part() const { return c_[0]; }

  std::complex<double> embed() const;
  std::string str() const;

  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend void cyc_add_to(CycNumber& acc, const CycNumber& b);
  friend void cyc_addmul_to(CycNumber& acc, const CycNumber& a, const CycNumber& b);

 private:
  int order_;
  std::vector<mpq_class> c_;
};

int euler_phi(int n);
// Coefficients (low to high) of the n-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_poly(int n);

CycNumber root_of_unity(long a, long b, int N);
// e^{2 pi i r}, order = den(r).
CycNumber root_of_unity(const ExpRational& r);

CycNumber cyc_add(const CycNumber& a, const CycNumber& b);
CycNumber cyc_sub(const CycNumber& a, const CycNumber& b);
CycNumber cyc_mul(const CycNumber& a, const CycNumber& b);
CycNumber cyc_neg(const CycNumber& a);
CycNumber cyc_inverse(const CycNumber& a);
bool cyc_is_zero(const CycNumber& a);
CycNumber lift_order(const CycNumber& a, int N);
std::complex<double> embed_complex(const CycNumber& a);

// In-place helpers used by the series kernels; both operands must share the order.
void cyc_add_to(CycNumber& acc, const CycNumber& b);
void cyc_addmul_to(CycNumber& acc, const CycNumber& a, const CycNumber& b);

inline CycNumber operator+(const CycNumber& a, const CycNumber& b) { return cyc_add(a, b); }
inline CycNumber operator-(const CycNumber& a, const CycNumber& b) { return cyc_sub(a, b); }
inline CycNumber operator*(const CycNumber& a, const CycNumber& b) { return cyc_mul(a, b); }
inline CycNumber operator-(const CycNumber& a) { return cyc_neg(a); }

}  // namespace mockforms
