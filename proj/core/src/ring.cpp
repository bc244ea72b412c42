#include "mockforms/ring.hpp"

#include <cctype>
#include <climits>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mockforms {

// ---------------------------------------------------------------- ExpRational

ExpRational::ExpRational(long n, long d) {
  if (d == 0) throw ZeroDivision("ExpRational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

ExpRational ExpRational::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string a = s.substr(0, slash);
  std::string b = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(a) || !valid_int(b) || b[0] == '-' || b[0] == '+')
    throw ParseError("not a rational: '" + std::string(text) + "'");
  if (a[0] == '+') a.erase(0, 1);
  mpz_class n(a), d(b);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return ExpRational(q);
}

std::string ExpRational::str() const { return v_.get_str(); }

static long to_long_checked(const mpz_class& z) {
  if (!z.fits_slong_p()) throw ExponentOverflow("integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

long ExpRational::floor_long() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return to_long_checked(r);
}

long ExpRational::ceil_long() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return to_long_checked(r);
}

long ExpRational::den_long() const { return to_long_checked(v_.get_den()); }

ExpRational& ExpRational::operator/=(const ExpRational& o) {
  if (o.v_ == 0) throw ZeroDivision("ExpRational division by zero");
  v_ /= o.v_;
  return *this;
}

ExpRational abs(const ExpRational& a) { return a.sign() < 0 ? -a : a; }

ExpRational frac(const ExpRational& a) { return a - ExpRational(a.floor_long()); }

long lcm_checked(long a, long b) {
  if (a == 0 || b == 0) return 0;
  __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
  if (l > LONG_MAX || l < -LONG_MAX) throw ExponentOverflow("lattice lcm overflow");
  return static_cast<long>(l < 0 ? -l : l);
}

SignVariant sigma(long m) { return m % 2 == 0 ? SignVariant::minus : SignVariant::plus; }

std::string to_string(SignVariant v) {
  switch (v) {
    case SignVariant::plus: return "plus";
    case SignVariant::minus: return "minus";
    default: return "none";
  }
}

SignVariant parse_sign_variant(std::string_view s) {
  if (s == "plus" || s == "+") return SignVariant::plus;
  if (s == "minus" || s == "-") return SignVariant::minus;
  if (s == "none" || s.empty()) return SignVariant::none;
  throw ParseError("sign variant must be plus, minus or none");
}

// ---------------------------------------------------------------- cyclotomics

namespace {

struct CycData {
  int n = 1;
  int phi = 1;
  std::vector<long> poly;                   // monic, length phi+1
  std::vector<std::vector<long>> pow_mod;   // t^k mod Phi_n, k < n
};

std::vector<long> poly_divexact(std::vector<long> num, const std::vector<long>& den) {
  // both low-to-high, den monic
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  std::vector<long> q(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    long c = num[i];
    q[i - dn] = c;
    if (c != 0)
      for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::vector<long> cyclo_poly(int n, std::map<int, std::vector<long>>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int k = 1; k < n; ++k)
    if (n % k == 0) p = poly_divexact(p, cyclo_poly(k, memo));
  memo[n] = p;
  return p;
}

// Memo table of immutable data; the values are pure functions of n.
const CycData& cyc(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycData>> cache;
  static std::map<int, std::vector<long>> polys;
  if (n < 1) throw InvalidParams("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto d = std::make_unique<CycData>();
  d->n = n;
  d->poly = cyclo_poly(n, polys);
  d->phi = static_cast<int>(d->poly.size()) - 1;
  const auto& p = d->poly;
  std::vector<long> cur(d->phi, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    d->pow_mod.push_back(cur);
    long top = cur[d->phi - 1];
    std::vector<long> nxt(d->phi, 0);
    for (int i = d->phi - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    for (int i = 0; i < d->phi; ++i) nxt[i] -= top * p[i];
    cur = nxt;
  }
  auto& ref = *d;
  cache.emplace(n, std::move(d));
  return ref;
}

void require_same(const CycNumber& a, const CycNumber& b) {
  if (a.order() != b.order())
    throw OrderMismatch("orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
}

}  // namespace

int euler_phi(int n) { return cyc(n).phi; }

const std::vector<long>& cyclotomic_poly(int n) { return cyc(n).poly; }

CycNumber::CycNumber(const mpq_class& r, int order) : order_(order), c_(euler_phi(order)) {
  c_[0] = r;
}

CycNumber::CycNumber(int order, std::vector<mpq_class> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != euler_phi(order))
    throw InvalidParams("coefficient vector length must equal phi(N)");
}

bool CycNumber::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::complex<double> CycNumber::embed() const {
  std::complex<long double> s = 0;
  const long double two_pi = 2.0L * 3.141592653589793238462643383279502884L;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    long double ang = two_pi * static_cast<long double>(k) / order_;
    s += static_cast<long double>(c_[k].get_d()) * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

std::string CycNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    mpq_class v = c_[k];
    bool neg = v < 0;
    if (neg) v = -v;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << v.get_str();
    } else {
      if (v != 1) os << v.get_str() << "*";
      os << "z" << order_;
      if (k > 1) os << "^" << k;
    }
  }
  return first ? "0" : os.str();
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  int n = static_cast<int>(lcm_checked(a.order_, b.order_));
  return lift_order(a, n).c_ == lift_order(b, n).c_;
}

CycNumber root_of_unity(long a, long b, int N) {
  if (b <= 0) throw InvalidParams("root_of_unity needs b > 0");
  if (N % b != 0)
    throw AmbientOrderTooSmall(std::to_string(b) + " does not divide ambient order " + std::to_string(N));
  long k = (a % b) * (N / b);
  k %= N;
  if (k < 0) k += N;
  const auto& d = cyc(N);
  std::vector<mpq_class> c(d.phi);
  for (int i = 0; i < d.phi; ++i) c[i] = d.pow_mod[k][i];
  return CycNumber(N, std::move(c));
}

CycNumber root_of_unity(const ExpRational& r) {
  ExpRational f = frac(r);
  long b = f.den_long();
  if (b > INT_MAX) throw ExponentOverflow("root of unity order too large");
  return root_of_unity(f.num().get_si(), b, static_cast<int>(b));
}

CycNumber cyc_add(const CycNumber& a, const CycNumber& b) {
  CycNumber r = a;
  cyc_add_to(r, b);
  return r;
}

CycNumber cyc_sub(const CycNumber& a, const CycNumber& b) { return cyc_add(a, cyc_neg(b)); }

CycNumber cyc_neg(const CycNumber& a) {
  std::vector<mpq_class> c = a.coeffs();
  for (auto& x : c) x = -x;
  return CycNumber(a.order(), std::move(c));
}

void cyc_add_to(CycNumber& acc, const CycNumber& b) {
  require_same(acc, b);
  auto& c = acc.c_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
}

void cyc_addmul_to(CycNumber& acc, const CycNumber& a, const CycNumber& b) {
  require_same(a, b);
  require_same(acc, a);
  auto& out = acc.c_;
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  if (a.order() <= 2) {
    out[0] += x[0] * y[0];
    return;
  }
  const auto& d = cyc(a.order());
  int phi = d.phi;
  mpq_class t;
  for (int i = 0; i < phi; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (y[j] == 0) continue;
      t = x[i] * y[j];
      int deg = i + j;
      if (deg < phi) {
        out[deg] += t;
      } else {
        const auto& red = d.pow_mod[deg % d.n];
        for (int k = 0; k < phi; ++k)
          if (red[k] != 0) out[k] += t * red[k];
      }
    }
  }
}

CycNumber cyc_mul(const CycNumber& a, const CycNumber& b) {
  require_same(a, b);
  CycNumber r(mpq_class(0), a.order());
  cyc_addmul_to(r, a, b);
  return r;
}

bool cyc_is_zero(const CycNumber& a) { return a.is_zero(); }

CycNumber lift_order(const CycNumber& a, int N) {
  if (N <= 0 || N % a.order() != 0)
    throw OrderMismatch("cannot lift order " + std::to_string(a.order()) + " to " + std::to_string(N));
  if (N == a.order()) return a;
  const auto& d = cyc(N);
  int step = N / a.order();
  std::vector<mpq_class> c(d.phi);
  for (size_t k = 0; k < a.coeffs().size(); ++k) {
    const mpq_class& v = a.coeffs()[k];
    if (v == 0) continue;
    const auto& red = d.pow_mod[(k * step) % N];
    for (int i = 0; i < d.phi; ++i)
      if (red[i] != 0) c[i] += v * red[i];
  }
  return CycNumber(N, std::move(c));
}

std::complex<double> embed_complex(const CycNumber& a) { return a.embed(); }

CycNumber cyc_inverse(const CycNumber& a) {
  if (a.is_zero()) throw ZeroDivision("inverse of zero cyclotomic number");
  int phi = static_cast<int>(a.coeffs().size());
  if (a.is_rational()) {
    CycNumber r(mpq_class(1 / a.coeffs()[0]), a.order());
    return r;
  }
  // Solve (multiplication-by-a matrix) * y = e_0 by Gauss-Jordan over Q.
  std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi + 1));
  CycNumber basis(mpq_class(1), a.order());
  CycNumber t = root_of_unity(1, a.order(), a.order());
  for (int j = 0; j < phi; ++j) {
    CycNumber col = cyc_mul(a, basis);
    for (int i = 0; i < phi; ++i) m[i][j] = col.coeffs()[i];
    basis = cyc_mul(basis, t);
  }
  m[0][phi] = 1;
  for (int c = 0; c < phi; ++c) {
    int piv = -1;
    for (int r = c; r < phi; ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) throw ZeroDivision("singular multiplication matrix");
    std::swap(m[c], m[piv]);
    mpq_class inv = 1 / m[c][c];
    for (int k = c; k <= phi; ++k) m[c][k] *= inv;
    for (int r = 0; r < phi; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (int k = c; k <= phi; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<mpq_class> y(phi);
  for (int i = 0; i < phi; ++i) y[i] = m[i][phi];
  return CycNumber(a.order(), std::move(y));
}

}  // namespace mockforms
