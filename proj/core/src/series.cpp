#include "mockforms/series.hpp"

#include <climits>
#include <cmath>
#include <sstream>

namespace mockforms {

namespace {

long key_of(const ExpRational& e, long d) {
  ExpRational k = e * ExpRational(d);
  if (!k.is_integer()) throw InvalidParams("exponent " + e.str() + " not on lattice 1/" + std::to_string(d));
  return k.floor_long();
}

long mul_checked(long a, long b) {
  __int128 r = static_cast<__int128>(a) * b;
  if (r > LONG_MAX || r < LONG_MIN) throw ExponentOverflow("exponent key overflow");
  return static_cast<long>(r);
}

void addmul_poly(QXSeries::XPoly& acc, const QXSeries::XPoly& a, const QXSeries::XPoly& b, int order) {
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      long k = ka + kb;
      auto it = acc.find(k);
      if (it == acc.end()) it = acc.emplace(k, CycNumber(mpq_class(0), order)).first;
      cyc_addmul_to(it->second, ca, cb);
    }
}

std::optional<ExpRational> min_trunc(const std::optional<ExpRational>& a, const std::optional<ExpRational>& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}

}  // namespace

QXSeries::QXSeries() { set_trunc(std::nullopt); }

void QXSeries::set_trunc(std::optional<ExpRational> t) {
  trunc_ = std::move(t);
  tkey_ = trunc_ ? (*trunc_ * ExpRational(dq_)).ceil_long() : LONG_MAX;
}

void QXSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first >= tkey_) {
      terms_.erase(it, terms_.end());
      break;
    }
    auto& poly = it->second;
    for (auto jt = poly.begin(); jt != poly.end();) {
      if (jt->second.is_zero())
        jt = poly.erase(jt);
      else
        ++jt;
    }
    if (poly.empty())
      it = terms_.erase(it);
    else
      ++it;
  }
}

QXSeries QXSeries::zero(const ExpRational& trunc) {
  QXSeries s;
  s.set_trunc(trunc);
  return s;
}

QXSeries QXSeries::constant(const CycNumber& c) {
  return from_terms({Term{ExpRational(0), ExpRational(0), c}}, std::nullopt);
}

QXSeries QXSeries::monomial(const CycNumber& c, const ExpRational& qexp, const ExpRational& xexp,
                            std::optional<ExpRational> trunc) {
  return from_terms({Term{qexp, xexp, c}}, std::move(trunc));
}

QXSeries QXSeries::from_terms(const std::vector<Term>& terms, std::optional<ExpRational> trunc, long dq_hint,
                              long dx_hint, int order_hint) {
  QXSeries s;
  long dq = dq_hint, dx = dx_hint;
  long order = order_hint;
  for (const auto& t : terms) {
    dq = lcm_checked(dq, t.q.den_long());
    dx = lcm_checked(dx, t.x.den_long());
    order = lcm_checked(order, t.c.order());
  }
  if (order > INT_MAX) throw ExponentOverflow("ambient order too large");
  s.dq_ = dq;
  s.dx_ = dx;
  s.order_ = static_cast<int>(order);
  s.set_trunc(std::move(trunc));
  for (const auto& t : terms) {
    long qk = key_of(t.q, dq);
    if (qk >= s.tkey_) continue;
    long xk = key_of(t.x, dx);
    CycNumber c = t.c.order() == s.order_ ? t.c : lift_order(t.c, s.order_);
    auto& poly = s.terms_[qk];
    auto it = poly.find(xk);
    if (it == poly.end())
      poly.emplace(xk, std::move(c));
    else
      cyc_add_to(it->second, c);
  }
  s.prune();
  return s;
}

QXSeries QXSeries::from_keys(long dq, long dx, int order, Terms terms, std::optional<ExpRational> trunc) {
  QXSeries s;
  s.dq_ = dq;
  s.dx_ = dx;
  s.order_ = order;
  s.set_trunc(std::move(trunc));
  s.terms_ = std::move(terms);
  s.prune();
  return s;
}

std::size_t QXSeries::term_count() const {
  std::size_t n = 0;
  for (const auto& [k, p] : terms_) n += p.size();
  return n;
}

std::optional<ExpRational> QXSeries::valuation() const {
  if (!terms_.empty()) return qexp(terms_.begin()->first);
  return trunc_;
}

std::optional<long> QXSeries::valuation_key() const {
  if (!terms_.empty()) return terms_.begin()->first;
  if (trunc_) return tkey_;
  return std::nullopt;
}

bool QXSeries::is_x_free() const {
  for (const auto& [k, p] : terms_)
    for (const auto& [xk, c] : p)
      if (xk != 0) return false;
  return true;
}

CycNumber QXSeries::coeff(const ExpRational& qe, const ExpRational& xe) const {
  if (trunc_ && qe >= *trunc_) throw InsufficientPrecision("coefficient at q^" + qe.str() + " is past trunc");
  ExpRational qk = qe * ExpRational(dq_), xk = xe * ExpRational(dx_);
  if (!qk.is_integer() || !xk.is_integer()) return CycNumber(mpq_class(0), order_);
  auto it = terms_.find(qk.floor_long());
  if (it == terms_.end()) return CycNumber(mpq_class(0), order_);
  auto jt = it->second.find(xk.floor_long());
  if (jt == it->second.end()) return CycNumber(mpq_class(0), order_);
  return jt->second;
}

QXSeries QXSeries::on_lattice(long dq, long dx) const {
  if (dq == dq_ && dx == dx_) return *this;
  if (dq % dq_ != 0 || dx % dx_ != 0) throw InvalidParams("lattice refinement must be a multiple");
  long fq = dq / dq_, fx = dx / dx_;
  QXSeries s;
  s.dq_ = dq;
  s.dx_ = dx;
  s.order_ = order_;
  s.set_trunc(trunc_);
  for (const auto& [k, p] : terms_) {
    XPoly np;
    for (const auto& [xk, c] : p) np.emplace(mul_checked(xk, fx), c);
    s.terms_.emplace(mul_checked(k, fq), std::move(np));
  }
  return s;
}

QXSeries QXSeries::with_order(int order) const {
  if (order == order_) return *this;
  QXSeries s = *this;
  s.order_ = order;
  for (auto& [k, p] : s.terms_)
    for (auto& [xk, c] : p) c = lift_order(c, order);
  return s;
}

QXSeries QXSeries::truncated(const ExpRational& t) const {
  if (trunc_ && t > *trunc_)
    throw InsufficientPrecision("cannot truncate at " + t.str() + " beyond " + trunc_->str());
  QXSeries s = *this;
  s.set_trunc(t);
  s.prune();
  return s;
}

bool operator==(const QXSeries& a, const QXSeries& b) {
  QXSeries x = a, y = b;
  unify(x, y);
  return x.trunc_ == y.trunc_ && x.terms_ == y.terms_;
}

void unify(QXSeries& a, QXSeries& b) {
  long dq = lcm_checked(a.dq_, b.dq_), dx = lcm_checked(a.dx_, b.dx_);
  long order = lcm_checked(a.order_, b.order_);
  if (order > INT_MAX) throw ExponentOverflow("ambient order too large");
  a = a.on_lattice(dq, dx).with_order(static_cast<int>(order));
  b = b.on_lattice(dq, dx).with_order(static_cast<int>(order));
}

QXSeries add(const QXSeries& f, const QXSeries& g) {
  QXSeries a = f, b = g;
  unify(a, b);
  auto t = min_trunc(a.trunc(), b.trunc());
  QXSeries::Terms out = a.terms();
  for (const auto& [k, p] : b.terms()) {
    auto& dst = out[k];
    for (const auto& [xk, c] : p) {
      auto it = dst.find(xk);
      if (it == dst.end())
        dst.emplace(xk, c);
      else
        cyc_add_to(it->second, c);
    }
  }
  return QXSeries::from_keys(a.dq(), a.dx(), a.order(), std::move(out), t);
}

QXSeries neg(const QXSeries& f) { return scale(f, CycNumber(-1)); }

QXSeries sub(const QXSeries& f, const QXSeries& g) { return add(f, neg(g)); }

QXSeries scale(const QXSeries& f, const CycNumber& c) {
  return mono_scale(f, c, ExpRational(0), ExpRational(0));
}

QXSeries mul(const QXSeries& f, const QXSeries& g) {
  QXSeries a = f, b = g;
  unify(a, b);
  std::optional<ExpRational> t;
  auto va = a.valuation(), vb = b.valuation();
  if (!va || !vb) return QXSeries();  // exact zero annihilates
  if (a.trunc()) t = *a.trunc() + *vb;
  if (b.trunc()) t = min_trunc(t, *b.trunc() + *va);
  long tk = t ? (*t * ExpRational(a.dq())).ceil_long() : LONG_MAX;
  QXSeries::Terms out;
  int order = a.order();
  for (const auto& [ka, pa] : a.terms()) {
    for (const auto& [kb, pb] : b.terms()) {
      if (ka + kb >= tk) break;
      addmul_poly(out[ka + kb], pa, pb, order);
    }
  }
  return QXSeries::from_keys(a.dq(), a.dx(), order, std::move(out), t);
}

QXSeries mono_scale(const QXSeries& f, const CycNumber& c, const ExpRational& a, const ExpRational& b) {
  long dq = lcm_checked(f.dq(), a.den_long()), dx = lcm_checked(f.dx(), b.den_long());
  long order = lcm_checked(f.order(), c.order());
  QXSeries s = f.on_lattice(dq, dx).with_order(static_cast<int>(order));
  CycNumber cc = lift_order(c, static_cast<int>(order));
  long sa = key_of(a, dq), sb = key_of(b, dx);
  QXSeries::Terms out;
  for (const auto& [k, p] : s.terms()) {
    QXSeries::XPoly np;
    for (const auto& [xk, v] : p) np.emplace(xk + sb, cyc_mul(v, cc));
    out.emplace(k + sa, std::move(np));
  }
  std::optional<ExpRational> t;
  if (s.trunc()) t = *s.trunc() + a;
  return QXSeries::from_keys(dq, dx, static_cast<int>(order), std::move(out), t);
}

QXSeries power(const QXSeries& f, int n) {
  if (n < 0) throw InvalidParams("negative power");
  QXSeries r = QXSeries::constant(CycNumber(1));
  for (int i = 0; i < n; ++i) r = mul(r, f);
  return r;
}

QXSeries geom_expand(int sign, const CycNumber& c, const ExpRational& a, const ExpRational& b,
                     const ExpRational& trunc) {
  if (b.sign() == 0) throw PoleAtQZero("denominator 1 - c x^a q^0 has no q-adic expansion");
  CycNumber r = sign < 0 ? cyc_neg(c) : c;
  std::vector<QXSeries::Term> terms;
  if (b.sign() > 0) {
    CycNumber cur(1);
    cur = lift_order(cur, r.order());
    for (long n = 0;; ++n) {
      ExpRational e = ExpRational(n) * b;
      if (e >= trunc) break;
      terms.push_back({e, ExpRational(n) * a, cur});
      cur = cyc_mul(cur, r);
    }
  } else {
    // 1/(1-r y) = -r^{-1} y^{-1} / (1 - r^{-1} y^{-1}),  y = x^a q^b
    CycNumber ri = cyc_inverse(r);
    CycNumber cur = cyc_neg(ri);
    for (long n = 1;; ++n) {
      ExpRational e = -ExpRational(n) * b;
      if (e >= trunc) break;
      terms.push_back({e, -ExpRational(n) * a, cur});
      cur = cyc_mul(cur, ri);
    }
  }
  return QXSeries::from_terms(terms, trunc, b.den_long(), a.den_long(), r.order());
}

QXSeries invert_unit(const QXSeries& f, const ExpRational& trunc) {
  if (f.empty()) throw ZeroDivision("inverse of a series with no known terms");
  const auto& [vk, lead] = *f.terms().begin();
  if (lead.size() != 1) throw NotAUnit("leading q-coefficient has " + std::to_string(lead.size()) + " x-terms");
  const auto& [lx, lc] = *lead.begin();
  ExpRational v = f.qexp(vk), lam = f.xexp(lx);
  CycNumber lci = cyc_inverse(lc);
  // u = f / (lc x^lam q^v) = 1 + (positive valuation)
  QXSeries u = mono_scale(f, lci, -v, -lam);
  std::optional<ExpRational> tg = trunc;
  if (f.trunc()) tg = std::min(trunc, *f.trunc() - v - v);
  // w = 1/u known to relative order tg + v
  ExpRational rel = *tg + v;
  long dq = u.dq();
  long K = (rel * ExpRational(dq)).ceil_long();
  int order = u.order();
  QXSeries::Terms w;
  if (K > 0) w[0][0] = CycNumber(mpq_class(1), order);
  std::vector<std::pair<long, const QXSeries::XPoly*>> tail;
  for (const auto& [k, p] : u.terms())
    if (k > 0) tail.emplace_back(k, &p);
  for (long k = 1; k < K; ++k) {
    QXSeries::XPoly acc;
    for (const auto& [j, pj] : tail) {
      if (j > k) break;
      auto it = w.find(k - j);
      if (it == w.end()) continue;
      addmul_poly(acc, *pj, it->second, order);
    }
    QXSeries::XPoly nacc;
    for (auto& [xk, c] : acc)
      if (!c.is_zero()) nacc.emplace(xk, cyc_neg(c));
    if (!nacc.empty()) w.emplace(k, std::move(nacc));
  }
  QXSeries ws = QXSeries::from_keys(dq, u.dx(), order, std::move(w), rel);
  return mono_scale(ws, lci, -v, -lam);
}

EqualityVerdict equal_up_to(const QXSeries& f, const QXSeries& g, const ExpRational& Q) {
  if ((f.trunc() && Q > *f.trunc()) || (g.trunc() && Q > *g.trunc()))
    throw InsufficientPrecision("comparison order " + Q.str() + " exceeds known precision");
  QXSeries a = f, b = g;
  unify(a, b);
  QXSeries d = sub(a, b);
  long qk = (Q * ExpRational(d.dq())).ceil_long();
  EqualityVerdict v;
  for (const auto& [k, p] : d.terms()) {
    if (k >= qk) break;
    const auto& [xk, c] = *p.begin();
    ExpRational qe = d.qexp(k), xe = d.xexp(xk);
    v.pass = false;
    v.witness = Discrepancy{qe, xe, a.coeff(qe, xe), b.coeff(qe, xe)};
    break;
  }
  return v;
}

std::complex<double> evaluate(const QXSeries& f, std::complex<double> tau, std::complex<double> z) {
  const double two_pi = 2.0 * M_PI;
  std::complex<double> sum = 0;
  const std::complex<double> I(0, 1);
  for (const auto& [k, p] : f.terms()) {
    double e = static_cast<double>(k) / f.dq();
    for (const auto& [xk, c] : p) {
      double lam = static_cast<double>(xk) / f.dx();
      sum += c.embed() * std::exp(I * two_pi * (e * tau + lam * z));
    }
  }
  return sum;
}

nlohmann::json cyc_to_json(const CycNumber& c) {
  if (c.is_rational()) return c.coeffs()[0].get_str();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : c.coeffs()) arr.push_back(v.get_str());
  return nlohmann::json{{"order", c.order()}, {"coeffs", arr}};
}

CycNumber cyc_from_json(const nlohmann::json& j, int order) {
  if (j.is_string()) return CycNumber(ExpRational::parse(j.get<std::string>()).value(), order);
  if (j.is_number_integer()) return CycNumber(mpq_class(j.get<long>()), order);
  int n = j.at("order").get<int>();
  std::vector<mpq_class> c;
  for (const auto& v : j.at("coeffs")) c.push_back(ExpRational::parse(v.get<std::string>()).value());
  return lift_order(CycNumber(n, std::move(c)), order);
}

nlohmann::json to_json(const QXSeries& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, p] : f.terms()) {
    nlohmann::json xs = nlohmann::json::array();
    for (const auto& [xk, c] : p) xs.push_back(nlohmann::json::array({f.xexp(xk).str(), cyc_to_json(c)}));
    terms.push_back(nlohmann::json::array({f.qexp(k).str(), xs}));
  }
  return nlohmann::json{{"lattice", {f.dq(), f.dx()}},
                        {"order", f.order()},
                        {"trunc", f.trunc() ? f.trunc()->str() : std::string("inf")},
                        {"terms", terms}};
}

QXSeries series_from_json(const nlohmann::json& j) {
  long dq = j.at("lattice").at(0).get<long>(), dx = j.at("lattice").at(1).get<long>();
  int order = j.contains("order") ? j.at("order").get<int>() : 1;
  std::optional<ExpRational> t;
  std::string ts = j.at("trunc").get<std::string>();
  if (ts != "inf") t = ExpRational::parse(ts);
  std::vector<QXSeries::Term> terms;
  for (const auto& qt : j.at("terms")) {
    ExpRational qe = ExpRational::parse(qt.at(0).get<std::string>());
    for (const auto& xt : qt.at(1))
      terms.push_back({qe, ExpRational::parse(xt.at(0).get<std::string>()), cyc_from_json(xt.at(1), order)});
  }
  return QXSeries::from_terms(terms, t, dq, dx, order);
}

std::string format_series(const QXSeries& f, std::size_t max_terms) {
  std::ostringstream os;
  std::size_t shown = 0, total = f.term_count();
  for (const auto& [k, p] : f.terms()) {
    for (const auto& [xk, c] : p) {
      if (shown == max_terms) break;
      if (shown) os << " + ";
      os << "(" << c.str() << ")";
      ExpRational qe = f.qexp(k), xe = f.xexp(xk);
      if (qe != ExpRational(0)) os << "*q^" << qe.str();
      if (xe != ExpRational(0)) os << "*x^" << xe.str();
      ++shown;
    }
    if (shown == max_terms) break;
  }
  if (total == 0) os << "0";
  if (total > shown) os << " \u2026 (+" << (total - shown) << " more)";
  if (f.trunc()) os << " + O(q^" << f.trunc()->str() << ")";
  return os.str();
}

}  // namespace mockforms
