#include "ratfun.hpp"

#include <vector>

namespace wqt {

LaurentPoly qint(long n) {
  LaurentPoly p;
  if (n < 0) throw std::domain_error("qint: negative n");
  for (long k = 0; k < n; k++) p.add_term({n - 1 - 2 * k, 0}, Rat(1));
  return p;
}

RatFun::RatFun(LaurentPoly n, LaurentPoly d, bool reduce) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw DivisionByZero("RatFun: zero denominator");
  canonicalize(reduce);
}

void RatFun::canonicalize(bool reduce) {
  if (num_.is_zero()) {
    den_ = LaurentPoly(Rat(1));
    return;
  }
  if (reduce && !den_.is_monomial() && !num_.is_monomial()) {
    LaurentPoly g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.div_exact(g);
      den_ = den_.div_exact(g);
    }
  }
  // shift den min exponents to zero, make integer primitive, positive leading
  long a = den_.min_qexp(), b = den_.min_texp();
  Rat c = den_.content();
  if (sgn(den_.leading().second) < 0) c = -c;
  den_ = den_.shifted(-a, -b) * (Rat(1) / c);
  num_ = num_.shifted(-a, -b) * (Rat(1) / c);
}

RatFun RatFun::operator-() const {
  RatFun r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
  // combine over the lcm of the denominators; series accumulation adds terms
  // whose denominators share most factors, so this keeps the gcd operands at
  // half the size of the naive cross-multiplication
  LaurentPoly g = laurent_gcd(den_, o.den_);
  if (g.is_one()) return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  LaurentPoly da = den_.div_exact(g), db = o.den_.div_exact(g);
  return RatFun(num_ * db + o.num_ * da, den_ * db);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  if (is_zero() || o.is_zero()) return RatFun();
  // cross-reduce before multiplying to keep intermediates small
  RatFun x(num_, o.den_);
  RatFun y(o.num_, den_);
  // cross-reduction leaves the four corner gcds trivial, so the product is
  // already reduced; only the denominator normalization remains
  RatFun r;
  r.num_ = x.num_ * y.num_;
  r.den_ = x.den_ * y.den_;
  r.canonicalize(false);
  return r;
}

RatFun RatFun::inv() const {
  if (is_zero()) throw DivisionByZero("RatFun::inv: zero");
  RatFun r;
  r.num_ = den_;
  r.den_ = num_;
  r.canonicalize(false);
  return r;
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inv(); }

bool RatFun::operator<(const RatFun& o) const {
  auto cmp_poly = [](const LaurentPoly& x, const LaurentPoly& y) -> int {
    auto ix = x.terms().begin(), iy = y.terms().begin();
    for (; ix != x.terms().end() && iy != y.terms().end(); ++ix, ++iy) {
      if (ix->first < iy->first) return -1;
      if (iy->first < ix->first) return 1;
      if (ix->second < iy->second) return -1;
      if (iy->second < ix->second) return 1;
    }
    if (iy != y.terms().end()) return -1;
    if (ix != x.terms().end()) return 1;
    return 0;
  };
  int c = cmp_poly(num_, o.num_);
  if (c != 0) return c < 0;
  return cmp_poly(den_, o.den_) < 0;
}

RatFun RatFun::substitute_modes(long n) const {
  if (n == 0) throw std::domain_error("substitute_modes: n = 0");
  return RatFun(num_.substitute_modes(n), den_.substitute_modes(n), false);
}

RatFun RatFun::specialize_t1() const {
  LaurentPoly d = den_.specialize_t1();
  if (d.is_zero()) throw PoleAtSpecialization("specialize t=1: denominator vanishes");
  return RatFun(num_.specialize_t1(), d);
}

RatFun RatFun::specialize_q1() const {
  LaurentPoly d = den_.specialize_q1();
  if (d.is_zero()) throw PoleAtSpecialization("specialize q=1: denominator vanishes");
  return RatFun(num_.specialize_q1(), d);
}

std::complex<double> RatFun::eval(std::complex<double> q0, std::complex<double> t0) const {
  return num_.eval(q0, t0) / den_.eval(q0, t0);
}

Rat RatFun::eval_rat(const Rat& q0, const Rat& t0) const {
  Rat d = den_.eval_rat(q0, t0);
  if (sgn(d) == 0) throw PoleAtSpecialization("eval_rat: denominator vanishes");
  return num_.eval_rat(q0, t0) / d;
}

std::string RatFun::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.str();
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

// --- Gaussian-coefficient rational functions of t ---

namespace {

using GU = std::vector<GaussRat>;  // dense in t, ascending

GU gu_from(const GaussTPoly& p, long tmin) {
  GU v;
  for (auto& [e, c] : p.terms()) {
    size_t i = (size_t)(e - tmin);
    if (v.size() <= i) v.resize(i + 1);
    v[i] = c;
  }
  return v;
}
void gu_trim(GU& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}
GU gu_rem(GU a, const GU& b) {
  gu_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    GaussRat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); i++) a[off + i] = a[off + i] - f * b[i];
    gu_trim(a);
  }
  return a;
}
GU gu_div_exact(GU a, const GU& b) {
  gu_trim(a);
  if (a.empty()) return {};
  if (b.empty() || a.size() < b.size()) throw std::logic_error("gu_div_exact: not exact");
  GU q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    GaussRat f = a.back() / b.back();
    q[a.size() - b.size()] = f;
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); i++) a[off + i] = a[off + i] - f * b[i];
    gu_trim(a);
  }
  if (!a.empty()) throw std::logic_error("gu_div_exact: not exact");
  return q;
}
GU gu_gcd(GU a, GU b) {
  gu_trim(a);
  gu_trim(b);
  while (!b.empty()) {
    GU r = gu_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    GaussRat lc = a.back();
    for (auto& c : a) c = c / lc;
  }
  return a;
}
GaussTPoly gu_to(const GU& v) {
  GaussTPoly p;
  for (size_t i = 0; i < v.size(); i++) p.add_term((long)i, v[i]);
  return p;
}

}  // namespace

GTRatFun::GTRatFun(GaussTPoly n, GaussTPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw DivisionByZero("GTRatFun: zero denominator");
  if (num.is_zero()) {
    den = GaussTPoly(GaussRat(Rat(1)));
    return;
  }
  long nmin = num.terms().begin()->first, dmin = den.terms().begin()->first;
  GU un = gu_from(num, nmin), ud = gu_from(den, dmin);
  GU g = gu_gcd(un, ud);
  if (g.size() > 1) {
    un = gu_div_exact(un, g);
    ud = gu_div_exact(ud, g);
  }
  // normalize: den leading coefficient 1, den min exponent 0
  GaussRat lc = ud.back();
  for (auto& c : un) c = c / lc;
  for (auto& c : ud) c = c / lc;
  GaussTPoly pn = gu_to(un), pd = gu_to(ud);
  long strip = 0;
  if (!pd.is_zero()) strip = pd.terms().begin()->first;
  num = GaussTPoly();
  for (auto& [e, c] : pn.terms()) num.add_term(e + nmin - dmin - strip, c);
  den = GaussTPoly();
  for (auto& [e, c] : pd.terms()) den.add_term(e - strip, c);
}

GTRatFun GTRatFun::operator+(const GTRatFun& o) const {
  return GTRatFun(num * o.den + o.num * den, den * o.den);
}
GTRatFun GTRatFun::operator-(const GTRatFun& o) const {
  return GTRatFun(num * o.den - o.num * den, den * o.den);
}
GTRatFun GTRatFun::operator*(const GTRatFun& o) const { return GTRatFun(num * o.num, den * o.den); }
GTRatFun GTRatFun::operator/(const GTRatFun& o) const {
  if (o.is_zero()) throw DivisionByZero("GTRatFun: division by zero");
  return GTRatFun(num * o.den, den * o.num);
}
GTRatFun GTRatFun::operator-() const {
  GTRatFun r = *this;
  r.num = -r.num;
  return r;
}

bool GTRatFun::operator==(const GTRatFun& o) const { return num * o.den == o.num * den; }

std::string GTRatFun::str() const {
  if (den == GaussTPoly(GaussRat(Rat(1)))) return num.str();
  return "[" + num.str() + "] / [" + den.str() + "]";
}

RatFun at_q_m1(const RatFun& f) {
  LaurentPoly d = at_q_m1(f.den());
  if (d.is_zero()) throw PoleAtSpecialization("q=-1: denominator vanishes identically");
  return RatFun(at_q_m1(f.num()), d);
}

GTRatFun at_q_i(const RatFun& f) {
  GaussTPoly d = at_q_i(f.den());
  if (d.is_zero()) throw PoleAtSpecialization("q=i: denominator vanishes identically");
  return GTRatFun(at_q_i(f.num()), d);
}

}  // namespace wqt
