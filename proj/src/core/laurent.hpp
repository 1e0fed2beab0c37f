#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace wqt {

struct Exp2 {
  long q = 0;
  long t = 0;
  bool operator==(const Exp2& o) const { return q == o.q && t == o.t; }
  bool operator<(const Exp2& o) const { return q < o.q || (q == o.q && t < o.t); }
};

// graded-lex: total degree first, then q, then t
inline bool grlex_less(const Exp2& a, const Exp2& b) {
  long da = a.q + a.t, db = b.q + b.t;
  if (da != db) return da < db;
  if (a.q != b.q) return a.q < b.q;
  return a.t < b.t;
}

struct PoleAtSpecialization : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroMode : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonExpandable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sparse bivariate Laurent polynomial in q, t over Rat. No zero coefficients
// are stored; the empty map is the zero polynomial.
class LaurentPoly {
 public:
  using Map = std::map<Exp2, Rat>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rat& c) {
    if (!wqt::is_zero(c)) c_[{0, 0}] = c;
  }
  explicit LaurentPoly(long c) : LaurentPoly(Rat(c)) {}

  static LaurentPoly monomial(long a, long b, Rat coeff = Rat(1)) {
    LaurentPoly p;
    if (!wqt::is_zero(coeff)) p.c_[{a, b}] = std::move(coeff);
    return p;
  }
  static LaurentPoly qpow(long a) { return monomial(a, 0); }
  static LaurentPoly tpow(long b) { return monomial(0, b); }

  const Map& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const {
    return c_.size() == 1 && c_.begin()->first == Exp2{0, 0} && c_.begin()->second == 1;
  }
  bool is_monomial() const { return c_.size() == 1; }
  bool is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == Exp2{0, 0});
  }
  size_t term_count() const { return c_.size(); }

  void add_term(Exp2 e, const Rat& v) {
    if (wqt::is_zero(v)) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = v;
    } else {
      it->second += v;
      if (wqt::is_zero(it->second)) c_.erase(it);
    }
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_[e] = -v;
    return r;
  }
  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, v] : o.c_) r.add_term(e, v);
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, v] : o.c_) r.add_term(e, -v);
    return r;
  }
  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, v1] : c_)
      for (auto& [e2, v2] : o.c_) r.add_term({e1.q + e2.q, e1.t + e2.t}, v1 * v2);
    return r;
  }
  LaurentPoly operator*(const Rat& s) const {
    LaurentPoly r;
    if (wqt::is_zero(s)) return r;
    for (auto& [e, v] : c_) r.c_[e] = v * s;
    return r;
  }
  friend LaurentPoly operator*(const Rat& s, const LaurentPoly& p) { return p * s; }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // multiply by q^a t^b
  LaurentPoly shifted(long a, long b) const {
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_[{e.q + a, e.t + b}] = v;
    return r;
  }

  // exponent scaling (q,t) -> (q^n, t^n); n may be negative
  LaurentPoly substitute_modes(long n) const {
    if (n == 0) throw ZeroMode("substitute_modes: n = 0");
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_[{e.q * n, e.t * n}] = v;
    return r;
  }

  // swap the roles of q and t
  LaurentPoly swap_qt() const {
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_[{e.t, e.q}] = v;
    return r;
  }

  long min_qexp() const;
  long max_qexp() const;
  long min_texp() const;
  long max_texp() const;

  // graded-lex maximal term
  std::pair<Exp2, Rat> leading() const;

  // gcd of all coefficients, made positive; content of zero is zero
  Rat content() const;

  LaurentPoly specialize_t1() const {
    LaurentPoly r;
    for (auto& [e, v] : c_) r.add_term({e.q, 0}, v);
    return r;
  }
  LaurentPoly specialize_q1() const {
    LaurentPoly r;
    for (auto& [e, v] : c_) r.add_term({0, e.t}, v);
    return r;
  }

  // formal q-derivative
  LaurentPoly dq() const {
    LaurentPoly r;
    for (auto& [e, v] : c_)
      if (e.q != 0) r.add_term({e.q - 1, e.t}, v * Rat(e.q));
    return r;
  }

  std::complex<double> eval(std::complex<double> q0, std::complex<double> t0) const;
  // sum of term magnitudes at the point, for relative cancellation tests
  double eval_scale(std::complex<double> q0, std::complex<double> t0) const;

  // exact evaluation at rational points
  Rat eval_rat(const Rat& q0, const Rat& t0) const;

  // exact division; throws DivisionByZero on zero divisor and
  // std::logic_error if the division is not exact
  LaurentPoly div_exact(const LaurentPoly& d) const;

  std::string str() const;

 private:
  Map c_;
};

// gcd of Laurent polynomials, defined on the polynomial parts after shifting
// min exponents to zero; result is primitive with positive graded-lex leading
// coefficient and min exponents zero.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Laurent polynomial in t with Gaussian-rational coefficients: the image of a
// LaurentPoly under q = i (and general complex-free work at fixed q).
class GaussTPoly {
 public:
  using Map = std::map<long, GaussRat>;

  GaussTPoly() = default;
  explicit GaussTPoly(const GaussRat& c) {
    if (!c.is_zero()) c_[0] = c;
  }
  static GaussTPoly monomial(long b, GaussRat coeff) {
    GaussTPoly p;
    if (!coeff.is_zero()) p.c_[b] = std::move(coeff);
    return p;
  }

  const Map& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  void add_term(long e, const GaussRat& v) {
    if (v.is_zero()) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = v;
    } else {
      it->second = it->second + v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  GaussTPoly operator-() const {
    GaussTPoly r;
    for (auto& [e, v] : c_) r.c_[e] = -v;
    return r;
  }
  GaussTPoly operator+(const GaussTPoly& o) const {
    GaussTPoly r = *this;
    for (auto& [e, v] : o.c_) r.add_term(e, v);
    return r;
  }
  GaussTPoly operator-(const GaussTPoly& o) const {
    GaussTPoly r = *this;
    for (auto& [e, v] : o.c_) r.add_term(e, -v);
    return r;
  }
  GaussTPoly operator*(const GaussTPoly& o) const {
    GaussTPoly r;
    for (auto& [e1, v1] : c_)
      for (auto& [e2, v2] : o.c_) r.add_term(e1 + e2, v1 * v2);
    return r;
  }
  GaussTPoly operator*(const GaussRat& s) const {
    GaussTPoly r;
    for (auto& [e, v] : c_) r.add_term(e, v * s);
    return r;
  }

  bool operator==(const GaussTPoly& o) const { return c_ == o.c_; }
  bool operator!=(const GaussTPoly& o) const { return !(*this == o); }

  bool all_real() const {
    for (auto& [e, v] : c_)
      if (!v.is_real()) return false;
    return true;
  }

  std::string str() const;

 private:
  Map c_;
};

// specialize q = i; exact, t stays symbolic
GaussTPoly at_q_i(const LaurentPoly& p);

// specialize q = -1; exact, t stays symbolic
LaurentPoly at_q_m1(const LaurentPoly& p);

std::string exp_str(const char* var, long e);

}  // namespace wqt
