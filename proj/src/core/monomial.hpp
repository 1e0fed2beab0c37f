#pragma once

#include "ratfun.hpp"

namespace wqt {

// Exponent of the form c0 + cb*b + cib/b in a formal grading symbol b (the
// exponent bookkeeping behind t = q^b folding). Products assert that no b^2
// or b^-2 terms survive; none arise in any implemented flow.
struct BGrad {
  Rat c0, cb, cib;

  BGrad() : c0(0), cb(0), cib(0) {}
  explicit BGrad(Rat pure) : c0(std::move(pure)), cb(0), cib(0) {}
  BGrad(Rat a, Rat b, Rat c) : c0(std::move(a)), cb(std::move(b)), cib(std::move(c)) {}

  static BGrad beta(Rat c) { return BGrad(Rat(0), std::move(c), Rat(0)); }
  static BGrad inv_beta(Rat c) { return BGrad(Rat(0), Rat(0), std::move(c)); }

  bool is_zero() const { return sgn(c0) == 0 && sgn(cb) == 0 && sgn(cib) == 0; }
  bool is_pure() const { return sgn(cb) == 0 && sgn(cib) == 0; }

  BGrad operator-() const { return BGrad(-c0, -cb, -cib); }
  BGrad operator+(const BGrad& o) const { return BGrad(c0 + o.c0, cb + o.cb, cib + o.cib); }
  BGrad operator-(const BGrad& o) const { return BGrad(c0 - o.c0, cb - o.cb, cib - o.cib); }
  BGrad operator*(const Rat& s) const { return BGrad(c0 * s, cb * s, cib * s); }

  BGrad operator*(const BGrad& o) const {
    if ((sgn(cb) != 0 && sgn(o.cb) != 0) || (sgn(cib) != 0 && sgn(o.cib) != 0))
      throw std::domain_error("BGrad: product leaves the linear span");
    return BGrad(c0 * o.c0 + cb * o.cib + cib * o.cb, c0 * o.cb + cb * o.c0,
                 c0 * o.cib + cib * o.c0);
  }

  BGrad& operator+=(const BGrad& o) { return *this = *this + o; }

  bool operator==(const BGrad& o) const { return c0 == o.c0 && cb == o.cb && cib == o.cib; }
  bool operator!=(const BGrad& o) const { return !(*this == o); }
  bool operator<(const BGrad& o) const {
    if (c0 != o.c0) return c0 < o.c0;
    if (cb != o.cb) return cb < o.cb;
    return cib < o.cib;
  }

  std::string str() const {
    std::string s;
    auto app = [&s](const Rat& c, const char* tag) {
      if (sgn(c) == 0) return;
      if (!s.empty() && sgn(c) > 0) s += "+";
      s += c.get_str();
      s += tag;
    };
    app(c0, "");
    app(cb, "b");
    app(cib, "/b");
    return s.empty() ? "0" : s;
  }
};

// Scalar monomial q^qe t^te x^xe with rational q,t exponents and a b-graded
// x exponent. The b-linear part of any q exponent is folded into te on entry
// (t = q^b); x powers keep their b parts as opaque matched data.
struct Monomial {
  Rat qe, te;
  BGrad xe;

  Monomial() : qe(0), te(0), xe() {}
  Monomial(Rat q, Rat t) : qe(std::move(q)), te(std::move(t)), xe() {}
  Monomial(Rat q, Rat t, BGrad x) : qe(std::move(q)), te(std::move(t)), xe(std::move(x)) {}

  static Monomial qt(long a, long b) { return Monomial(Rat(a), Rat(b)); }
  static Monomial xpow(Rat e) { return Monomial(Rat(0), Rat(0), BGrad(std::move(e))); }

  bool is_one() const { return sgn(qe) == 0 && sgn(te) == 0 && xe.is_zero(); }
  bool is_scalar() const { return xe.is_zero(); }
  bool integer_qt() const { return is_integer(qe) && is_integer(te); }

  Monomial operator*(const Monomial& o) const {
    return Monomial(qe + o.qe, te + o.te, xe + o.xe);
  }
  Monomial inv() const { return Monomial(-qe, -te, -xe); }
  Monomial pow(long k) const { return Monomial(qe * k, te * k, xe * Rat(k)); }

  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }

  bool operator==(const Monomial& o) const { return qe == o.qe && te == o.te && xe == o.xe; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const {
    if (qe != o.qe) return qe < o.qe;
    if (te != o.te) return te < o.te;
    return xe < o.xe;
  }

  // scalar monomials with integer exponents convert to rational functions
  RatFun to_ratfun() const {
    if (!xe.is_zero()) throw std::domain_error("Monomial: x power in scalar context");
    if (!integer_qt()) throw std::domain_error("Monomial: fractional exponent in scalar context");
    return RatFun::monomial(to_long(qe), to_long(te));
  }

  std::string str() const {
    if (is_one()) return "1";
    std::string s;
    auto app = [&s](const char* v, const Rat& e) {
      if (sgn(e) == 0) return;
      s += v;
      if (e != 1) s += "^" + e.get_str();
    };
    app("q", qe);
    app("t", te);
    if (!xe.is_zero()) {
      s += "x^";
      bool paren = !xe.is_pure();
      s += paren ? "(" + xe.str() + ")" : xe.str();
    }
    return s;
  }
};

// fold a b-graded q exponent via t = q^b; the 1/b part must vanish
inline void fold_q_exponent(const BGrad& e, Rat& qe, Rat& te) {
  if (sgn(e.cib) != 0) throw std::domain_error("fold_q_exponent: residual 1/b part");
  qe += e.c0;
  te += e.cb;
}

}  // namespace wqt
