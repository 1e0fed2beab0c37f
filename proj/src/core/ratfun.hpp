#pragma once

#include "laurent.hpp"

namespace wqt {

// [n]_q = (q^n - q^-n)/(q - q^-1) expanded; qint(0) = 0
LaurentPoly qint(long n);

// Rational function num/den in q, t. Canonical form: gcd(num,den) trivial,
// den has min exponents 0 in both variables, integer primitive coefficients,
// and positive leading coefficient under graded-lex. Structural equality then
// decides mathematical equality.
class RatFun {
 public:
  RatFun() : num_(), den_(Rat(1)) {}
  RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}
  RatFun(long c) : num_(Rat(c)), den_(Rat(1)) {}
  RatFun(LaurentPoly n) : num_(std::move(n)), den_(Rat(1)) {}
  RatFun(LaurentPoly n, LaurentPoly d, bool reduce = true);

  static RatFun monomial(long a, long b, Rat coeff = Rat(1)) {
    return RatFun(LaurentPoly::monomial(a, b, std::move(coeff)));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun inv() const;

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }
  // deterministic total order for container keys
  bool operator<(const RatFun& o) const;

  RatFun substitute_modes(long n) const;
  RatFun swap_qt() const { return RatFun(num_.swap_qt(), den_.swap_qt()); }
  // q -> q^-1, t -> t^-1
  RatFun invert_vars() const { return substitute_modes(-1); }

  RatFun specialize_t1() const;
  RatFun specialize_q1() const;

  std::complex<double> eval(std::complex<double> q0, std::complex<double> t0) const;
  Rat eval_rat(const Rat& q0, const Rat& t0) const;

  std::string str() const;

 private:
  void canonicalize(bool reduce);
  LaurentPoly num_, den_;
};

struct GTRatFun;

// q = i specialization of a RatFun: Gaussian-coefficient rational function of t
GTRatFun at_q_i(const RatFun& f);
RatFun at_q_m1(const RatFun& f);

// rational function of t over Gaussian rationals; light canonical form
// (den nonzero, min t-exponent 0, leading coefficient normalized to 1)
struct GTRatFun {
  GaussTPoly num, den;

  GTRatFun() : num(), den(GaussRat(Rat(1))) {}
  GTRatFun(GaussTPoly n, GaussTPoly d);

  bool is_zero() const { return num.is_zero(); }

  GTRatFun operator+(const GTRatFun& o) const;
  GTRatFun operator-(const GTRatFun& o) const;
  GTRatFun operator*(const GTRatFun& o) const;
  GTRatFun operator/(const GTRatFun& o) const;
  GTRatFun operator-() const;

  bool operator==(const GTRatFun& o) const;
  bool operator!=(const GTRatFun& o) const { return !(*this == o); }

  std::string str() const;
};

}  // namespace wqt
