#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wqt {

// Exact rational scalar. mpq_class keeps den > 0 and gcd(num,den) = 1 once
// canonicalized, and arithmetic on canonical operands stays canonical.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n, long d = 1) {
  if (d == 0) throw std::domain_error("rat: zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline Rat rat_from_string(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("to_long: not an integer");
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("to_long: overflow");
  return r.get_num().get_si();
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Gaussian rational a + b*i, component-wise canonical.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(Rat r) : re(std::move(r)), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return sgn(im) == 0; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  GaussRat conj() const { return GaussRat(re, -im); }

  Rat norm() const { return re * re + im * im; }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
  GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
  GaussRat operator*(const GaussRat& o) const {
    return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GaussRat inv() const {
    Rat n = norm();
    if (sgn(n) == 0) throw std::domain_error("GaussRat: division by zero");
    return GaussRat(re / n, -im / n);
  }
  GaussRat operator/(const GaussRat& o) const { return *this * o.inv(); }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }

  std::string str() const;
};

inline std::string GaussRat::str() const {
  if (sgn(im) == 0) return re.get_str();
  std::string s;
  if (sgn(re) != 0) s += re.get_str();
  if (sgn(im) > 0 && !s.empty()) s += "+";
  if (im == -1)
    s += "-i";
  else if (im == 1)
    s += "i";
  else
    s += im.get_str() + "i";
  return s;
}

}  // namespace wqt
