#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ratfun.hpp"

namespace wqt {

// Laurent series in x over RatFun coefficients, exact on the window [lo,hi].
class FormalSeries {
 public:
  FormalSeries() : lo_(0), hi_(-1) {}
  FormalSeries(long lo, long hi) : lo_(lo), hi_(hi) {}

  long lo() const { return lo_; }
  long hi() const { return hi_; }

  const RatFun& coeff(long k) const;
  void set_coeff(long k, RatFun c);
  void add_coeff(long k, const RatFun& c);

  FormalSeries operator+(const FormalSeries& o) const;
  FormalSeries operator*(const FormalSeries& o) const;
  FormalSeries scaled(const RatFun& c) const;
  // multiply by c*x^shift
  FormalSeries shifted(long shift, const RatFun& c) const;

  bool window_equal(const FormalSeries& o) const;

  std::complex<double> eval(std::complex<double> x, std::complex<double> q,
                            std::complex<double> t) const;

  std::string str() const;

 private:
  long lo_, hi_;
  std::map<long, RatFun> c_;
};

// Truncated power series 1 + c1 x + ... + cN x^N used for exact kernel
// expansions. All operations truncate at order N.
class UniSeries {
 public:
  explicit UniSeries(long order) : c_(order + 1) {}

  static UniSeries one(long order);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const RatFun& operator[](long k) const { return c_[k]; }
  RatFun& operator[](long k) { return c_[k]; }

  UniSeries operator+(const UniSeries& o) const;
  UniSeries operator-(const UniSeries& o) const;
  UniSeries operator*(const UniSeries& o) const;
  UniSeries inv() const;

  bool operator==(const UniSeries& o) const { return c_ == o.c_; }

  // multiply by (1 - A x)^e for integer e
  void mul_binomial(const RatFun& A, long e);
  // multiply by prod_{k>=0} (1 - A nu^k x)^e, e = +1 or -1, via Euler's
  // q-binomial identities; exact at every order
  void mul_euler_tower(const RatFun& A, const RatFun& nu, int e);

  // exp(sum_{n>=1} p_n x^n / n) for the given p_n (n = 1..order)
  static UniSeries exp_modes(const std::vector<RatFun>& p, long order);

  FormalSeries to_formal() const;

  std::string str() const;

 private:
  std::vector<RatFun> c_;
};

// Bilateral series graded by an auxiliary weight with cut N: the coefficient
// of x^d is a polynomial in a bookkeeping variable s recording how many modes
// produced the term; products drop weight beyond the cut. Keys are (xdeg, w).
class WSeries {
 public:
  explicit WSeries(long cut) : cut_(cut) {}

  static WSeries one(long cut);
  // exp of a generator sum_{n=1..cut} (g[n-1]/n) (x^n - x^-n); each x^{+-n}
  // carries weight n
  static WSeries exp_antisym_modes(const std::vector<RatFun>& g, long cut);

  long cut() const { return cut_; }

  void add_term(long xdeg, long w, const RatFun& c);
  WSeries operator*(const WSeries& o) const;
  bool operator==(const WSeries& o) const;
  bool is_one() const;

  // forget the weight grading (s -> 1); window [-cut, cut]
  FormalSeries flatten() const;

 private:
  long cut_;
  std::map<std::pair<long, long>, RatFun> c_;
};

}  // namespace wqt
