#include "numeric.hpp"

#include <cmath>

namespace wqt {

std::complex<double> eval_ratfun(const RatFun& f, std::complex<double> q0,
                                 std::complex<double> t0) {
  std::complex<double> d = f.den().eval(q0, t0);
  double scale = f.den().eval_scale(q0, t0);
  if (std::abs(d) < 1e-13 * std::max(1e-287, scale))
    throw NumericPole("eval_ratfun: denominator vanishes at the point");
  return f.num().eval(q0, t0) / d;
}

std::complex<double> eval_series(const FormalSeries& s, std::complex<double> x0,
                                 std::complex<double> q0, std::complex<double> t0, double tol) {
  std::complex<double> sum = 0.0;
  double last = 0.0;
  for (long k = s.lo(); k <= s.hi(); ++k) {
    const RatFun& c = s.coeff(k);
    if (c.is_zero()) continue;
    std::complex<double> term =
        eval_ratfun(c, q0, t0) * std::pow(x0, static_cast<double>(k));
    sum += term;
    if (k == s.hi()) last = std::abs(term);
  }
  const RatFun& top = s.coeff(s.hi());
  if (!top.is_zero() && last > tol * std::max(1.0, std::abs(sum)))
    throw NonConvergent("eval_series: tail estimate exceeds tolerance");
  return sum;
}

}  // namespace wqt
