#pragma once

#include <complex>
#include <stdexcept>

#include "series.hpp"

namespace wqt {

struct NumericPole : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonConvergent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kNumericTol = 1e-9;

// rational function at a numeric point, guarded against denominator blowup
std::complex<double> eval_ratfun(const RatFun& f, std::complex<double> q0,
                                 std::complex<double> t0);

// truncated series at a numeric point; the magnitude of the top-degree term
// serves as the tail estimate and must stay below tol * max(1, |sum|)
std::complex<double> eval_series(const FormalSeries& s, std::complex<double> x0,
                                 std::complex<double> q0, std::complex<double> t0,
                                 double tol = kNumericTol);

}  // namespace wqt
