#ifndef SSCMC_ROOTS_HPP
#define SSCMC_ROOTS_HPP

#include <cmath>
#include <string>

#include "sscmc/errors.hpp"

namespace sscmc {

// Bracketed root finder: bisection refined by secant steps.  The bracket is
// maintained at every iteration, and at least every other step is a plain
// bisection, so the bracket width is guaranteed to halve every two
// iterations.  Returns a point x with |x - root| <= x_tol.
//
// Throws std::invalid_argument if [lo, hi] does not bracket a sign change,
// ConvergenceError if max_iter is exhausted.
template <class F>
double find_root(F&& f, double lo, double hi, double x_tol, int max_iter = 240) {
  if (!(lo < hi)) throw std::invalid_argument("find_root: empty bracket");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi))
    throw std::invalid_argument("find_root: endpoints do not bracket a root");

  for (int iter = 0; iter < max_iter; ++iter) {
    const double width = hi - lo;
    if (width <= x_tol) return 0.5 * (lo + hi);

    double x;
    if (iter % 2 == 0) {
      x = lo - flo * width / (fhi - flo);  // secant through the bracket
      const double guard = 0.01 * width;
      if (!std::isfinite(x) || x <= lo + guard || x >= hi - guard)
        x = 0.5 * (lo + hi);
    } else {
      x = 0.5 * (lo + hi);
    }

    const double fx = f(x);
    if (fx == 0.0) return x;
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  }
  throw ConvergenceError("find_root: no convergence to tolerance " + std::to_string(x_tol));
}

}  // namespace sscmc

#endif
