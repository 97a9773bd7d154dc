#ifndef SSCMC_KERNELS_HPP
#define SSCMC_KERNELS_HPP

#include <array>
#include <cmath>

#include "sscmc/geometry.hpp"

// Scalar kernels entering the leaf height integrals and the disjointness
// criteria.  Everything is expressed through the turning radius R of a leaf
// on the lower domain curve (tilde-family quantities are obtained by the
// (H, c) -> (-H, -c) mapping before reaching this layer).
//
// The central object is the radicand
//     A(x,R)^2 + B(x),   A = H x^3 - H R^3 - R^{3/2}(2M-R)^{1/2},  B = x^3(x-2M),
// which appears under every square root.  It vanishes linearly at x = R, and
// the quintic cofactor P with A^2 + B = (x - R) P(x) is computed once per R
// by exact synthetic division (x = R is an exact root, so the quotient
// carries no remainder).  Evaluating the factored form (x - R) P(x) instead
// of the raw sum avoids the cancellation that otherwise destroys the
// integrands near the turning radius.
namespace sscmc {

// A(x, R) for the lower-curve families; equals H x^3 + c(R).
inline double kernel_A(double x, double R, double H, double M) {
  return H * x * x * x - H * R * R * R - R * std::sqrt(R) * std::sqrt(2.0 * M - R);
}

inline double kernel_B(double x, double M) { return x * x * x * (x - 2.0 * M); }

// F(x, R) = x^2 (-3x^2 (x + R - 2M) + (2x - 3M)(x^2 + Rx + R^2)).
inline double kernel_F(double x, double R, double M) {
  return x * x *
         (-3.0 * x * x * (x + R - 2.0 * M) + (2.0 * x - 3.0 * M) * (x * x + R * x + R * R));
}

// G(x, R) = x^2 sqrt(-h(R)) (x(R - 3M) + R(x - 3M)).
inline double kernel_G(double x, double R, double M) {
  const double sqrt_mh = std::sqrt(2.0 * M / R - 1.0);
  return x * x * sqrt_mh * (x * (R - 3.0 * M) + R * (x - 3.0 * M));
}

// J(R) = -3 H R^{3/2} (2M - R)^{1/2} + (2R - 3M): the Jacobian factor with
// dR/dc = sqrt(-h(R)) / J(R) along a branch of the lower domain curve.
// Negative on the decreasing branch (SigmaMinus side), positive on the
// increasing one (SigmaPlus side), zero exactly at the limiting cylinder.
inline double kernel_J(double R, double H, double M) { return cylinder_balance(R, H, M); }

// Degree-5 polynomial with ascending coefficients.
struct Quintic {
  std::array<double, 6> coef{};

  double operator()(double x) const {
    double acc = coef[5];
    for (int i = 4; i >= 0; --i) acc = acc * x + coef[i];
    return acc;
  }
};

// Which linear factor is pulled out of A^2 + B: (R - x) P(x) on the
// SigmaMinus side (domain x <= R), (x - R) P(x) on the SigmaPlus side
// (x >= R).  P is positive on the corresponding leaf domain.
enum class FactorSide { minus, plus };

// Quintic cofactor of A^2 + B with respect to its root x = R.
// A^2 + B = H^2 x^6 + x^4 + (2 H c - 2M) x^3 + c^2  with c = c(R).
inline Quintic radicand_cofactor(double R, double H, double M, FactorSide side) {
  const double c = -H * R * R * R - R * std::sqrt(R) * std::sqrt(2.0 * M - R);
  const double q6 = H * H;
  const double q4 = 1.0;
  const double q3 = 2.0 * H * c - 2.0 * M;
  // synthetic division by (x - R), descending recurrence; the remainder is
  // (A^2 + B)(R) = 0 and is discarded
  const double b5 = q6;
  const double b4 = R * b5;
  const double b3 = q4 + R * b4;
  const double b2 = q3 + R * b3;
  const double b1 = R * b2;
  const double b0 = R * b1;
  Quintic p;
  p.coef = {b0, b1, b2, b3, b4, b5};
  if (side == FactorSide::minus)
    for (double& v : p.coef) v = -v;
  return p;
}

// Factored evaluation of A^2 + B.
inline double radicand_factored(double x, double R, const Quintic& cofactor, FactorSide side) {
  return (side == FactorSide::minus) ? (R - x) * cofactor(x) : (x - R) * cofactor(x);
}

}  // namespace sscmc

#endif
