#ifndef SSCMC_CRITERIA_HPP
#define SSCMC_CRITERIA_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sscmc/kernels.hpp"
#include "sscmc/quadrature.hpp"

// Analytic disjointness criteria: the derivative d ln V / dc (d ln U / dc
// for the tilde families) of a leaf coordinate at fixed radius with respect
// to the family constant.  A family whose derivative keeps one sign consists
// of pairwise disjoint leaves.
//
// The derivative is assembled from the kernels as
//    d ln V / dc = -+ bracket / (4 M J(R) sqrt(-h(R))),
//    bracket     = integral of (H F + G) / (|x-R|^{1/2} P^{3/2}) + A/sqrt(A^2+B),
// with the upper sign (and integration over [r, R]) on the SigmaMinus side
// and the lower sign (over [R, r]) on the SigmaPlus side.  The boundary
// ratio A/sqrt(A^2+B) equals -1 exactly at r = 0 and at r = 2M.
namespace sscmc {

struct CriteriaValue {
  double value = 0.0;     // d ln V / dc (d ln U / dc for tilde families)
  double bracket = 0.0;   // the J-scaled parenthesized quantity; stays finite
                          // at the cylinder limit where `value` diverges
  double jacobian = 0.0;  // J(R)
};

namespace detail {

struct CriteriaIntegrand {
  double M, H, R;
  Quintic cofactor;
  FactorSide side;

  // dist is |x - R|; the singular quadrature supplies it exactly
  double operator()(double x, double dist) const {
    const double num = H * kernel_F(x, R, M) + kernel_G(x, R, M);
    const double p = cofactor(x);
    return num / (std::sqrt(dist) * p * std::sqrt(p));
  }
  double operator()(double x) const { return (*this)(x, std::fabs(x - R)); }
};

inline double boundary_ratio(double x, double R, double H, double M, const Quintic& cof,
                             FactorSide side) {
  if (x == 0.0 || x == 2.0 * M) return -1.0;  // A < 0 and B = 0 there
  return kernel_A(x, R, H, M) / std::sqrt(radicand_factored(x, R, cof, side));
}

}  // namespace detail

// d ln V / dc for the Sigma families at radius r, with the leaf identified
// by its turning radius R.  SigmaMinus admits r in [0, R), SigmaPlus r in
// (R, infinity]; passing r = infinity on the SigmaPlus side evaluates the
// large-radius limit (boundary ratio sign(H), zero for maximal leaves).
inline CriteriaValue dlnV_dc(double r, double R, double H, double M, Family family,
                             const QuadratureConfig& cfg = {}) {
  check_mass(M);
  if (is_tilde(family)) throw std::domain_error("dlnV_dc: use dlnU_dc for the tilde families");
  if (!(R > 0.0 && R < 2.0 * M)) throw std::domain_error("dlnV_dc: R outside (0, 2M)");

  const double J = kernel_J(R, H, M);
  if (std::fabs(J) < 1e-12 * M)
    throw std::domain_error("dlnV_dc: cylinder limit J(R) = 0; the derivative diverges");

  const double sqrt_mh = std::sqrt(2.0 * M / R - 1.0);
  CriteriaValue out;
  out.jacobian = J;

  if (family == Family::SigmaMinus) {
    if (!(r >= 0.0 && r < R)) throw std::domain_error("dlnV_dc: r outside [0, R)");
    detail::CriteriaIntegrand g{M, H, R, radicand_cofactor(R, H, M, FactorSide::minus),
                                FactorSide::minus};
    const double integral = integrate_sqrt_singular(g, r, R, SingularEndpoint::upper, cfg);
    out.bracket = integral + detail::boundary_ratio(r, R, H, M, g.cofactor, FactorSide::minus);
    out.value = -out.bracket / (4.0 * M * J * sqrt_mh);
    return out;
  }

  // SigmaPlus
  if (!(r > R)) throw std::domain_error("dlnV_dc: r must exceed R");
  detail::CriteriaIntegrand g{M, H, R, radicand_cofactor(R, H, M, FactorSide::plus),
                              FactorSide::plus};
  double integral, boundary;
  if (std::isinf(r)) {
    const double split = R + std::max(2.0 * M - R, M);
    integral = integrate_sqrt_singular(g, R, split, SingularEndpoint::lower, cfg) +
               integrate_to_infinity(g, split, cfg);
    boundary = (H > 0.0) ? 1.0 : (H < 0.0 ? -1.0 : 0.0);
  } else {
    integral = integrate_sqrt_singular(g, R, r, SingularEndpoint::lower, cfg);
    boundary = detail::boundary_ratio(r, R, H, M, g.cofactor, FactorSide::plus);
  }
  out.bracket = integral + boundary;
  out.value = out.bracket / (4.0 * M * J * sqrt_mh);
  return out;
}

// d ln U / dc for the tilde families, through the isometry that maps them to
// Sigma families at (-H, -c) with the roles of U and V exchanged:
// d ln U/dc |_(H,c) = - d ln V/dc |_(-H,-c).  Disjointness requires >= 0.
inline CriteriaValue dlnU_dc(double r, double R, double H, double M, Family family,
                             const QuadratureConfig& cfg = {}) {
  if (!is_tilde(family)) throw std::domain_error("dlnU_dc: Sigma families use dlnV_dc");
  const Family mapped =
      (family == Family::TildeSigmaPlus) ? Family::SigmaMinus : Family::SigmaPlus;
  CriteriaValue mapped_value = dlnV_dc(r, R, -H, M, mapped, cfg);
  mapped_value.value = -mapped_value.value;
  mapped_value.bracket = -mapped_value.bracket;
  return mapped_value;
}

// ---------------------------------------------------------------------------
// Maximal (H = 0) large-radius criterion.  With b = 2M/R and z = r/R the
// J-scaled bracket becomes
//   4M (2R - 3M) dlnV/dc = int_1^{z} s^2((2-3b/2)s - 3b/2) /
//                          ((s-1)^{1/2} (s^3+s^2+s+1-b(s^2+s+1))^{3/2}) ds
//                          - 1/sqrt((b-1) + z^3(z-b)),
// whose z -> infinity limit is bounded above by 31/7 - (149/28) b for
// b in [1, 4/3].  At b = 4/3 (the cylinder endpoint) the integrand's
// singularity strengthens beyond -1/2 and the limit is -infinity.
inline double maximal_bracket(double b, double z_max, const QuadratureConfig& cfg = {}) {
  if (!(b >= 1.0 && b <= 4.0 / 3.0 + 1e-12))
    throw std::domain_error("maximal_bracket: b outside [1, 4/3]");
  if (!(z_max > 1.0)) throw std::domain_error("maximal_bracket: z_max must exceed 1");
  if (4.0 - 3.0 * b <= 1e-12) return -std::numeric_limits<double>::infinity();

  auto near_turn = [b](double z, double dist) {
    const double num = z * z * ((2.0 - 1.5 * b) * z - 1.5 * b);
    const double den = z * z * z + z * z + z + 1.0 - b * (z * z + z + 1.0);
    return num / (std::sqrt(dist) * den * std::sqrt(den));
  };
  auto integrand = [&](double z) { return near_turn(z, z - 1.0); };

  double integral;
  if (std::isinf(z_max)) {
    integral = integrate_sqrt_singular(near_turn, 1.0, 2.0, SingularEndpoint::lower, cfg) +
               integrate_to_infinity(integrand, 2.0, cfg);
    return integral;  // the boundary term decays as z^{-2}
  }
  if (z_max <= 2.0) {
    integral = integrate_sqrt_singular(near_turn, 1.0, z_max, SingularEndpoint::lower, cfg);
  } else {
    integral = integrate_sqrt_singular(near_turn, 1.0, 2.0, SingularEndpoint::lower, cfg) +
               integrate(integrand, 2.0, z_max, cfg);
  }
  const double boundary = 1.0 / std::sqrt((b - 1.0) + z_max * z_max * z_max * (z_max - b));
  return integral - boundary;
}

// ---------------------------------------------------------------------------
// Substituted form of the SigmaPlus bracket (independent evaluation route).
// With a = 2M/r_cyl, b = 2M/R, z = x/R the kernels become polynomials in z
// whose H-dependence enters only through kappa = H R.

// H R expressed through the cylinder relation: (a/b) (4-3a) / (6 sqrt(a-1)).
inline double cylinder_hr_product(double a, double b) {
  if (!(a > 1.0) || !(b > 1.0)) throw std::domain_error("cylinder_hr_product: a, b must exceed 1");
  return (a / b) * (4.0 - 3.0 * a) / (6.0 * std::sqrt(a - 1.0));
}

namespace detail {

inline double subst_kappa(double a, double b) { return cylinder_hr_product(a, b); }

}  // namespace detail

// H F(x, R) / R^4 in the substituted variables.
inline double subst_F(double z, double a, double b) {
  const double kappa = detail::subst_kappa(a, b);
  return kappa * z * z *
         (-3.0 * z * z * (z + 1.0 - b) + (2.0 * z - 1.5 * b) * (z * z + z + 1.0));
}

// G(x, R) / R^4 in the substituted variables.
inline double subst_G(double z, double b) {
  return z * z * std::sqrt(b - 1.0) * ((2.0 - 1.5 * b) * z - 1.5 * b);
}

// P(x, R) / R^3 in the substituted variables.
inline double subst_P(double z, double a, double b) {
  const double kappa = detail::subst_kappa(a, b);
  const double s2 = z * z + z + 1.0;
  return kappa * kappa * (z - 1.0) * s2 * s2 - 2.0 * kappa * s2 * std::sqrt(b - 1.0) +
         (z * z * z + z * z + z + 1.0) - b * s2;
}

// Boundary ratio A/sqrt(A^2 + B) in the substituted variables.
inline double subst_boundary(double z, double a, double b) {
  const double kappa = detail::subst_kappa(a, b);
  const double top = kappa * (z * z * z - 1.0) - std::sqrt(b - 1.0);
  return top / std::sqrt(top * top + z * z * z * (z - b));
}

// The full SigmaPlus bracket (integral plus boundary ratio) evaluated in the
// substituted variables; agrees with the x-domain assembly of dlnV_dc to
// quadrature tolerance and serves as its cross-validation route.
inline double substituted_criteria(double z_max, double a, double b,
                                   const QuadratureConfig& cfg = {}) {
  if (!(z_max > 1.0)) throw std::domain_error("substituted_criteria: z_max must exceed 1");
  auto near_turn = [a, b](double z, double dist) {
    const double p = subst_P(z, a, b);
    return (subst_F(z, a, b) + subst_G(z, b)) / (std::sqrt(dist) * p * std::sqrt(p));
  };
  auto integrand = [&](double z) { return near_turn(z, z - 1.0); };
  double integral;
  if (z_max <= 2.0) {
    integral = integrate_sqrt_singular(near_turn, 1.0, z_max, SingularEndpoint::lower, cfg);
  } else {
    integral = integrate_sqrt_singular(near_turn, 1.0, 2.0, SingularEndpoint::lower, cfg) +
               integrate(integrand, 2.0, z_max, cfg);
  }
  return integral + subst_boundary(z_max, a, b);
}

}  // namespace sscmc

#endif
