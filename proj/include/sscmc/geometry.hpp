#ifndef SSCMC_GEOMETRY_HPP
#define SSCMC_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "sscmc/roots.hpp"

// Closed-form scalar functions of the Schwarzschild geometry: the metric
// factor, the interior domain curves whose level sets select the leaves of
// each family, their critical values, and the slope ratios entering the
// leaf height integrals.  Lengths are in the same unit as the mass M, the
// mean curvature H in its inverse.
namespace sscmc {

// The four families of T-axisymmetric leaves, named after the branch of the
// interior domain curve that carries their turning radius: SigmaMinus /
// SigmaPlus sit on the decreasing / increasing branch of the lower curve,
// the tilde families on the increasing / decreasing branch of the upper one.
enum class Family { SigmaMinus, SigmaPlus, TildeSigmaPlus, TildeSigmaMinus };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::SigmaMinus: return "sigma-minus";
    case Family::SigmaPlus: return "sigma-plus";
    case Family::TildeSigmaPlus: return "tilde-plus";
    case Family::TildeSigmaMinus: return "tilde-minus";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "sigma-minus") return Family::SigmaMinus;
  if (s == "sigma-plus") return Family::SigmaPlus;
  if (s == "tilde-plus") return Family::TildeSigmaPlus;
  if (s == "tilde-minus") return Family::TildeSigmaMinus;
  throw std::invalid_argument("unknown family '" + s + "'");
}

inline bool is_tilde(Family f) {
  return f == Family::TildeSigmaPlus || f == Family::TildeSigmaMinus;
}

// The four wedges of the extension.  I / Iprime are the two exteriors
// (r > 2M), II / IIprime the two interiors (0 < r < 2M).
enum class Region { I, II, Iprime, IIprime };

inline const char* region_name(Region reg) {
  switch (reg) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::Iprime: return "I'";
    case Region::IIprime: return "II'";
  }
  return "?";
}

inline Region parse_region(const std::string& s) {
  if (s == "I") return Region::I;
  if (s == "II") return Region::II;
  if (s == "I'") return Region::Iprime;
  if (s == "II'") return Region::IIprime;
  throw std::invalid_argument("unknown region '" + s + "'");
}

inline bool region_is_interior(Region reg) {
  return reg == Region::II || reg == Region::IIprime;
}

inline void check_mass(double M) {
  if (!(M > 0.0) || !std::isfinite(M)) throw std::domain_error("mass must be positive");
}

// h(r) = 1 - 2M/r.  Negative exactly in the interior r < 2M.
inline double metric_factor(double r, double M) {
  check_mass(M);
  if (!(r > 0.0)) throw std::domain_error("metric_factor: r must be positive");
  return 1.0 - 2.0 * M / r;
}

// Lower domain curve on (0, 2M): -H r^3 - r^{3/2} (2M - r)^{1/2}.
// Interior leaves of the Sigma families live where the curve exceeds their
// constant c.
inline double domain_curve_lower(double r, double H, double M) {
  check_mass(M);
  if (!(r > 0.0 && r < 2.0 * M))
    throw std::domain_error("domain_curve_lower: r outside (0, 2M)");
  return -H * r * r * r - r * std::sqrt(r) * std::sqrt(2.0 * M - r);
}

// Upper domain curve on (0, 2M): -H r^3 + r^{3/2} (2M - r)^{1/2}.
// Equals the negation of the lower curve at -H.
inline double domain_curve_upper(double r, double H, double M) {
  check_mass(M);
  if (!(r > 0.0 && r < 2.0 * M))
    throw std::domain_error("domain_curve_upper: r outside (0, 2M)");
  return -H * r * r * r + r * std::sqrt(r) * std::sqrt(2.0 * M - r);
}

// Derivative factor of the lower domain curve: the curve's derivative equals
// sqrt(r/(2M-r)) times this, so its unique zero is the curve's interior
// minimizer.  Also the Jacobian J(R) relating dc and dR along a branch,
// dR/dc = sqrt(-h(R)) / J(R).
inline double cylinder_balance(double r, double H, double M) {
  return -3.0 * H * r * std::sqrt(r) * std::sqrt(2.0 * M - r) + (2.0 * r - 3.0 * M);
}

// Critical data of the domain curves for a given (H, M).
struct CriticalValues {
  double c_min;        // minimum of the lower curve; infimum of admissible c
  double c_max;        // maximum of the upper curve; supremum of admissible c
  double r_cyl_sigma;  // interior radius where c_min is attained (limiting
                       // cylinder of the Sigma families)
  double r_cyl_tilde;  // interior radius where c_max is attained (limiting
                       // cylinder of the tilde families)
  double c_origin;     // -8 M^3 H, the constant of the leaf through the
                       // Kruskal origin
};

namespace detail {

inline double cylinder_radius(double H, double M, double x_tol) {
  // cylinder_balance is negative near r = 0 and positive near r = 2M, and is
  // strictly increasing on the half-interval containing its zero.
  const double lo = 2.0 * M * 1e-9;
  const double hi = 2.0 * M * (1.0 - 1e-13);
  return find_root([&](double r) { return cylinder_balance(r, H, M); }, lo, hi, x_tol);
}

}  // namespace detail

inline CriticalValues critical_values(double H, double M) {
  check_mass(M);
  if (!std::isfinite(H)) throw std::domain_error("mean curvature must be finite");
  const double x_tol = 1e-13 * M;
  CriticalValues cv;
  cv.r_cyl_sigma = detail::cylinder_radius(H, M, x_tol);
  cv.c_min = domain_curve_lower(cv.r_cyl_sigma, H, M);
  cv.r_cyl_tilde = detail::cylinder_radius(-H, M, x_tol);
  cv.c_max = domain_curve_upper(cv.r_cyl_tilde, H, M);
  cv.c_origin = -8.0 * M * M * M * H + 0.0;  // normalize -0 at H = 0
  return cv;
}

// Mean curvature of the constant-r cylinder at interior radius r0.  The
// quoted closed form is the one for the upper interior wedge; the lower
// wedge (primed region) carries the opposite sign.
inline double cylinder_mean_curvature(double r0, double M, bool primed_region = false) {
  check_mass(M);
  if (!(r0 > 0.0 && r0 < 2.0 * M))
    throw std::domain_error("cylinder_mean_curvature: r0 outside (0, 2M)");
  const double value = (2.0 * r0 - 3.0 * M) / (3.0 * std::sqrt(r0 * r0 * r0 * (2.0 * M - r0)));
  return primed_region ? -value : value;
}

// Slope ratio of the height-function integrands, one closed form per wedge:
//   I:  (H r + c/r^2) / sqrt(h)        I':  -(H r + c/r^2) / sqrt(h)
//   II: (-H r - c/r^2) / sqrt(-h)      II': (H r + c/r^2) / sqrt(-h)
// Exterior forms require r > 2M, interior ones 0 < r < 2M; the horizon
// itself is rejected.  Interior leaf domains are exactly where the ratio
// exceeds 1.
inline double slope_ratio(Region region, double r, double H, double c, double M) {
  check_mass(M);
  if (r == 2.0 * M) throw std::domain_error("slope_ratio: diverges at the horizon");
  const bool interior = region_is_interior(region);
  if (interior != (r > 0.0 && r < 2.0 * M) || !(r > 0.0))
    throw std::domain_error("slope_ratio: r outside the region's range");
  const double num = H * r + c / (r * r);
  const double root = std::sqrt(std::fabs(1.0 - 2.0 * M / r));
  switch (region) {
    case Region::I: return num / root;
    case Region::Iprime: return -num / root;
    case Region::II: return -num / root;
    case Region::IIprime: return num / root;
  }
  throw std::logic_error("unreachable");
}

// Admissible interval of the leaf constant c for one family.  The intervals
// take the same form for every sign of H; only the placement of c_origin
// relative to 0 changes.  The cylinder endpoints c_min / c_max are excluded
// here (the leaf builder emits them as explicit hyperbolas), while
// TildeSigmaMinus includes c_origin, the leaf through the Kruskal origin.
struct CInterval {
  double lo = 0.0, hi = 0.0;
  bool closed_lo = false, closed_hi = false;

  bool contains(double c) const {
    if (c < lo || c > hi) return false;
    if (c == lo) return closed_lo;
    if (c == hi) return closed_hi;
    return true;
  }
};

inline CInterval admissible_c_interval(Family family, double H, double M) {
  const CriticalValues cv = critical_values(H, M);
  switch (family) {
    case Family::SigmaMinus: return {cv.c_min, 0.0, false, false};
    case Family::SigmaPlus: return {cv.c_min, cv.c_origin, false, false};
    case Family::TildeSigmaPlus: return {0.0, cv.c_max, false, false};
    case Family::TildeSigmaMinus: return {cv.c_origin, cv.c_max, true, false};
  }
  throw std::logic_error("unreachable");
}

// Branch curve value c(R) at turning radius R.
inline double c_of_turning_radius(double R, Family family, double H, double M) {
  if (R == 2.0 * M && family == Family::TildeSigmaMinus) return -8.0 * M * M * M * H;
  return is_tilde(family) ? domain_curve_upper(R, H, M) : domain_curve_lower(R, H, M);
}

// Inverse of c(R) on the family's monotone branch, located by bracketed
// root finding.  Accepts the cylinder endpoint values (c == c_min for the
// Sigma families, c == c_max for the tilde ones) and c == c_origin for
// TildeSigmaMinus, returning the exact degenerate radii.
inline double turning_radius(double H, double c, Family family, double M) {
  check_mass(M);
  const CriticalValues cv = critical_values(H, M);
  const CInterval interval = admissible_c_interval(family, H, M);

  const bool at_cylinder = !is_tilde(family) ? (c == cv.c_min) : (c == cv.c_max);
  if (!at_cylinder && !interval.contains(c))
    throw std::domain_error("turning_radius: c outside the admissible interval of " +
                            std::string(family_name(family)));

  const double x_tol = 1e-12 * M;
  auto g = [&](double r) { return c_of_turning_radius(r, family, H, M) - c; };

  switch (family) {
    case Family::SigmaMinus: {
      if (at_cylinder) return cv.r_cyl_sigma;
      // decreasing branch: curve(0+) -> 0 above c, curve(r_cyl) = c_min below
      double lo = 0.5 * cv.r_cyl_sigma;
      for (int i = 0; i < 200 && !(g(lo) > 0.0); ++i) lo *= 0.5;
      return find_root(g, lo, cv.r_cyl_sigma, x_tol);
    }
    case Family::SigmaPlus: {
      if (at_cylinder) return cv.r_cyl_sigma;
      // increasing branch toward c_origin at r = 2M; roots within one ulp of
      // the horizon resolve to the closest representable radius
      double hi = 2.0 * M - 0.5 * (2.0 * M - cv.r_cyl_sigma);
      for (int i = 0; i < 200 && !(g(hi) > 0.0); ++i) {
        const double next = 2.0 * M - 0.5 * (2.0 * M - hi);
        if (next == hi || next >= 2.0 * M) return hi;
        hi = next;
      }
      return find_root(g, cv.r_cyl_sigma, hi, x_tol);
    }
    case Family::TildeSigmaPlus: {
      if (at_cylinder) return cv.r_cyl_tilde;
      // increasing branch from 0 toward c_max
      double lo = 0.5 * cv.r_cyl_tilde;
      for (int i = 0; i < 200 && !(g(lo) < 0.0); ++i) lo *= 0.5;
      return find_root(g, lo, cv.r_cyl_tilde, x_tol);
    }
    case Family::TildeSigmaMinus: {
      if (at_cylinder) return cv.r_cyl_tilde;
      if (c == cv.c_origin) return 2.0 * M;
      // decreasing branch from c_max toward c_origin at r = 2M
      double hi = 2.0 * M - 0.5 * (2.0 * M - cv.r_cyl_tilde);
      for (int i = 0; i < 200 && !(g(hi) < 0.0); ++i) {
        const double next = 2.0 * M - 0.5 * (2.0 * M - hi);
        if (next == hi || next >= 2.0 * M) return hi;
        hi = next;
      }
      return find_root(g, cv.r_cyl_tilde, hi, x_tol);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace sscmc

#endif
