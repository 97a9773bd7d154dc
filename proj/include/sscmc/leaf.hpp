#ifndef SSCMC_LEAF_HPP
#define SSCMC_LEAF_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sscmc/geometry.hpp"
#include "sscmc/kernels.hpp"
#include "sscmc/kruskal.hpp"
#include "sscmc/quadrature.hpp"

// Construction of individual T-axisymmetric leaves as sampled curves in the
// Kruskal plane.  A leaf is built from its turning radius R on the branch
// curve of its family; the Schwarzschild time is normalized to vanish there,
// which is exactly the T-axisymmetric representative of the family.  Horizon
// crossings are computed through the factored (r - 2M) e^{...} coordinate
// forms, never through t, which diverges there.
namespace sscmc {

struct LeafSpec {
  double M = 1.0;
  double H = 0.0;
  Family family = Family::SigmaMinus;
  double c = 0.0;      // leaf constant, paired with R through the branch curve
  double R = 0.0;      // turning radius
  int samples = 400;   // target number of points of the built curve
  double r_max = 0.0;  // exterior truncation radius; set by the factories
  double t_span = 0.0; // half-range of Schwarzschild time for cylinder leaves
};

struct CurveSample {
  Region region = Region::II;
  double r = 0.0;
  double t = 0.0;  // +-infinity exactly at horizon crossings
  double U = 0.0;
  double V = 0.0;
  double X = 0.0;
  double T = 0.0;
};

struct LeafCurve {
  LeafSpec spec;
  std::vector<CurveSample> points;  // ordered by increasing U
  double t_intercept = 0.0;         // T value at the T-axis crossing
  bool cylinder = false;
};

// Slope of the exterior height function, (1/h) l / sqrt(1 + l^2) with the
// region's slope ratio.  The two exteriors differ only by the sign of l, so
// equal constants give exactly opposite slopes.
inline double f_exterior(double r, double H, double c, Region region, double M) {
  if (region != Region::I && region != Region::Iprime)
    throw std::domain_error("f_exterior: region must be I or I'");
  if (!(r > 2.0 * M)) throw std::domain_error("f_exterior: r must exceed 2M");
  const double l = slope_ratio(region, r, H, c, M);
  return l / (metric_factor(r, M) * std::sqrt(1.0 + l * l));
}

enum class SlopeBranch { rising, falling };

// Interior slope: (1/-h) sqrt(l^2/(l^2-1)) on the rising branch,
// (1/h) sqrt(l^2/(l^2-1)) on the falling one.  Defined only where the slope
// ratio strictly exceeds 1; it is unbounded at the turning radius.
inline double f_interior(double r, double H, double c, Region region, SlopeBranch branch,
                         double M) {
  if (!region_is_interior(region))
    throw std::domain_error("f_interior: region must be II or II'");
  const double l = slope_ratio(region, r, H, c, M);
  if (!(l > 1.0)) throw std::domain_error("f_interior: outside the leaf domain (l <= 1)");
  const double h = metric_factor(r, M);
  const double mag = l / std::sqrt(l * l - 1.0);
  return (branch == SlopeBranch::rising) ? -mag / h : mag / h;
}

namespace detail {

inline bool is_cylinder_constant(const LeafSpec& s, const CriticalValues& cv) {
  return is_tilde(s.family) ? (s.c == cv.c_max) : (s.c == cv.c_min);
}

inline void validate_leaf_spec(const LeafSpec& s) {
  check_mass(s.M);
  if (s.samples < 2) throw std::domain_error("leaf: samples must be >= 2");
  const CriticalValues cv = critical_values(s.H, s.M);
  if (is_cylinder_constant(s, cv)) return;
  if (!admissible_c_interval(s.family, s.H, s.M).contains(s.c)) {
    const CInterval iv = admissible_c_interval(s.family, s.H, s.M);
    throw std::domain_error(std::string("leaf: c outside the admissible interval ") +
                            (iv.closed_lo ? "[" : "(") + std::to_string(iv.lo) + ", " +
                            std::to_string(iv.hi) + (iv.closed_hi ? "]" : ")") + " of " +
                            family_name(s.family));
  }
}

}  // namespace detail

inline LeafSpec make_leaf_spec_c(double M, double H, Family family, double c, int samples = 400) {
  LeafSpec s;
  s.M = M;
  s.H = H;
  s.family = family;
  s.c = c;
  s.samples = samples;
  s.r_max = 20.0 * M;
  s.t_span = 8.0 * M;
  detail::validate_leaf_spec(s);
  s.R = turning_radius(H, c, family, M);
  return s;
}

inline LeafSpec make_leaf_spec_R(double M, double H, Family family, double R, int samples = 400) {
  check_mass(M);
  if (!(R > 0.0 && R <= 2.0 * M)) throw std::domain_error("leaf: turning radius outside (0, 2M]");
  const CriticalValues cv = critical_values(H, M);
  switch (family) {
    case Family::SigmaMinus:
      if (R > cv.r_cyl_sigma) throw std::domain_error("leaf: R beyond the cylinder radius");
      break;
    case Family::SigmaPlus:
      if (R < cv.r_cyl_sigma || R >= 2.0 * M)
        throw std::domain_error("leaf: R outside the increasing branch");
      break;
    case Family::TildeSigmaPlus:
      if (R > cv.r_cyl_tilde) throw std::domain_error("leaf: R beyond the cylinder radius");
      break;
    case Family::TildeSigmaMinus:
      if (R < cv.r_cyl_tilde) throw std::domain_error("leaf: R outside the decreasing branch");
      break;
  }
  LeafSpec s;
  s.M = M;
  s.H = H;
  s.family = family;
  s.c = c_of_turning_radius(R, family, H, M);
  s.R = R;
  s.samples = samples;
  s.r_max = 20.0 * M;
  s.t_span = 8.0 * M;
  detail::validate_leaf_spec(s);
  return s;
}

namespace detail {

// Shared evaluation context for one lower-curve leaf (H, c(R), R).
struct SigmaContext {
  double M, H, c, R;
  Quintic cofactor;
  FactorSide side;

  static SigmaContext make(double M, double H, double R, FactorSide side) {
    SigmaContext ctx;
    ctx.M = M;
    ctx.H = H;
    ctx.R = R;
    ctx.c = -H * R * R * R - R * std::sqrt(R) * std::sqrt(2.0 * M - R);
    ctx.side = side;
    ctx.cofactor = radicand_cofactor(R, H, M, side);
    return ctx;
  }

  double A(double x) const { return H * x * x * x + c; }

  // A^2 + B through the factored form; `dist` is |x - R|, supplied exactly
  // by the singular quadrature so the vanishing factor never cancels.
  double radicand(double x, double dist) const { return dist * cofactor(x); }
  double radicand(double x) const { return radicand(x, std::fabs(x - R)); }

  // Slope of the t >= 0 interior half of a SigmaMinus leaf:
  // (1/h) (-A) / sqrt(A^2 + B), negative on (0, R).
  double interior_slope_neg(double x, double dist) const {
    if (x == 0.0) return 0.0;
    const double h = 1.0 - 2.0 * M / x;
    return (-A(x)) / (h * std::sqrt(radicand(x, dist)));
  }
  double interior_slope_neg(double x) const {
    return interior_slope_neg(x, std::fabs(x - R));
  }

  // Horizon-regular slope of a SigmaPlus leaf: x^4 / (Q - A sqrt(Q)) with
  // Q = A^2 + B; the t slope on the U+V >= 0 half is -1/h plus this.  For
  // A > 0 the denominator is rationalized to avoid cancellation.
  double horizon_regular_slope(double x, double dist) const {
    const double Q = radicand(x, dist);
    const double a = A(x);
    const double sq = std::sqrt(Q);
    const double den = (a <= 0.0) ? Q - a * sq : sq * kernel_B(x, M) / (sq + a);
    return x * x * x * x / den;
  }
  double horizon_regular_slope(double x) const {
    return horizon_regular_slope(x, std::fabs(x - R));
  }
};

inline double tortoise_or_origin(double r, double M) {
  return (r == 0.0) ? 2.0 * M * std::log(2.0 * M) : tortoise(r, M);
}

// Descending grid from R to 0 for interior-only leaves: quadratic clustering
// at the turning radius, geometric spacing toward the singularity.
inline std::vector<double> grid_interior_minus(double R, int n) {
  n = std::max(n, 8);
  const int n_turn = std::max(4, (n * 45) / 100);
  const int n_log = n - n_turn;
  std::vector<double> r;
  r.reserve(n + 1);
  const double s_max = std::sqrt(0.5 * R);
  for (int j = 0; j <= n_turn; ++j) {
    const double s = s_max * static_cast<double>(j) / n_turn;
    r.push_back(R - s * s);
  }
  const double r_lo = R * 1e-5;
  const double ratio = std::pow(r_lo / (0.5 * R), 1.0 / n_log);
  double v = 0.5 * R;
  for (int j = 1; j < n_log; ++j) {
    v *= ratio;
    r.push_back(v);
  }
  r.push_back(0.0);
  return r;
}

// Ascending grid from R through the horizon to r_max for SigmaPlus leaves:
// quadratic clustering at R, geometric approach to the horizon on the inside
// (matching the tortoise-spaced approach outside, so finite-difference
// slopes across r = 2M compare at like resolution), the exact horizon point,
// then uniform spacing in the tortoise coordinate out to r_max.
inline std::vector<double> grid_sigma_plus(double R, double M, double r_max, int n) {
  n = std::max(n, 16);
  const int n_int = std::max(8, n / 2);
  const int n_ext = std::max(5, n - n_int);
  std::vector<double> r;
  r.reserve(n + 2);
  const int n_turn = std::max(4, (n_int * 3) / 5);
  const int n_log = n_int - n_turn;
  const double span = 2.0 * M - R;
  const double s_max = std::sqrt(0.75 * span);
  for (int j = 0; j < n_turn; ++j) {
    const double s = s_max * static_cast<double>(j) / n_turn;
    r.push_back(R + s * s);
  }
  const double eps_in = std::min(1e-8 * M, 0.1 * span);
  const double ratio = std::pow(eps_in / (0.25 * span), 1.0 / n_log);
  double gap = 0.25 * span;
  for (int j = 0; j < n_log; ++j) {
    r.push_back(2.0 * M - gap);
    gap *= ratio;
  }
  r.push_back(2.0 * M);

  const double eps0 = eps_in;
  const double w_lo = tortoise(2.0 * M + eps0, M);
  const double w_hi = tortoise(r_max, M);
  double guess = 2.0 * M + eps0;
  for (int j = 0; j < n_ext; ++j) {
    const double w = w_lo + (w_hi - w_lo) * static_cast<double>(j) / (n_ext - 1);
    // invert the tortoise coordinate by Newton from the previous point
    double x = std::max(guess, 2.0 * M + 0.5 * eps0);
    for (int it = 0; it < 60; ++it) {
      const double fw = tortoise(x, M) - w;
      const double step = fw * (1.0 - 2.0 * M / x);
      double next = x - step;
      if (next <= 2.0 * M) next = 0.5 * (x + 2.0 * M);
      if (std::fabs(next - x) < 1e-14 * std::max(1.0, std::fabs(x))) {
        x = next;
        break;
      }
      x = next;
    }
    guess = x;
    r.push_back(x);
  }
  r.back() = r_max;
  return r;
}

// Ascending grid from the horizon outward for the leaf through the origin.
// The first offset is kept tiny so the finite-difference slope across the
// origin sample resolves the smooth crossing.
inline std::vector<double> grid_origin(double M, double r_max, int n) {
  n = std::max(n, 8);
  std::vector<double> r;
  r.reserve(n + 1);
  r.push_back(2.0 * M);
  const double lo = std::log(1e-10 * M);
  const double hi = std::log(r_max - 2.0 * M);
  for (int j = 0; j < n; ++j)
    r.push_back(2.0 * M + std::exp(lo + (hi - lo) * static_cast<double>(j) / (n - 1)));
  r.back() = r_max;
  return r;
}

inline CurveSample make_sample(Region region, double r, double t, double U, double V) {
  CurveSample s;
  s.region = region;
  s.r = r;
  s.t = t;
  s.U = U;
  s.V = V;
  s.X = 0.5 * (U + V);
  s.T = 0.5 * (V - U);
  return s;
}

// Resolve sub-ulp rounding jitter so the emitted list is exactly
// nondecreasing in both Kruskal coordinates.  The true curve is strictly
// monotone, but near the singularity ends the inter-sample increments of
// one coordinate sink below machine resolution; regressions beyond a few
// ulps are left alone for the validator to flag.
inline void settle_ordering(std::vector<CurveSample>& pts) {
  constexpr double few_ulps = 16.0 * std::numeric_limits<double>::epsilon();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    bool touched = false;
    const double slack_u = few_ulps * std::fabs(pts[i].U);
    const double slack_v = few_ulps * std::fabs(pts[i].V);
    if (pts[i].U < pts[i - 1].U && pts[i - 1].U - pts[i].U <= slack_u) {
      pts[i].U = pts[i - 1].U;
      touched = true;
    }
    if (pts[i].V < pts[i - 1].V && pts[i - 1].V - pts[i].V <= slack_v) {
      pts[i].V = pts[i - 1].V;
      touched = true;
    }
    if (touched) {
      pts[i].X = 0.5 * (pts[i].U + pts[i].V);
      pts[i].T = 0.5 * (pts[i].V - pts[i].U);
    }
  }
}

// Mirror the U+V >= 0 half across the T-axis and concatenate, ordered by
// increasing U.  `upper` must be ordered with increasing U and start at the
// axis point.
inline std::vector<CurveSample> close_up_by_reflection(std::vector<CurveSample> upper) {
  settle_ordering(upper);
  std::vector<CurveSample> all;
  all.reserve(2 * upper.size() - 1);
  for (std::size_t i = upper.size(); i-- > 1;) {
    const CurveSample& s = upper[i];
    Region reg = s.region;
    if (reg == Region::I)
      reg = Region::Iprime;
    else if (reg == Region::Iprime)
      reg = Region::I;
    all.push_back(make_sample(reg, s.r, -s.t, -s.V, -s.U));
  }
  all.insert(all.end(), upper.begin(), upper.end());
  return all;
}

inline LeafCurve build_cylinder(const LeafSpec& spec, const CriticalValues& cv) {
  const double M = spec.M;
  const bool tilde = is_tilde(spec.family);
  const double r0 = tilde ? cv.r_cyl_tilde : cv.r_cyl_sigma;
  const double K = -uv_product(r0, M);  // = (2M - r0) e^{r0/2M} > 0
  const double rootK = std::sqrt(K);

  int n = std::max(spec.samples, 3);
  if (n % 2 == 0) ++n;  // keep the exact axis point
  LeafCurve curve;
  curve.spec = spec;
  curve.cylinder = true;
  curve.points.reserve(n);
  for (int j = 0; j < n; ++j) {
    const double t = -spec.t_span + 2.0 * spec.t_span * static_cast<double>(j) / (n - 1);
    const double lam = t / (4.0 * M);
    if (!tilde) {
      // upper interior wedge: U < 0 < V, U ascending with t
      curve.points.push_back(make_sample(Region::II, r0, t, -rootK * std::exp(-lam),
                                         rootK * std::exp(lam)));
    } else {
      // lower interior wedge: V < 0 < U; t descends along increasing U
      const double tt = -t;
      curve.points.push_back(make_sample(Region::IIprime, r0, tt, rootK * std::exp(lam),
                                         -rootK * std::exp(-lam)));
    }
  }
  settle_ordering(curve.points);
  curve.t_intercept = tilde ? -rootK : rootK;
  return curve;
}

// Native SigmaMinus leaf: interior-only curve between the singularity and
// the turning radius.
inline LeafCurve build_sigma_minus(const LeafSpec& spec, const QuadratureConfig& cfg) {
  const double M = spec.M;
  const double R = spec.R;
  const SigmaContext ctx = SigmaContext::make(M, spec.H, R, FactorSide::minus);
  auto slope = [&](double x) { return ctx.interior_slope_neg(x); };
  auto slope_near_turn = [&](double x, double dist) { return ctx.interior_slope_neg(x, dist); };

  const std::vector<double> grid = grid_interior_minus(R, std::max(spec.samples / 2, 8));
  std::vector<double> t(grid.size(), 0.0);
  t[1] = -integrate_sqrt_singular(slope_near_turn, grid[1], R, SingularEndpoint::upper, cfg);
  for (std::size_t j = 2; j < grid.size(); ++j)
    t[j] = t[j - 1] - integrate(slope, grid[j], grid[j - 1], cfg);

  std::vector<CurveSample> upper;
  upper.reserve(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double rs = tortoise_or_origin(grid[j], M);
    const double U = -std::exp((rs - t[j]) / (4.0 * M));
    const double V = std::exp((rs + t[j]) / (4.0 * M));
    upper.push_back(make_sample(Region::II, grid[j], t[j], U, V));
  }

  LeafCurve curve;
  curve.spec = spec;
  curve.points = close_up_by_reflection(std::move(upper));
  curve.t_intercept = std::sqrt(2.0 * M - R) * std::exp(R / (4.0 * M));
  return curve;
}

// Native SigmaPlus leaf through regions I, II, I': interior piece from the
// turning radius, smooth horizon crossing, exterior piece to r_max.
inline LeafCurve build_sigma_plus(const LeafSpec& spec, const QuadratureConfig& cfg) {
  const double M = spec.M;
  const double R = spec.R;
  const SigmaContext ctx = SigmaContext::make(M, spec.H, R, FactorSide::plus);
  auto slope = [&](double x) { return ctx.horizon_regular_slope(x); };
  auto slope_near_turn = [&](double x, double dist) { return ctx.horizon_regular_slope(x, dist); };

  const std::vector<double> grid = grid_sigma_plus(R, M, spec.r_max, std::max(spec.samples / 2, 10));
  std::vector<double> integral(grid.size(), 0.0);
  integral[1] = integrate_sqrt_singular(slope_near_turn, R, grid[1], SingularEndpoint::lower, cfg);
  for (std::size_t j = 2; j < grid.size(); ++j)
    integral[j] = integral[j - 1] + integrate(slope, grid[j - 1], grid[j], cfg);

  const double RT = tortoise(R, M);
  std::vector<CurveSample> upper;
  upper.reserve(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double r = grid[j];
    const double U = (r - 2.0 * M) * std::exp((2.0 * r - RT - integral[j]) / (4.0 * M));
    const double V = std::exp((RT + integral[j]) / (4.0 * M));
    double t;
    Region reg;
    if (r == 2.0 * M) {
      t = std::numeric_limits<double>::infinity();
      reg = Region::II;
    } else {
      t = RT - tortoise(r, M) + integral[j];
      reg = (r < 2.0 * M) ? Region::II : Region::I;
    }
    upper.push_back(make_sample(reg, r, t, U, V));
  }

  LeafCurve curve;
  curve.spec = spec;
  curve.points = close_up_by_reflection(std::move(upper));
  curve.t_intercept = std::sqrt(2.0 * M - R) * std::exp(R / (4.0 * M));
  return curve;
}

// Slope of the exterior leaf through the Kruskal origin (c = -8 M^3 H).
// Both A and B vanish at the horizon, so the factored radicand
// (x - 2M) [H^2 (x - 2M)(x^2 + 2Mx + 4M^2)^2 + x^3] is used; `dist` is the
// exact distance x - 2M.
inline double origin_slope(double x, double dist, double H, double M) {
  const double quad = x * x + 2.0 * M * x + 4.0 * M * M;
  const double w = H * H * dist * quad * quad + x * x * x;
  return H * x * quad / std::sqrt(dist * w);
}

inline double origin_slope(double x, double H, double M) {
  return origin_slope(x, x - 2.0 * M, H, M);
}

// The leaf through the origin of the Kruskal plane: exterior-only, touching
// r = 2M at (U, V) = (0, 0) with finite t.
inline LeafCurve build_origin_leaf(const LeafSpec& spec, const QuadratureConfig& cfg) {
  const double M = spec.M;
  const double H = spec.H;
  auto slope = [&](double x) { return origin_slope(x, H, M); };
  auto slope_near_horizon = [&](double x, double dist) { return origin_slope(x, dist, H, M); };

  const std::vector<double> grid = grid_origin(M, spec.r_max, std::max(spec.samples / 2, 8));
  std::vector<double> t(grid.size(), 0.0);
  t[1] = integrate_sqrt_singular(slope_near_horizon, 2.0 * M, grid[1], SingularEndpoint::lower,
                                 cfg);
  for (std::size_t j = 2; j < grid.size(); ++j)
    t[j] = t[j - 1] + integrate(slope, grid[j - 1], grid[j], cfg);

  std::vector<CurveSample> upper;
  upper.reserve(grid.size());
  upper.push_back(make_sample(Region::I, 2.0 * M, 0.0, 0.0, 0.0));
  for (std::size_t j = 1; j < grid.size(); ++j) {
    const double r = grid[j];
    const double root = std::sqrt(r - 2.0 * M);
    const double U = root * std::exp((r - t[j]) / (4.0 * M));
    const double V = root * std::exp((r + t[j]) / (4.0 * M));
    upper.push_back(make_sample(Region::I, r, t[j], U, V));
  }

  LeafCurve curve;
  curve.spec = spec;
  curve.points = close_up_by_reflection(std::move(upper));
  curve.t_intercept = 0.0;
  return curve;
}

// Map a lower-curve leaf to its tilde partner: the isometry (U, V) -> (V, U)
// composed with (H, c) -> (-H, -c) exchanges the interior wedges and negates
// Schwarzschild time.
inline LeafCurve swap_to_tilde(LeafCurve native, const LeafSpec& spec) {
  for (CurveSample& s : native.points) {
    std::swap(s.U, s.V);
    s.t = -s.t;
    s.X = 0.5 * (s.U + s.V);
    s.T = 0.5 * (s.V - s.U);
    if (s.region == Region::II)
      s.region = Region::IIprime;
    else if (s.region == Region::IIprime)
      s.region = Region::II;
  }
  native.t_intercept = -native.t_intercept;
  native.spec = spec;
  return native;
}

}  // namespace detail

inline LeafCurve build_tss_leaf(const LeafSpec& spec, const QuadratureConfig& cfg = {}) {
  detail::validate_leaf_spec(spec);
  const CriticalValues cv = critical_values(spec.H, spec.M);
  if (detail::is_cylinder_constant(spec, cv)) return detail::build_cylinder(spec, cv);

  if (!is_tilde(spec.family)) {
    if (spec.family == Family::SigmaMinus) return detail::build_sigma_minus(spec, cfg);
    return detail::build_sigma_plus(spec, cfg);
  }

  LeafSpec native;
  native.M = spec.M;
  native.H = -spec.H;
  native.family = (spec.family == Family::TildeSigmaPlus) ? Family::SigmaMinus : Family::SigmaPlus;
  native.c = -spec.c;
  native.R = spec.R;
  native.samples = spec.samples;
  native.r_max = spec.r_max;
  native.t_span = spec.t_span;

  LeafCurve curve;
  if (spec.family == Family::TildeSigmaMinus && spec.c == cv.c_origin)
    curve = detail::build_origin_leaf(native, cfg);
  else if (native.family == Family::SigmaMinus)
    curve = detail::build_sigma_minus(native, cfg);
  else
    curve = detail::build_sigma_plus(native, cfg);
  return detail::swap_to_tilde(std::move(curve), spec);
}

// ---------------------------------------------------------------------------
// Single-coordinate evaluations on the U+V >= 0 half, used by the criteria
// module and the verification harness.

namespace detail {

// Schwarzschild time at radius r on the U+V >= 0 half of a lower-curve leaf.
inline double native_t_at(const LeafSpec& s, double r, const QuadratureConfig& cfg) {
  if (s.family == Family::SigmaMinus) {
    if (!(r >= 0.0 && r <= s.R)) throw std::domain_error("leaf t: r outside [0, R]");
    if (r == s.R) return 0.0;
    const SigmaContext ctx = SigmaContext::make(s.M, s.H, s.R, FactorSide::minus);
    auto slope = [&](double x, double dist) { return ctx.interior_slope_neg(x, dist); };
    return -integrate_sqrt_singular(slope, r, s.R, SingularEndpoint::upper, cfg);
  }
  // SigmaPlus: t = tortoise(R) - tortoise(r) + integral of the regular slope
  if (!(r >= s.R)) throw std::domain_error("leaf t: r below the turning radius");
  if (r == 2.0 * s.M) return std::numeric_limits<double>::infinity();
  const SigmaContext ctx = SigmaContext::make(s.M, s.H, s.R, FactorSide::plus);
  auto slope = [&](double x, double dist) { return ctx.horizon_regular_slope(x, dist); };
  const double integral = integrate_sqrt_singular(slope, s.R, r, SingularEndpoint::lower, cfg);
  return tortoise(s.R, s.M) - tortoise(r, s.M) + integral;
}

inline double native_lnV_at(const LeafSpec& s, double r, const QuadratureConfig& cfg) {
  const double M = s.M;
  if (s.family == Family::SigmaMinus) {
    const double t = native_t_at(s, r, cfg);
    return (t + tortoise_or_origin(r, M)) / (4.0 * M);
  }
  if (!(r >= s.R)) throw std::domain_error("leaf lnV: r below the turning radius");
  const SigmaContext ctx = SigmaContext::make(M, s.H, s.R, FactorSide::plus);
  auto slope = [&](double x, double dist) { return ctx.horizon_regular_slope(x, dist); };
  const double integral =
      (r == s.R) ? 0.0 : integrate_sqrt_singular(slope, s.R, r, SingularEndpoint::lower, cfg);
  return (tortoise(s.R, M) + integral) / (4.0 * M);
}

inline double native_U_at(const LeafSpec& s, double r, const QuadratureConfig& cfg) {
  const double M = s.M;
  if (s.family == Family::SigmaMinus) {
    const double t = native_t_at(s, r, cfg);
    return -std::exp((tortoise_or_origin(r, M) - t) / (4.0 * M));
  }
  if (r == 2.0 * M) return 0.0;
  const SigmaContext ctx = SigmaContext::make(M, s.H, s.R, FactorSide::plus);
  auto slope = [&](double x, double dist) { return ctx.horizon_regular_slope(x, dist); };
  const double integral =
      (r == s.R) ? 0.0 : integrate_sqrt_singular(slope, s.R, r, SingularEndpoint::lower, cfg);
  return (r - 2.0 * M) * std::exp((2.0 * r - tortoise(s.R, M) - integral) / (4.0 * M));
}

// Origin leaf coordinate helpers (native SigmaPlus at c = c_origin).
inline double origin_t_at(double H, double M, double r, const QuadratureConfig& cfg) {
  if (!(r >= 2.0 * M)) throw std::domain_error("origin leaf: r below the horizon");
  if (r == 2.0 * M) return 0.0;
  auto slope = [&](double x, double dist) { return origin_slope(x, dist, H, M); };
  return integrate_sqrt_singular(slope, 2.0 * M, r, SingularEndpoint::lower, cfg);
}

inline LeafSpec tilde_to_native(const LeafSpec& s) {
  LeafSpec n = s;
  n.H = -s.H;
  n.c = -s.c;
  n.family = (s.family == Family::TildeSigmaPlus) ? Family::SigmaMinus : Family::SigmaPlus;
  return n;
}

inline bool is_origin_spec(const LeafSpec& s) {
  return s.family == Family::TildeSigmaMinus && s.R == 2.0 * s.M;
}

}  // namespace detail

// V coordinate at radius r on the U+V >= 0 half of the leaf.
inline double leaf_V_at(const LeafSpec& spec, double r, const QuadratureConfig& cfg = {}) {
  if (!is_tilde(spec.family)) return std::exp(detail::native_lnV_at(spec, r, cfg));
  if (detail::is_origin_spec(spec)) {
    const double t = -detail::origin_t_at(-spec.H, spec.M, r, cfg);
    return std::sqrt(r - 2.0 * spec.M) * std::exp((r + t) / (4.0 * spec.M));
  }
  return detail::native_U_at(detail::tilde_to_native(spec), r, cfg);
}

// U coordinate at radius r on the U+V >= 0 half of the leaf.
inline double leaf_U_at(const LeafSpec& spec, double r, const QuadratureConfig& cfg = {}) {
  if (!is_tilde(spec.family)) return detail::native_U_at(spec, r, cfg);
  if (detail::is_origin_spec(spec)) {
    const double t = -detail::origin_t_at(-spec.H, spec.M, r, cfg);
    return std::sqrt(r - 2.0 * spec.M) * std::exp((r - t) / (4.0 * spec.M));
  }
  return std::exp(detail::native_lnV_at(detail::tilde_to_native(spec), r, cfg));
}

// Schwarzschild time at radius r on the U+V >= 0 half.
inline double leaf_t_at(const LeafSpec& spec, double r, const QuadratureConfig& cfg = {}) {
  if (!is_tilde(spec.family)) return detail::native_t_at(spec, r, cfg);
  if (detail::is_origin_spec(spec)) return -detail::origin_t_at(-spec.H, spec.M, r, cfg);
  return -detail::native_t_at(detail::tilde_to_native(spec), r, cfg);
}

// Logarithm of the positive Kruskal coordinate used by the disjointness
// criteria: ln V for the Sigma families, ln U for the tilde ones.
inline double leaf_ln_coord(const LeafSpec& spec, double r, const QuadratureConfig& cfg = {}) {
  if (!is_tilde(spec.family)) return detail::native_lnV_at(spec, r, cfg);
  if (detail::is_origin_spec(spec))
    return 0.5 * std::log(r - 2.0 * spec.M) +
           (r - (-detail::origin_t_at(-spec.H, spec.M, r, cfg))) / (4.0 * spec.M);
  return detail::native_lnV_at(detail::tilde_to_native(spec), r, cfg);
}

// Schwarzschild time at the singularity end, f(0; H, c), for interior-only
// leaves (SigmaMinus natively; TildeSigmaPlus through the mapping).
inline double leaf_t_at_singularity(const LeafSpec& spec, const QuadratureConfig& cfg = {}) {
  if (spec.family == Family::SigmaMinus) return detail::native_t_at(spec, 0.0, cfg);
  if (spec.family == Family::TildeSigmaPlus)
    return -detail::native_t_at(detail::tilde_to_native(spec), 0.0, cfg);
  throw std::domain_error("leaf_t_at_singularity: leaf does not reach r = 0");
}

// ---------------------------------------------------------------------------
// Invariant checks on built curves.

struct CurveChecks {
  double max_uv_residual = 0.0;      // |UV - (r-2M)e^{r/2M}| / (1 + |UV|)
  bool monotone = true;              // V(U) increasing along the curve
  double reflect_hausdorff = 0.0;    // Hausdorff distance to the T-reflected set
  double max_horizon_kink = 0.0;     // relative dV/dU jump across r = 2M samples
};

inline CurveChecks validate_curve(const std::vector<CurveSample>& pts, double M) {
  CurveChecks out;
  for (const CurveSample& s : pts) {
    const double uv = s.U * s.V;
    const double res = std::fabs(uv - uv_product(s.r, M)) / (1.0 + std::fabs(uv));
    out.max_uv_residual = std::max(out.max_uv_residual, res);
  }
  // Spacelike ordering: both coordinates nondecreasing (up to a rounding
  // allowance) and every step makes strict progress.  At the singularity
  // ends the curve meets the r = 0 hyperbola with a vertical tangent, so one
  // coordinate's increments sink to the rounding floor while the other keeps
  // moving.
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double du = pts[i].U - pts[i - 1].U;
    const double dv = pts[i].V - pts[i - 1].V;
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() *
                         (std::fabs(pts[i].U) + std::fabs(pts[i].V));
    if (!(du >= -slack && dv >= -slack && du + dv > 0.0)) out.monotone = false;
  }

  // Hausdorff distance between the sample set and its reflection; the
  // reflection of a U-sorted curve is the same curve traversed backwards, so
  // the mirrored index is the natural candidate, refined by a local search.
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(pts.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double ru = -pts[i].V, rv = -pts[i].U;
    double best = std::numeric_limits<double>::infinity();
    for (std::ptrdiff_t k = std::max<std::ptrdiff_t>(0, n - 1 - i - 4);
         k < std::min(n, n - 1 - i + 5); ++k) {
      const double du = pts[k].U - ru, dv = pts[k].V - rv;
      best = std::min(best, std::sqrt(du * du + dv * dv));
    }
    auto it = std::lower_bound(pts.begin(), pts.end(), ru,
                               [](const CurveSample& p, double u) { return p.U < u; });
    const std::ptrdiff_t idx = it - pts.begin();
    for (std::ptrdiff_t k = std::max<std::ptrdiff_t>(0, idx - 4); k < std::min(n, idx + 5); ++k) {
      const double du = pts[k].U - ru, dv = pts[k].V - rv;
      best = std::min(best, std::sqrt(du * du + dv * dv));
    }
    out.reflect_hausdorff = std::max(out.reflect_hausdorff, best);
  }

  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (pts[i].r != 2.0 * M) continue;
    const double s1 = (pts[i].V - pts[i - 1].V) / (pts[i].U - pts[i - 1].U);
    const double s2 = (pts[i + 1].V - pts[i].V) / (pts[i + 1].U - pts[i].U);
    const double kink = std::fabs(s2 - s1) / (0.5 * (std::fabs(s1) + std::fabs(s2)) + 1e-300);
    out.max_horizon_kink = std::max(out.max_horizon_kink, kink);
  }
  return out;
}

}  // namespace sscmc

#endif
