#ifndef SSCMC_VERIFY_HPP
#define SSCMC_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "sscmc/criteria.hpp"
#include "sscmc/leaf.hpp"

// Brute-force verification harness: pairwise disjointness of leaves,
// coverage of Kruskal-plane windows by leaf families, convergence of leaves
// to the limiting cylinders, and monotonicity of the T-intercept along the
// four-branch family loop.
namespace sscmc {

// ---------------------------------------------------------------------------
// Disjointness

struct DisjointnessReport {
  double c1 = 0.0, c2 = 0.0;
  bool shared_domain_empty = false;
  double min_abs_log_ratio = std::numeric_limits<double>::infinity();
  bool intersection_found = false;
  double r_intersection = 0.0;
  double U_intersection = 0.0, V_intersection = 0.0;
  std::string note;
};

namespace detail {

// ln of the coordinate that is positive for this leaf on the U+V >= 0 half
// over the shared comparison domain: ln V for the Sigma families, ln U for
// the tilde ones.  Two leaves of the same wedge meet exactly where these
// logs agree at equal r, since the product U V is a function of r alone.
inline double compare_log_coord(const LeafSpec& s, double r, const QuadratureConfig& cfg) {
  return leaf_ln_coord(s, r, cfg);
}

// ln V regardless of family, for cross-family comparisons on the shared
// exterior wedge where V is positive on every U+V >= 0 half.
inline double exterior_lnV(const LeafSpec& s, double r, const QuadratureConfig& cfg) {
  if (!is_tilde(s.family)) return native_lnV_at(s, r, cfg);
  return std::log(leaf_V_at(s, r, cfg));
}

inline bool is_interior_only(Family f) {
  return f == Family::SigmaMinus || f == Family::TildeSigmaPlus;
}

}  // namespace detail

// Compare two leaves of one family group (or the SigmaPlus/TildeSigmaMinus
// cross pair sharing the exteriors) for intersections.  Equal Kruskal points
// force equal r, so it suffices to scan the shared r-domain and locate sign
// changes of the log-coordinate difference by bisection.
inline DisjointnessReport check_disjoint(const LeafSpec& s1, const LeafSpec& s2,
                                         const QuadratureConfig& cfg = {}, int n_grid = 120) {
  if (s1.M != s2.M || s1.H != s2.H)
    throw std::invalid_argument("check_disjoint: leaves must share (M, H)");
  const double M = s1.M;
  DisjointnessReport rep;
  rep.c1 = s1.c;
  rep.c2 = s2.c;

  const CriticalValues cv = critical_values(s1.H, M);
  const bool cyl1 = detail::is_cylinder_constant(s1, cv);
  const bool cyl2 = detail::is_cylinder_constant(s2, cv);
  if (cyl1 || cyl2) {
    // Constant-r leaves occupy a single radius that no other admissible leaf
    // of the loop attains (and the two cylinders sit in different wedges).
    rep.shared_domain_empty = true;
    rep.note = "cylinder leaf: distinct constant-r hyperbola, trivially disjoint";
    return rep;
  }

  const bool io1 = detail::is_interior_only(s1.family);
  const bool io2 = detail::is_interior_only(s2.family);

  double lo, hi;
  std::string segment;
  if (io1 && io2) {
    if (s1.family != s2.family) {
      rep.shared_domain_empty = true;
      rep.note = "different interior wedges";
      return rep;
    }
    hi = std::min(s1.R, s2.R);
    lo = 1e-3 * hi;
    segment = "interior";
  } else if (!io1 && !io2) {
    if (s1.family == s2.family) {
      lo = std::max(s1.R, s2.R);
      // the leaf through the origin has no interior piece and a vanishing
      // U at the horizon; start just outside
      if (lo >= 2.0 * M * (1.0 - 1e-12)) lo = 2.0 * M * (1.0 + 1e-9);
      hi = std::min(s1.r_max, s2.r_max);
      segment = "through-horizon";
    } else {
      // SigmaPlus vs TildeSigmaMinus share only the exterior wedges
      lo = 2.0 * M * (1.0 + 1e-6);
      hi = std::min(s1.r_max, s2.r_max);
      segment = "exterior";
    }
  } else {
    // one interior-only leaf, one horizon-crossing leaf: the interior-only
    // leaf sits strictly inside its limiting cylinder, the other strictly
    // outside (or in the opposite wedge)
    rep.shared_domain_empty = true;
    rep.note = "cylinder barrier between the families";
    return rep;
  }

  if (!(hi > lo)) {
    rep.shared_domain_empty = true;
    rep.note = "no shared radii";
    return rep;
  }

  const bool cross_family = (s1.family != s2.family);
  auto delta = [&](double r) {
    if (cross_family)
      return detail::exterior_lnV(s1, r, cfg) - detail::exterior_lnV(s2, r, cfg);
    return detail::compare_log_coord(s1, r, cfg) - detail::compare_log_coord(s2, r, cfg);
  };

  double prev_r = lo;
  double prev_d = delta(lo);
  rep.min_abs_log_ratio = std::fabs(prev_d);
  for (int j = 1; j < n_grid; ++j) {
    const double u = static_cast<double>(j) / (n_grid - 1);
    const double w = u * u * (3.0 - 2.0 * u);  // cluster both ends
    const double r = lo + (hi - lo) * w;
    const double d = delta(r);
    rep.min_abs_log_ratio = std::min(rep.min_abs_log_ratio, std::fabs(d));
    if (std::signbit(d) != std::signbit(prev_d) && prev_d != 0.0 && d != 0.0) {
      const double root = find_root(delta, prev_r, r, 1e-12 * M, 60 * 2);
      rep.intersection_found = true;
      rep.r_intersection = root;
      rep.U_intersection = leaf_U_at(s1, root, cfg);
      rep.V_intersection = leaf_V_at(s1, root, cfg);
      rep.note = "log-coordinate ratio crosses 1 on segment " + segment;
      return rep;
    }
    prev_r = r;
    prev_d = d;
  }

  // guard against an upper-half-of-one vs lower-half-of-other meeting in an
  // interior wedge: that requires both Schwarzschild times to vanish at a
  // shared radius, i.e. coinciding turning radii
  if (segment == "interior" && std::fabs(s1.R - s2.R) < 1e-12 * M) {
    rep.intersection_found = true;
    rep.note = "coinciding turning radii";
    return rep;
  }
  rep.note = "disjoint on segment " + segment;
  return rep;
}

// ---------------------------------------------------------------------------
// Coverage

struct CoverageFailure {
  double X = 0.0, T = 0.0;
  std::string reason;
};

struct CoverageReport {
  int n_total = 0;
  int n_covered = 0;
  int n_excluded = 0;  // outside the extension (at or beyond r = 0)
  int n_uncovered = 0;
  double max_residual = 0.0;
  bool exploratory = false;
  std::vector<CoverageFailure> failures;  // capped at 20
};

namespace detail {

inline LeafSpec raw_spec(double M, double H, Family family, double R) {
  LeafSpec s;
  s.M = M;
  s.H = H;
  s.family = family;
  s.R = R;
  s.c = (R == 2.0 * M) ? -8.0 * M * M * M * H : domain_curve_lower(R, H, M);
  s.r_max = 1e9 * M;
  return s;
}

// Schwarzschild time t(r0; R) on the upper half of a lower-curve leaf with
// turning radius R.  Monotone in R at fixed r0 on each branch, diverging at
// the cylinder; this is the quantity the coverage bisection inverts.
inline double time_at_fixed_radius(double M, double H, Family family, double R, double r0,
                                   const QuadratureConfig& cfg) {
  return native_t_at(raw_spec(M, H, family, R), r0, cfg);
}

struct CoverageSolve {
  bool ok = false;
  double R = 0.0;
  double residual = 0.0;
  std::string reason;
};

// Best-effort time evaluation for the coverage bisection.  Leaves hugging
// the limiting cylinder have a noise-limited radicand cofactor (its value at
// the turning radius sinks toward the rounding floor of its coefficients),
// so a relaxed tolerance tier keeps the solve alive; the relaxation is
// accumulated into the residual floor instead of being hidden.
inline double time_best_effort(double M, double H, Family family, double R, double r0,
                               const QuadratureConfig& cfg, double& residual_floor) {
  try {
    return time_at_fixed_radius(M, H, family, R, r0, cfg);
  } catch (const QuadratureError&) {
    QuadratureConfig relaxed = cfg;
    relaxed.rel_tol = 3e-7;
    relaxed.abs_tol = 1e-7;
    relaxed.max_subdivisions = 20000;
    residual_floor = std::max(residual_floor, 1e-7);
    return time_at_fixed_radius(M, H, family, R, r0, relaxed);
  }
}

// Find the SigmaMinus (R < r0 < cylinder) or SigmaPlus leaf through the
// point (r0, t0), t0 >= 0, by bisection over the turning radius.  The time
// at fixed r0 is monotone in R: near zero (or the origin-leaf profile) at
// the turning-point end of the bracket and divergent at the cylinder end.
inline CoverageSolve solve_through_point(double M, double H, Family family, double r0, double t0,
                                         const QuadratureConfig& cfg) {
  CoverageSolve out;
  const CriticalValues cv = critical_values(H, M);
  const double r_cyl = cv.r_cyl_sigma;

  double turn_end, cyl_end;
  if (family == Family::SigmaMinus) {
    turn_end = r0 * (1.0 + 1e-15);
    cyl_end = r_cyl * (1.0 - 1e-9);
    if (!(turn_end < cyl_end)) {
      out.reason = "radius at or beyond the limiting cylinder";
      return out;
    }
  } else {
    turn_end = (r0 < 2.0 * M) ? r0 * (1.0 - 1e-15) : 2.0 * M * (1.0 - 1e-15);
    cyl_end = r_cyl * (1.0 + 1e-9);
    if (!(cyl_end < turn_end)) {
      out.reason = "radius at or beyond the limiting cylinder";
      return out;
    }
  }

  double floor = 0.0;
  auto time_of = [&](double R) { return time_best_effort(M, H, family, R, r0, cfg, floor); };
  const double t_turn = time_of(turn_end);
  if (t0 <= t_turn) {
    // closer to the turning-point end than the bracket can resolve; the
    // residual stays at the ulp level of the end leaf
    out.ok = true;
    out.R = turn_end;
    out.residual = std::fabs(t_turn - t0) + floor;
    return out;
  }
  if (t0 >= time_of(cyl_end)) {
    out.reason = "time above the reachable range (cylinder-hugging leaf needed)";
    return out;
  }

  double a = turn_end, b = cyl_end;  // time below t0 at a, above at b
  double mid = 0.5 * (a + b);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (a + b);
    const double fm = time_of(mid) - t0;
    if (std::fabs(fm) < 1e-9 || std::fabs(b - a) < 1e-15 * M) {
      out.ok = true;
      out.R = mid;
      out.residual = std::fabs(fm) + floor;
      return out;
    }
    if (fm < 0.0)
      a = mid;
    else
      b = mid;
  }
  out.ok = true;
  out.R = mid;
  out.residual = std::fabs(time_of(mid) - t0) + floor;
  return out;
}

// Residual in the Kruskal plane between the found leaf and the target point
// at equal r: both coordinates move together, so the U V identity pins the
// distance through the time mismatch.
inline double plane_residual(double M, double t_residual, double U0, double V0) {
  const double scale = std::max(std::fabs(U0), std::fabs(V0));
  return scale * (std::exp(t_residual / (4.0 * M)) - 1.0) * 1.4142135623730951;
}

}  // namespace detail

// Coverage of the interior wedge window between the singularity hyperbola
// and the limiting cylinder by the SigmaMinus family: an (X, r) grid of
// points, each matched to its covering leaf by turning-radius bisection.
inline CoverageReport check_coverage_interior(double H, double M, double x_half_width, int grid_n,
                                              const QuadratureConfig& cfg = {},
                                              double r_margin_frac = 0.02) {
  CoverageReport rep;
  const CriticalValues cv = critical_values(H, M);
  const double r_lo = r_margin_frac * cv.r_cyl_sigma;
  const double r_hi = (1.0 - r_margin_frac) * cv.r_cyl_sigma;
  for (int i = 0; i < grid_n; ++i) {
    const double X = -x_half_width + 2.0 * x_half_width * static_cast<double>(i) / (grid_n - 1);
    for (int j = 0; j < grid_n; ++j) {
      const double r0 = r_lo + (r_hi - r_lo) * static_cast<double>(j) / (grid_n - 1);
      const double K = -uv_product(r0, M);
      const double T = std::sqrt(X * X + K);
      const double U0 = X - T, V0 = X + T;
      const double t0 = 2.0 * M * std::log(V0 / (-U0));
      ++rep.n_total;
      const detail::CoverageSolve sol =
          detail::solve_through_point(M, H, Family::SigmaMinus, r0, std::fabs(t0), cfg);
      if (!sol.ok) {
        ++rep.n_uncovered;
        if (rep.failures.size() < 20) rep.failures.push_back({X, T, sol.reason});
        continue;
      }
      ++rep.n_covered;
      rep.max_residual =
          std::max(rep.max_residual, detail::plane_residual(M, sol.residual, U0, V0));
    }
  }
  return rep;
}

// Coverage of a full square window |X|, |T| <= half_width by the four-family
// loop.  Points at or beyond the singularity hyperbolas are excluded.  For
// H = 0 every leaf family is proven disjoint and covering; for H != 0 the
// exterior wedges are exploratory.
inline CoverageReport check_coverage_plane(double H, double M, double half_width, int grid_n,
                                           const QuadratureConfig& cfg = {}) {
  CoverageReport rep;
  rep.exploratory = (H != 0.0);

  for (int i = 0; i < grid_n; ++i) {
    const double X = -half_width + 2.0 * half_width * static_cast<double>(i) / (grid_n - 1);
    for (int j = 0; j < grid_n; ++j) {
      const double T = -half_width + 2.0 * half_width * static_cast<double>(j) / (grid_n - 1);
      ++rep.n_total;

      double U = X - T, V = X + T;
      const double uv = U * V;
      if (uv <= -2.0 * M + 1e-6 * M) {
        ++rep.n_excluded;  // at or beyond r = 0, outside the extension
        continue;
      }

      // normalize by the discrete symmetries: reflection maps the primed
      // exteriors onto region I, the U<->V swap (with H -> -H, families
      // exchanged) maps the lower interior wedge onto region II
      double Hn = H;
      const Region reg = region_of({U, V});
      if (reg == Region::Iprime) {
        const double u2 = -V, v2 = -U;
        U = u2;
        V = v2;
      } else if (reg == Region::IIprime) {
        std::swap(U, V);
        Hn = -H;
      }
      if (region_of({U, V}) == Region::Iprime) {  // on the negative diagonal
        const double u2 = -V, v2 = -U;
        U = u2;
        V = v2;
      }

      const CriticalValues cvn = critical_values(Hn, M);
      const double r0 = radius_from_uv(uv, M);
      const double t0 = schwarzschild_t({U, V}, M);
      detail::CoverageSolve sol;
      double residual = 0.0;

      if (std::fabs(U) < 1e-12 && std::fabs(V) < 1e-12) {
        // the Kruskal origin lies on the c = -8M^3 H leaf
        residual = 0.0;
        sol.ok = true;
      } else if (std::fabs(U) < 1e-9 * M) {
        // V-axis: horizon crossings of the SigmaPlus family; match ln V(2M)
        const double target = std::log(V);
        auto lnV2M = [&](double R) {
          return detail::native_lnV_at(detail::raw_spec(M, Hn, Family::SigmaPlus, R), 2.0 * M,
                                       cfg);
        };
        double a = cvn.r_cyl_sigma * (1.0 + 1e-9), b = 2.0 * M * (1.0 - 1e-12);
        sol.ok = true;
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (a + b);
          const double fm = lnV2M(mid) - target;
          if (std::fabs(fm) < 1e-10 || (b - a) < 1e-15 * M) break;
          if (fm > 0.0)
            a = mid;  // ln V(2M) decreases with R
          else
            b = mid;
        }
        residual = std::fabs(std::exp(lnV2M(0.5 * (a + b))) - V);
      } else if (r0 < 2.0 * M) {
        // interior wedge II
        if (std::fabs(r0 - cvn.r_cyl_sigma) < 1e-9 * M) {
          sol.ok = true;  // on the limiting cylinder leaf
          residual = 0.0;
        } else {
          const Family fam = (r0 < cvn.r_cyl_sigma) ? Family::SigmaMinus : Family::SigmaPlus;
          sol = detail::solve_through_point(M, Hn, fam, r0, std::fabs(t0), cfg);
          if (sol.ok) residual = detail::plane_residual(M, sol.residual, U, V);
        }
      } else {
        // region I: split by the leaf through the origin
        const double t_origin = detail::origin_t_at(Hn, M, r0, cfg);
        if (std::fabs(t0 - t_origin) < 1e-9) {
          sol.ok = true;
          residual = 0.0;
        } else if (t0 > t_origin) {
          sol = detail::solve_through_point(M, Hn, Family::SigmaPlus, r0, t0, cfg);
          if (sol.ok) residual = detail::plane_residual(M, sol.residual, U, V);
        } else {
          // tilde side: swap U and V (t -> -t, H -> -H)
          sol = detail::solve_through_point(M, -Hn, Family::SigmaPlus, r0, -t0, cfg);
          if (sol.ok) residual = detail::plane_residual(M, sol.residual, V, U);
        }
      }

      if (!sol.ok) {
        ++rep.n_uncovered;
        if (rep.failures.size() < 20) rep.failures.push_back({X, T, sol.reason});
      } else {
        ++rep.n_covered;
        rep.max_residual = std::max(rep.max_residual, residual);
      }
    }
  }
  return rep;
}

// Coverage of an exterior-wedge window (region I), gridded in (r, t).  The
// leaf through the origin splits the wedge: above its time profile the
// SigmaPlus family covers, below it the TildeSigmaMinus family (reached by
// the U<->V swap).  For H != 0 the sign theorems are open there, so the
// check runs in exploratory mode.
inline CoverageReport check_coverage_exterior(double H, double M, double r_lo, double r_hi,
                                              double t_half, int grid_n,
                                              const QuadratureConfig& cfg = {}) {
  CoverageReport rep;
  rep.exploratory = (H != 0.0);
  for (int i = 0; i < grid_n; ++i) {
    const double r0 = r_lo + (r_hi - r_lo) * static_cast<double>(i) / (grid_n - 1);
    const double t_origin = detail::origin_t_at(H, M, r0, cfg);
    for (int j = 0; j < grid_n; ++j) {
      const double t0 = -t_half + 2.0 * t_half * static_cast<double>(j) / (grid_n - 1);
      ++rep.n_total;
      const KruskalPoint p = to_kruskal(t0, r0, Region::I, M);
      detail::CoverageSolve sol;
      double residual = 0.0;
      if (std::fabs(t0 - t_origin) < 1e-9) {
        sol.ok = true;
      } else if (t0 > t_origin) {
        sol = detail::solve_through_point(M, H, Family::SigmaPlus, r0, t0, cfg);
        if (sol.ok) residual = detail::plane_residual(M, sol.residual, p.U, p.V);
      } else {
        sol = detail::solve_through_point(M, -H, Family::SigmaPlus, r0, -t0, cfg);
        if (sol.ok) residual = detail::plane_residual(M, sol.residual, p.V, p.U);
      }
      if (!sol.ok) {
        ++rep.n_uncovered;
        if (rep.failures.size() < 20)
          rep.failures.push_back({p.X(), p.T(), sol.reason});
      } else {
        ++rep.n_covered;
        rep.max_residual = std::max(rep.max_residual, residual);
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Cylinder convergence

struct ConvergenceRow {
  double c = 0.0;
  double R = 0.0;
  double r_at_t0 = 0.0;
  double gap = 0.0;  // |r(c, t0) - r_cyl|
  bool skipped = false;
};

struct CylinderConvergenceReport {
  std::vector<ConvergenceRow> rows;
  bool monotone = true;
  double final_gap = std::numeric_limits<double>::infinity();
  double fitted_rate = 0.0;  // slope of log10(gap) against log10(c - c_min)
};

// Solve t(r; c) = t0 on each leaf of the sequence and report the distance of
// the solution radius from the limiting cylinder.
inline CylinderConvergenceReport check_cylinder_convergence(double H, double M, Family family,
                                                            double t0,
                                                            const std::vector<double>& c_sequence,
                                                            const QuadratureConfig& cfg = {}) {
  if (is_tilde(family))
    throw std::invalid_argument("check_cylinder_convergence: use the Sigma families");
  CylinderConvergenceReport rep;
  const CriticalValues cv = critical_values(H, M);
  std::vector<double> log_gap, log_dc;

  for (const double c : c_sequence) {
    ConvergenceRow row;
    row.c = c;
    row.R = turning_radius(H, c, family, M);
    const LeafSpec s = detail::raw_spec(M, H, family, row.R);
    auto time_of = [&](double r) { return detail::native_t_at(s, r, cfg); };

    double a, b;
    if (family == Family::SigmaMinus) {
      if (time_of(0.0) < t0) {
        row.skipped = true;
        rep.rows.push_back(row);
        continue;
      }
      a = 0.0;
      b = row.R;  // t decreases from f(0) to 0
    } else {
      a = row.R;
      b = 2.0 * M * (1.0 - 1e-12);  // t increases from 0 toward the horizon
      if (time_of(b) < t0) {
        row.skipped = true;
        rep.rows.push_back(row);
        continue;
      }
    }
    double fa = time_of(a) - t0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      const double fm = time_of(mid) - t0;
      if ((b - a) < 1e-12 * M) break;
      if (std::signbit(fm) == std::signbit(fa)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    row.r_at_t0 = 0.5 * (a + b);
    row.gap = std::fabs(row.r_at_t0 - cv.r_cyl_sigma);
    rep.rows.push_back(row);
    if (row.gap > 0.0 && c != cv.c_min) {
      log_gap.push_back(std::log10(row.gap));
      log_dc.push_back(std::log10(std::fabs(c - cv.c_min)));
    }
  }

  double prev = std::numeric_limits<double>::infinity();
  for (const ConvergenceRow& row : rep.rows) {
    if (row.skipped) continue;
    if (!(row.gap < prev)) rep.monotone = false;
    prev = row.gap;
    rep.final_gap = row.gap;
  }
  if (log_gap.size() >= 2) {
    // least-squares slope: empirical convergence rate, reported not asserted
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < log_gap.size(); ++i) {
      mx += log_dc[i];
      my += log_gap[i];
    }
    mx /= log_gap.size();
    my /= log_gap.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < log_gap.size(); ++i) {
      sxy += (log_dc[i] - mx) * (log_gap[i] - my);
      sxx += (log_dc[i] - mx) * (log_dc[i] - mx);
    }
    rep.fitted_rate = sxy / sxx;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Limit trends

struct LimitRow {
  int k = 0;
  double c = 0.0;
  double value = 0.0;
};

struct LimitsReport {
  // V(2M; c) along c = c_min + 10^{-k} M^2: grows without bound in the limit
  std::vector<LimitRow> v_horizon_toward_cylinder;
  double v_growth_log_slope = 0.0;  // d ln V / d ln (c - c_min), negative
  bool v_exceeds_threshold = false;
  // V(2M; c) along c = c_origin - 10^{-k} M^2: decays to zero
  std::vector<LimitRow> v_horizon_toward_origin;
  bool v_decays_below_threshold = false;
  // f(0; c) along c = c_min + 10^{-k} M^2: grows without bound (log rate)
  std::vector<LimitRow> f0_toward_cylinder;
  double f0_growth_per_decade = 0.0;  // increment of f(0) per decade of c - c_min
  bool f0_exceeds_threshold = false;
  // f(0; c) along c = -10^{-k} M^2: decays to zero
  std::vector<LimitRow> f0_toward_zero;
  bool f0_decays_below_threshold = false;
  // |U/V - 1| at r = 3M along c = -10^{-k} M^2 (maximal family only)
  std::vector<LimitRow> uv_ratio_toward_zero;
  bool uv_ratio_within = false;
};

inline LimitsReport check_limits(double H, double M, const QuadratureConfig& cfg = {},
                                 int k_min = 2, int k_max = 8, double v_grow_threshold = 1e6,
                                 double v_decay_threshold = 1e-6, double f0_grow_threshold = 1e3,
                                 double f0_decay_threshold = 1e-2, double uv_tol = 1e-3) {
  LimitsReport rep;
  const CriticalValues cv = critical_values(H, M);
  const double M2 = M * M;

  for (int k = k_min; k <= k_max; ++k) {
    const double c = cv.c_min + std::pow(10.0, -k) * M2;
    const double R = turning_radius(H, c, Family::SigmaPlus, M);
    const double lnV =
        detail::native_lnV_at(detail::raw_spec(M, H, Family::SigmaPlus, R), 2.0 * M, cfg);
    rep.v_horizon_toward_cylinder.push_back({k, c, std::exp(lnV)});
    if (std::exp(lnV) > v_grow_threshold) rep.v_exceeds_threshold = true;
  }
  {
    const auto& rows = rep.v_horizon_toward_cylinder;
    if (rows.size() >= 2) {
      const double dlnV = std::log(rows.back().value) - std::log(rows.front().value);
      const double dlnc = std::log(std::pow(10.0, -k_max)) - std::log(std::pow(10.0, -k_min));
      rep.v_growth_log_slope = dlnV / dlnc;
    }
  }

  for (int k = k_min; k <= k_max; ++k) {
    const double c = cv.c_origin - std::pow(10.0, -k) * M2;
    if (!(c > cv.c_min)) continue;
    const double R = turning_radius(H, c, Family::SigmaPlus, M);
    const double lnV =
        detail::native_lnV_at(detail::raw_spec(M, H, Family::SigmaPlus, R), 2.0 * M, cfg);
    rep.v_horizon_toward_origin.push_back({k, c, std::exp(lnV)});
  }
  if (!rep.v_horizon_toward_origin.empty() &&
      rep.v_horizon_toward_origin.back().value < v_decay_threshold)
    rep.v_decays_below_threshold = true;

  for (int k = k_min; k <= k_max; ++k) {
    const double c = cv.c_min + std::pow(10.0, -k) * M2;
    const double R = turning_radius(H, c, Family::SigmaMinus, M);
    const double f0 = detail::native_t_at(detail::raw_spec(M, H, Family::SigmaMinus, R), 0.0, cfg);
    rep.f0_toward_cylinder.push_back({k, c, f0});
    if (f0 > f0_grow_threshold) rep.f0_exceeds_threshold = true;
  }
  {
    const auto& rows = rep.f0_toward_cylinder;
    if (rows.size() >= 2)
      rep.f0_growth_per_decade =
          (rows.back().value - rows.front().value) / static_cast<double>(k_max - k_min);
  }

  for (int k = k_min; k <= k_max; ++k) {
    const double c = -std::pow(10.0, -k) * M2;
    if (!(c > cv.c_min)) continue;
    const double R = turning_radius(H, c, Family::SigmaMinus, M);
    const double f0 = detail::native_t_at(detail::raw_spec(M, H, Family::SigmaMinus, R), 0.0, cfg);
    rep.f0_toward_zero.push_back({k, c, f0});
  }
  if (!rep.f0_toward_zero.empty() && rep.f0_toward_zero.back().value < f0_decay_threshold)
    rep.f0_decays_below_threshold = true;

  if (H == 0.0) {
    for (int k = k_min; k <= k_max; ++k) {
      const double c = -std::pow(10.0, -k) * M2;
      const double R = turning_radius(0.0, c, Family::SigmaPlus, M);
      const double t = detail::native_t_at(detail::raw_spec(M, 0.0, Family::SigmaPlus, R),
                                           3.0 * M, cfg);
      // U/V = exp(-t/2M) on the upper half
      const double ratio_gap = std::fabs(std::exp(-t / (2.0 * M)) - 1.0);
      rep.uv_ratio_toward_zero.push_back({k, c, ratio_gap});
    }
    if (!rep.uv_ratio_toward_zero.empty() && rep.uv_ratio_toward_zero.back().value < uv_tol)
      rep.uv_ratio_within = true;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// T-intercept ordering along the four-branch loop

struct TInterceptLoopReport {
  std::vector<double> intercepts;
  bool strictly_increasing = true;
};

// Traverse the loop TildeSigmaPlus (c: 0 -> c_max), TildeSigmaMinus
// (c_max -> c_origin), SigmaPlus (c_origin -> c_min), SigmaMinus
// (c_min -> 0) and record the T-axis intercepts, which must increase
// strictly from -sqrt(2M) toward +sqrt(2M).
inline TInterceptLoopReport check_t_intercept_loop(double H, double M, int n_per_family = 24) {
  TInterceptLoopReport rep;
  const CriticalValues cv = critical_values(H, M);
  auto intercept = [&](double R, bool tilde) {
    const double value = std::sqrt(2.0 * M - R) * std::exp(R / (4.0 * M));
    return tilde ? -value : value;
  };
  auto push_family = [&](Family fam, double c_from, double c_to, bool tilde) {
    for (int i = 1; i <= n_per_family; ++i) {
      const double c = c_from + (c_to - c_from) * static_cast<double>(i) / (n_per_family + 1);
      rep.intercepts.push_back(intercept(turning_radius(H, c, fam, M), tilde));
    }
  };
  push_family(Family::TildeSigmaPlus, 0.0, cv.c_max, true);
  push_family(Family::TildeSigmaMinus, cv.c_max, cv.c_origin, true);
  rep.intercepts.push_back(0.0);  // the leaf through the origin
  push_family(Family::SigmaPlus, cv.c_origin, cv.c_min, false);
  push_family(Family::SigmaMinus, cv.c_min, 0.0, false);

  for (std::size_t i = 1; i < rep.intercepts.size(); ++i)
    if (!(rep.intercepts[i] > rep.intercepts[i - 1])) rep.strictly_increasing = false;
  return rep;
}

}  // namespace sscmc

#endif
