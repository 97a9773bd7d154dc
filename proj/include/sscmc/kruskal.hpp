#ifndef SSCMC_KRUSKAL_HPP
#define SSCMC_KRUSKAL_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "sscmc/geometry.hpp"
#include "sscmc/roots.hpp"

// Coordinate transforms between Schwarzschild (t, r), null (u, v), Kruskal
// null (U, V) and Kruskal Cartesian (X, T), with region bookkeeping.  All
// curves are spherically symmetric, so the angular coordinates never appear.
namespace sscmc {

struct KruskalPoint {
  double U = 0.0;
  double V = 0.0;

  double X() const { return 0.5 * (U + V); }
  double T() const { return 0.5 * (V - U); }
};

// Reflection across the T-axis, (U, V) -> (-V, -U).  An involution fixing
// the axis U + V = 0.
inline KruskalPoint reflect_T(const KruskalPoint& p) { return {-p.V, -p.U}; }

// Sign-pattern region classifier: I (+,+), II (-,+), I' (-,-), II' (+,-).
inline Region region_of(const KruskalPoint& p) {
  if (p.V >= 0.0)
    return p.U >= 0.0 ? Region::I : Region::II;
  return p.U <= 0.0 ? Region::Iprime : Region::IIprime;
}

// Tortoise coordinate r + 2M ln|r - 2M|, regularizing the null directions
// u = t - r*, v = t + r*.  Diverges to -inf at the horizon.
inline double tortoise(double r, double M) {
  check_mass(M);
  if (!(r > 0.0)) throw std::domain_error("tortoise: r must be positive");
  if (r == 2.0 * M) throw std::domain_error("tortoise: diverges at r = 2M");
  return r + 2.0 * M * std::log(std::fabs(r - 2.0 * M));
}

// Product U V as a function of r alone: (r - 2M) e^{r/2M}.  Strictly
// increasing, with range (-2M, infinity) over r in (0, infinity).
inline double uv_product(double r, double M) {
  check_mass(M);
  if (!(r >= 0.0)) throw std::domain_error("uv_product: r must be nonnegative");
  return (r - 2.0 * M) * std::exp(0.5 * r / M);
}

// Inverse of uv_product; uv must exceed -2M (the value at the singularity).
inline double radius_from_uv(double uv, double M) {
  check_mass(M);
  if (!(uv > -2.0 * M)) throw std::domain_error("radius_from_uv: uv <= -2M has no radius");
  if (uv == 0.0) return 2.0 * M;
  double hi = 2.0 * M;
  while (uv_product(hi, M) < uv) hi *= 2.0;
  return find_root([&](double r) { return uv_product(r, M) - uv; }, 0.0, hi, 1e-14 * M);
}

// Map a Schwarzschild-patch point (t, r) into the Kruskal plane.  The sign
// pair of (U, V) is fixed by the region:
//   I: (+e^{-u/4M}, +e^{v/4M})      II: (-e^{-u/4M}, +e^{v/4M})
//   I': (-e^{-u/4M}, -e^{v/4M})     II': (+e^{-u/4M}, -e^{v/4M})
// The horizon itself (r = 2M) is rejected; leaves crossing it are built from
// the regular factored forms in the leaf module instead.
inline KruskalPoint to_kruskal(double t, double r, Region region, double M) {
  check_mass(M);
  if (!(r > 0.0) || !std::isfinite(t)) throw std::domain_error("to_kruskal: invalid (t, r)");
  if (r == 2.0 * M)
    throw std::domain_error("to_kruskal: r = 2M maps to the axes; use the leaf builder forms");
  if (region_is_interior(region) != (r < 2.0 * M))
    throw std::domain_error("to_kruskal: r outside the range of the region");

  const double rs = tortoise(r, M);
  const double eU = std::exp(-(t - rs) / (4.0 * M));
  const double eV = std::exp((t + rs) / (4.0 * M));
  switch (region) {
    case Region::I: return {eU, eV};
    case Region::II: return {-eU, eV};
    case Region::Iprime: return {-eU, -eV};
    case Region::IIprime: return {eU, -eV};
  }
  throw std::logic_error("unreachable");
}

// Schwarzschild time of a Kruskal point, t = 2M ln|V/U|.  Infinite on the
// axes (horizon crossings).
inline double schwarzschild_t(const KruskalPoint& p, double M) {
  check_mass(M);
  if (p.U == 0.0 && p.V == 0.0) return 0.0;  // the origin carries finite t
  return 2.0 * M * (std::log(std::fabs(p.V)) - std::log(std::fabs(p.U)));
}

}  // namespace sscmc

#endif
