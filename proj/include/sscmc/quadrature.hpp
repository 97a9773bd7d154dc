#ifndef SSCMC_QUADRATURE_HPP
#define SSCMC_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <type_traits>
#include <vector>

#include "sscmc/errors.hpp"

namespace sscmc {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 4000;
};

// Location of an inverse square root endpoint singularity.  The exponent is
// fixed at -1/2: it is removed exactly by the substitution x = endpoint -+ s^2.
enum class SingularEndpoint { none, lower, upper };

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (nodes on [-1,1],
// only the nonnegative half is stored).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

template <class F>
Panel gk15_panel(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(mid);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGK15Nodes[i];
    const double fsum = f(mid - dx) + f(mid + dx);
    kronrod += fsum * kKronrodWeights[i];
    if (i % 2 == 1) gauss += fsum * kGaussWeights[i / 2];
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = kronrod * half;
  p.error = std::fabs((kronrod - gauss) * half);
  return p;
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of a finite integrand over [a, b].
// Throws QuadratureError when the tolerance cannot be met within
// cfg.max_subdivisions interval splits.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, cfg);

  std::vector<detail::Panel> panels;
  panels.reserve(64);
  const double mid = 0.5 * (a + b);
  panels.push_back(detail::gk15_panel(f, a, mid));
  panels.push_back(detail::gk15_panel(f, mid, b));

  const double min_width =
      16.0 * std::numeric_limits<double>::epsilon() * std::max({std::fabs(a), std::fabs(b), 1.0});

  for (int split = 0; split < cfg.max_subdivisions; ++split) {
    double total = 0.0, err = 0.0;
    for (const auto& p : panels) {
      total += p.value;
      err += p.error;
    }
    if (!std::isfinite(total))
      throw QuadratureError("integrate: integrand evaluated to a non-finite value");
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total));
    if (err <= tol) return total;

    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].error > panels[worst].error) worst = i;

    const detail::Panel w = panels[worst];
    if (w.b - w.a <= min_width) {
      // Cannot refine further in double precision; accept if the residual is
      // plausibly roundoff noise.
      if (err <= std::max(100.0 * tol, 1e3 * std::numeric_limits<double>::epsilon() *
                                           std::fabs(total)))
        return total;
      throw QuadratureError("integrate: panel width exhausted, error " + std::to_string(err));
    }
    const double m = 0.5 * (w.a + w.b);
    panels[worst] = detail::gk15_panel(f, w.a, m);
    panels.push_back(detail::gk15_panel(f, m, w.b));
  }
  throw QuadratureError("integrate: tolerance unmet after max_subdivisions");
}

// Integral of f over [a, b] where f has an inverse square root singularity at
// one endpoint: f(x) * sqrt(|x - endpoint|) extends continuously there.  The
// substitution x = endpoint -+ s^2 (dx = -+ 2 s ds) removes the singularity
// exactly, and the regularized integrand is handed to `integrate`.
//
// The integrand may be callable either as f(x) or as f(x, dist) with dist the
// exact distance s^2 to the singular endpoint; the two-argument form lets
// integrands built around that distance avoid the cancellation of
// reconstructing it from x.
//
// Non-integrable behavior (regularized integrand unbounded at s -> 0) is
// detected by probing and reported as NonIntegrableError.
template <class F>
double integrate_sqrt_singular(F&& f, double a, double b, SingularEndpoint endpoint,
                               const QuadratureConfig& cfg = {}) {
  auto eval = [&](double x, double dist) -> double {
    if constexpr (std::is_invocable_v<F&, double, double>)
      return f(x, dist);
    else
      return f(x);
  };
  if (endpoint == SingularEndpoint::none)
    return integrate([&](double x) { return eval(x, 0.0); }, a, b, cfg);
  if (a == b) return 0.0;
  if (a > b) return -integrate_sqrt_singular(f, b, a, endpoint, cfg);

  const double span = b - a;
  const double length = std::sqrt(span);

  auto regularized = [&](double s) -> double {
    const double dist = s * s;
    const double x = (endpoint == SingularEndpoint::lower) ? a + dist : b - dist;
    return 2.0 * s * eval(x, dist);
  };

  // An integrable -1/2 singularity gives a regularized integrand that
  // saturates toward the endpoint (possibly after a large but finite
  // crossover); persistent growth through the smallest probed scale flags a
  // stronger, non-integrable singularity.  Offset-aware integrands can be
  // probed at arbitrarily small offsets; plain ones only down to where the
  // offset stays representable against the endpoint.
  {
    const double endpoint_mag = std::fabs(endpoint == SingularEndpoint::lower ? a : b);
    const double s_floor =
        std::is_invocable_v<F&, double, double>
            ? 0.0
            : std::sqrt(32.0 * std::numeric_limits<double>::epsilon() * endpoint_mag);
    std::vector<double> g;
    for (const double frac : {1e-3, 1e-5, 1e-7, 1e-9, 1e-11}) {
      const double s = length * frac;
      if (s <= s_floor) break;
      g.push_back(std::fabs(regularized(s)));
    }
    if (g.size() >= 3 && std::isfinite(g.front())) {
      bool exploding = true;
      for (std::size_t i = 1; i < g.size(); ++i)
        if (std::isfinite(g[i]) && g[i] <= 30.0 * g[i - 1] + 1e-290) exploding = false;
      if (exploding)
        throw NonIntegrableError("integrate_sqrt_singular: endpoint singularity not integrable");
    }
  }

  return integrate(regularized, 0.0, length, cfg);
}

// Integral of f over [a, +infinity) via the rational map y = a + s/(1-s),
// s in [0,1).  Assumes f decays at least as fast as y^-2 (the integrals
// handled here decay like y^-3).  The result is cross-checked at doubled
// resolution of the mapped domain.
template <class F>
double integrate_to_infinity(F&& f, double a, const QuadratureConfig& cfg = {}) {
  auto mapped = [&](double s) -> double {
    const double om = 1.0 - s;
    const double y = a + s / om;
    return f(y) / (om * om);
  };
  const double coarse = integrate(mapped, 0.0, 0.5, cfg) + integrate(mapped, 0.5, 1.0, cfg);
  const double fine = integrate(mapped, 0.0, 0.25, cfg) + integrate(mapped, 0.25, 0.5, cfg) +
                      integrate(mapped, 0.5, 0.75, cfg) + integrate(mapped, 0.75, 1.0, cfg);
  const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(fine)) * 100.0;
  if (std::fabs(fine - coarse) > tol)
    throw QuadratureError("integrate_to_infinity: doubled-resolution check failed");
  return fine;
}

}  // namespace sscmc

#endif
