#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "sscmc/geometry.hpp"

using namespace sscmc;

TEST_CASE("metric factor") {
  CHECK(metric_factor(2.0, 1.0) == 0.0);
  CHECK(metric_factor(1.0, 1.0) == -1.0);
  CHECK(metric_factor(1e9, 1.0) == Catch::Approx(1.0));
  CHECK(metric_factor(1.0, 1.0) < 0.0);
  CHECK(metric_factor(3.0, 1.0) > 0.0);
  CHECK_THROWS_AS(metric_factor(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(metric_factor(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(metric_factor(1.0, -2.0), std::domain_error);
}

TEST_CASE("domain curves") {
  const double M = 1.0;
  // symbolic substitution at H = 0, r = 3M/2
  CHECK(domain_curve_lower(1.5, 0.0, M) ==
        Catch::Approx(-3.0 * std::sqrt(3.0) / 4.0).epsilon(1e-14));
  // both terms vanish toward r = 0
  CHECK(std::fabs(domain_curve_lower(1e-8, 0.3, M)) < 1e-10);
  CHECK(std::fabs(domain_curve_upper(1e-8, -0.4, M)) < 1e-10);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> rdist(1e-3, 2.0 * M - 1e-3);
  std::uniform_real_distribution<double> hdist(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double r = rdist(rng);
    const double H = hdist(rng);
    // upper curve at H equals the negated lower curve at -H
    CHECK(domain_curve_upper(r, H, M) == Catch::Approx(-domain_curve_lower(r, -H, M)).margin(1e-14));
    // and at H = 0 the two curves are exact negations
    CHECK(domain_curve_lower(r, 0.0, M) == Catch::Approx(-domain_curve_upper(r, 0.0, M)).margin(1e-14));
  }
  CHECK_THROWS_AS(domain_curve_lower(2.0 * M, 0.1, M), std::domain_error);
  CHECK_THROWS_AS(domain_curve_upper(0.0, 0.1, M), std::domain_error);
}

TEST_CASE("critical values at H = 0") {
  const double M = 1.0;
  const CriticalValues cv = critical_values(0.0, M);
  CHECK(std::fabs(cv.r_cyl_sigma - 1.5 * M) < 1e-10 * M);
  CHECK(std::fabs(cv.c_min + 3.0 * std::sqrt(3.0) / 4.0 * M * M) < 1e-10 * M * M);
  CHECK(std::fabs(cv.c_max + cv.c_min) < 1e-10 * M * M);
  CHECK(std::fabs(cv.r_cyl_tilde - cv.r_cyl_sigma) < 1e-10 * M);
  CHECK(cv.c_origin == 0.0);
}

TEST_CASE("critical values structure for general H") {
  const double M = 1.0;
  for (const double H : {-1.2, -0.5, -0.3, 0.0, 0.1, 0.5, 1.3}) {
    const CriticalValues cv = critical_values(H, M);
    CHECK(cv.c_min < std::min(0.0, cv.c_origin));
    CHECK(cv.c_max > std::max(0.0, cv.c_origin));
    CHECK(cv.c_min < cv.c_origin);
    CHECK(cv.c_origin < cv.c_max);
    CHECK(cv.r_cyl_sigma > 0.0);
    CHECK(cv.r_cyl_sigma < 2.0 * M);
    // the minimizer is a critical point of the lower curve: finite-difference
    // derivative check (step balances truncation against roundoff even when
    // the cylinder sits close to the horizon)
    const double d = 3e-7;
    const double fd = (domain_curve_lower(cv.r_cyl_sigma + d, H, M) -
                       domain_curve_lower(cv.r_cyl_sigma - d, H, M)) /
                      (2.0 * d);
    CHECK(std::fabs(fd) < 1e-8 * M);
    // round trip: curve value at the minimizer is c_min
    CHECK(domain_curve_lower(cv.r_cyl_sigma, H, M) == cv.c_min);
    // cylinder self-consistency: the limiting cylinder has mean curvature H
    CHECK(cylinder_mean_curvature(cv.r_cyl_sigma, M) == Catch::Approx(H).margin(1e-11));
    CHECK(cylinder_mean_curvature(cv.r_cyl_tilde, M, true) == Catch::Approx(H).margin(1e-11));
  }
}

TEST_CASE("cylinder mean curvature") {
  const double M = 1.0;
  CHECK(cylinder_mean_curvature(1.5 * M, M) == 0.0);
  CHECK(cylinder_mean_curvature(1.5 * M, M, true) == -0.0);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> rdist(1e-2, 2.0 * M - 1e-2);
  for (int i = 0; i < 50; ++i) {
    const double r0 = rdist(rng);
    CHECK(cylinder_mean_curvature(r0, M) == -cylinder_mean_curvature(r0, M, true));
  }
  CHECK_THROWS_AS(cylinder_mean_curvature(2.0 * M, M), std::domain_error);
  CHECK_THROWS_AS(cylinder_mean_curvature(0.0, M), std::domain_error);
}

TEST_CASE("admissible intervals and the domain condition") {
  const double M = 1.0;
  for (const double H : {-0.4, 0.0, 0.25}) {
    const CriticalValues cv = critical_values(H, M);
    const CInterval sm = admissible_c_interval(Family::SigmaMinus, H, M);
    CHECK(sm.lo == cv.c_min);
    CHECK(sm.hi == 0.0);
    const CInterval sp = admissible_c_interval(Family::SigmaPlus, H, M);
    CHECK(sp.hi == cv.c_origin);
    const CInterval tp = admissible_c_interval(Family::TildeSigmaPlus, H, M);
    CHECK(tp.lo == 0.0);
    CHECK(tp.hi == cv.c_max);
    const CInterval tm = admissible_c_interval(Family::TildeSigmaMinus, H, M);
    CHECK(tm.lo == cv.c_origin);
    CHECK(tm.closed_lo);
    CHECK_FALSE(tm.closed_hi);

    // the leaf domain condition: slope ratio exceeds 1 exactly where the
    // domain curve is on the admissible side of c
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> rdist(1e-2, 2.0 * M - 1e-2);
    const double c2 = 0.5 * (sm.lo + sm.hi);
    const double c4 = 0.5 * (tp.lo + tp.hi);
    for (int i = 0; i < 100; ++i) {
      const double r = rdist(rng);
      CHECK((slope_ratio(Region::II, r, H, c2, M) > 1.0) ==
            (domain_curve_lower(r, H, M) > c2));
      CHECK((slope_ratio(Region::IIprime, r, H, c4, M) > 1.0) ==
            (domain_curve_upper(r, H, M) < c4));
    }
  }
}

TEST_CASE("turning radius") {
  const double M = 1.0;
  SECTION("cylinder endpoint at H = 0") {
    const CriticalValues cv = critical_values(0.0, M);
    CHECK(turning_radius(0.0, cv.c_min, Family::SigmaMinus, M) == cv.r_cyl_sigma);
    CHECK(turning_radius(0.0, cv.c_min, Family::SigmaPlus, M) == cv.r_cyl_sigma);
    CHECK(std::fabs(cv.r_cyl_sigma - 1.5) < 1e-10);
  }
  SECTION("round trip on branch interiors") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (const double H : {-0.3, 0.0, 0.2}) {
      const CriticalValues cv = critical_values(H, M);
      for (int i = 0; i < 40; ++i) {
        const double frac = u(rng);
        {
          const double R = frac * cv.r_cyl_sigma;
          const double c = domain_curve_lower(R, H, M);
          CHECK(std::fabs(turning_radius(H, c, Family::SigmaMinus, M) - R) < 1e-10 * M);
        }
        {
          const double R = cv.r_cyl_sigma + frac * (2.0 * M - cv.r_cyl_sigma) * 0.98;
          const double c = domain_curve_lower(R, H, M);
          if (c < cv.c_origin)
            CHECK(std::fabs(turning_radius(H, c, Family::SigmaPlus, M) - R) < 1e-10 * M);
        }
        {
          const double R = frac * cv.r_cyl_tilde;
          const double c = domain_curve_upper(R, H, M);
          CHECK(std::fabs(turning_radius(H, c, Family::TildeSigmaPlus, M) - R) < 1e-10 * M);
        }
        {
          const double R = cv.r_cyl_tilde + frac * (2.0 * M - cv.r_cyl_tilde) * 0.98;
          const double c = domain_curve_upper(R, H, M);
          if (c > cv.c_origin)
            CHECK(std::fabs(turning_radius(H, c, Family::TildeSigmaMinus, M) - R) < 1e-10 * M);
        }
      }
    }
  }
  SECTION("small c limit of the decreasing branch") {
    // as c -> 0^- the SigmaMinus turning radius collapses toward r = 0
    double prev = 1.0;
    for (const double c : {-1e-2, -1e-4, -1e-6}) {
      const double R = turning_radius(0.0, c, Family::SigmaMinus, 1.0);
      CHECK(R < prev);
      prev = R;
    }
    CHECK(prev < 1e-4);
  }
  SECTION("rejections") {
    const CriticalValues cv = critical_values(0.1, M);
    CHECK_THROWS_AS(turning_radius(0.1, 0.5, Family::SigmaMinus, M), std::domain_error);
    CHECK_THROWS_AS(turning_radius(0.1, cv.c_min - 1.0, Family::SigmaMinus, M), std::domain_error);
    CHECK_THROWS_AS(turning_radius(0.1, cv.c_origin, Family::SigmaPlus, M), std::domain_error);
    CHECK(turning_radius(0.1, cv.c_origin, Family::TildeSigmaMinus, M) == 2.0 * M);
  }
}

TEST_CASE("slope ratios") {
  const double M = 1.0;
  // vanishing numerator on the maximal slice
  CHECK(slope_ratio(Region::I, 5.0, 0.0, 0.0, M) == 0.0);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> rext(2.0 * M + 1e-3, 15.0);
  std::uniform_real_distribution<double> cdist(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const double r = rext(rng);
    const double H = cdist(rng) * 0.3;
    const double c = cdist(rng);
    // exterior ratios of the two exteriors are exact negations at equal c
    CHECK(slope_ratio(Region::I, r, H, c, M) ==
          Catch::Approx(-slope_ratio(Region::Iprime, r, H, c, M)).margin(1e-14));
  }
  CHECK_THROWS_AS(slope_ratio(Region::I, 2.0 * M, 0.1, 0.0, M), std::domain_error);
  CHECK_THROWS_AS(slope_ratio(Region::II, 3.0 * M, 0.1, 0.0, M), std::domain_error);
}

TEST_CASE("mass scaling") {
  // lengths scale as M, the constant c as M^2, H as 1/M
  const double M = 2.7;
  const CriticalValues unit = critical_values(0.2, 1.0);
  const CriticalValues scaled = critical_values(0.2 / M, M);
  CHECK(scaled.r_cyl_sigma == Catch::Approx(M * unit.r_cyl_sigma).epsilon(1e-12));
  CHECK(scaled.c_min == Catch::Approx(M * M * unit.c_min).epsilon(1e-12));
  CHECK(scaled.c_max == Catch::Approx(M * M * unit.c_max).epsilon(1e-12));
  CHECK(scaled.c_origin == Catch::Approx(M * M * unit.c_origin).epsilon(1e-12));
}
