#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "sscmc/kruskal.hpp"

using namespace sscmc;

TEST_CASE("tortoise coordinate") {
  // at r - 2M = 1 the logarithm drops out
  for (const double M : {0.5, 1.0, 2.0})
    CHECK(tortoise(2.0 * M + 1.0, M) == Catch::Approx(2.0 * M + 1.0).margin(1e-14));
  // strictly increasing outside the horizon
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> rdist(2.0 + 1e-6, 50.0);
  for (int i = 0; i < 100; ++i) {
    double a = rdist(rng), b = rdist(rng);
    if (a > b) std::swap(a, b);
    if (a == b) continue;
    CHECK(tortoise(a, 1.0) < tortoise(b, 1.0));
  }
  // diverges toward the horizon
  CHECK(tortoise(2.0 + 1e-12, 1.0) < -40.0);
  CHECK_THROWS_AS(tortoise(2.0, 1.0), std::domain_error);
}

TEST_CASE("map to the Kruskal plane") {
  SECTION("direct evaluation at t = 0, r = 3M") {
    for (const double M : {1.0, 2.0}) {
      const KruskalPoint p = to_kruskal(0.0, 3.0 * M, Region::I, M);
      const double expected = std::sqrt(M) * std::exp(0.75);
      CHECK(p.U == Catch::Approx(expected).epsilon(1e-14));
      CHECK(p.V == Catch::Approx(expected).epsilon(1e-14));
    }
  }
  SECTION("horizon limit collapses to the origin") {
    const KruskalPoint p = to_kruskal(0.0, 2.0 + 1e-13, Region::I, 1.0);
    CHECK(std::fabs(p.U) < 1e-6);
    CHECK(std::fabs(p.V) < 1e-6);
  }
  SECTION("time reversal swaps the null coordinates in region I") {
    const KruskalPoint p = to_kruskal(1.3, 4.0, Region::I, 1.0);
    const KruskalPoint q = to_kruskal(-1.3, 4.0, Region::I, 1.0);
    CHECK(p.U == Catch::Approx(q.V).epsilon(1e-14));
    CHECK(p.V == Catch::Approx(q.U).epsilon(1e-14));
  }
  SECTION("sign patterns and product identity") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> tdist(-6.0, 6.0);
    std::uniform_real_distribution<double> rint(0.05, 2.0 - 1e-3);
    std::uniform_real_distribution<double> rext(2.0 + 1e-3, 12.0);
    const double M = 1.0;
    for (int i = 0; i < 200; ++i) {
      const double t = tdist(rng);
      for (const Region reg : {Region::I, Region::II, Region::Iprime, Region::IIprime}) {
        const double r = region_is_interior(reg) ? rint(rng) : rext(rng);
        const KruskalPoint p = to_kruskal(t, r, reg, M);
        CHECK(region_of(p) == reg);
        const double uv = p.U * p.V;
        CHECK(std::fabs(uv - uv_product(r, M)) < 1e-10 * (1.0 + std::fabs(uv)));
        // X^2 - T^2 is the same product, as an identity of the derived fields
        CHECK(p.X() * p.X() - p.T() * p.T() == Catch::Approx(uv).margin(1e-12 * (1.0 + std::fabs(uv))));
        // Schwarzschild time recovered from the point
        CHECK(schwarzschild_t(p, M) == Catch::Approx(t).margin(1e-10));
      }
    }
  }
  SECTION("rejections") {
    CHECK_THROWS_AS(to_kruskal(0.0, 2.0, Region::I, 1.0), std::domain_error);
    CHECK_THROWS_AS(to_kruskal(0.0, 1.0, Region::I, 1.0), std::domain_error);
    CHECK_THROWS_AS(to_kruskal(0.0, 3.0, Region::II, 1.0), std::domain_error);
  }
}

TEST_CASE("reflection across the T-axis") {
  const KruskalPoint origin{0.0, 0.0};
  CHECK(reflect_T(origin).U == 0.0);
  CHECK(reflect_T(origin).V == 0.0);
  // points on the axis are fixed
  const KruskalPoint axis{-1.3, 1.3};
  CHECK(reflect_T(axis).U == axis.U);
  CHECK(reflect_T(axis).V == axis.V);
  // involution
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    const KruskalPoint p{d(rng), d(rng)};
    const KruskalPoint q = reflect_T(reflect_T(p));
    CHECK(q.U == p.U);
    CHECK(q.V == p.V);
    // X flips, T is preserved
    CHECK(reflect_T(p).T() == Catch::Approx(p.T()).margin(1e-14));
    CHECK(reflect_T(p).X() == Catch::Approx(-p.X()).margin(1e-14));
  }
}

TEST_CASE("radius from the UV product") {
  const double M = 1.0;
  CHECK(radius_from_uv(0.0, M) == 2.0 * M);
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> rdist(1e-3, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double r = rdist(rng);
    CHECK(radius_from_uv(uv_product(r, M), M) == Catch::Approx(r).margin(1e-11));
  }
  CHECK_THROWS_AS(radius_from_uv(-2.0 * M, M), std::domain_error);
  CHECK_THROWS_AS(radius_from_uv(-2.5 * M, M), std::domain_error);
}
