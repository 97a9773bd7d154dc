#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "sscmc/quadrature.hpp"

using namespace sscmc;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("adaptive rule on smooth integrands") {
  CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0) == Catch::Approx(1.0).margin(1e-13));
  CHECK(integrate([](double x) { return x; }, 0.0, 1.0) == Catch::Approx(0.5).margin(1e-13));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, kPi) ==
        Catch::Approx(2.0).margin(1e-11));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0) ==
        Catch::Approx(std::sqrt(kPi)).margin(1e-10));
  // orientation
  CHECK(integrate([](double x) { return x; }, 1.0, 0.0) == Catch::Approx(-0.5).margin(1e-13));
  CHECK(integrate([](double x) { return x; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("linearity within tolerance") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  auto f = [](double x) { return std::sin(3.0 * x); };
  auto g = [](double x) { return x * x - 0.5 * x; };
  QuadratureConfig cfg;
  for (int i = 0; i < 20; ++i) {
    const double alpha = coef(rng), beta = coef(rng);
    const double lhs = integrate([&](double x) { return alpha * f(x) + beta * g(x); }, -1.0, 2.0, cfg);
    const double rhs = alpha * integrate(f, -1.0, 2.0, cfg) + beta * integrate(g, -1.0, 2.0, cfg);
    CHECK(std::fabs(lhs - rhs) <= 10.0 * (cfg.abs_tol + cfg.rel_tol * std::fabs(lhs)) + 1e-12);
  }
}

TEST_CASE("interval additivity") {
  auto f = [](double x) { return std::cos(2.0 * x) + x; };
  const double whole = integrate(f, -1.0, 3.0);
  const double split = integrate(f, -1.0, 0.7) + integrate(f, 0.7, 3.0);
  CHECK(whole == Catch::Approx(split).margin(1e-10));
}

TEST_CASE("tolerance unmet raises") {
  QuadratureConfig tight;
  tight.rel_tol = 1e-15;
  tight.abs_tol = 1e-16;
  tight.max_subdivisions = 4;
  auto nasty = [](double x) { return std::sin(200.0 / (0.1 + x * x)); };
  CHECK_THROWS_AS(integrate(nasty, 0.0, 3.0, tight), QuadratureError);
}

TEST_CASE("inverse square root endpoint singularities") {
  CHECK(integrate_sqrt_singular([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                SingularEndpoint::lower) == Catch::Approx(2.0).margin(1e-11));
  const double R = 1.7;
  CHECK(integrate_sqrt_singular([&](double x) { return 1.0 / std::sqrt(R - x); }, 0.0, R,
                                SingularEndpoint::upper) ==
        Catch::Approx(2.0 * std::sqrt(R)).margin(1e-11));
  // closed-form antiderivative oracle: integral of x (1-x)^{-1/2} over [0,1]
  CHECK(integrate_sqrt_singular([](double x) { return x / std::sqrt(1.0 - x); }, 0.0, 1.0,
                                SingularEndpoint::upper) ==
        Catch::Approx(4.0 / 3.0).margin(1e-11));
  // no singularity flag falls through to the plain rule
  CHECK(integrate_sqrt_singular([](double x) { return x; }, 0.0, 1.0, SingularEndpoint::none) ==
        Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("regularized integral matches truncated integral plus analytic tail") {
  // f(x) = x / sqrt(1-x): direct integration over [0, 1-eps] plus the
  // leading tail 2 sqrt(eps) should approach the substituted value as eps
  // shrinks, with monotonically improving agreement.
  auto f = [](double x) { return x / std::sqrt(1.0 - x); };
  const double full = integrate_sqrt_singular(f, 0.0, 1.0, SingularEndpoint::upper);
  double prev = 1.0;
  for (const double eps : {1e-4, 1e-6, 1e-8}) {
    const double approx = integrate(f, 0.0, 1.0 - eps) + 2.0 * std::sqrt(eps);
    const double gap = std::fabs(full - approx);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-11);
}

TEST_CASE("non-integrable endpoint behavior is reported") {
  CHECK_THROWS_AS(integrate_sqrt_singular([](double x) { return 1.0 / x; }, 0.0, 1.0,
                                          SingularEndpoint::lower),
                  NonIntegrableError);
  CHECK_THROWS_AS(integrate_sqrt_singular(
                      [](double x) { return std::pow(1.0 - x, -1.5); }, 0.0, 1.0,
                      SingularEndpoint::upper),
                  NonIntegrableError);
}

TEST_CASE("infinite upper limit") {
  CHECK(integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0) ==
        Catch::Approx(1.0).margin(1e-10));
  CHECK(integrate_to_infinity([](double x) { return 1.0 / (x * x * x); }, 1.0) ==
        Catch::Approx(0.5).margin(1e-10));
  // combined singular lower endpoint and infinite domain:
  // integral of 1/(sqrt(x) (1+x)^2) over [0, inf) = pi/2
  auto f = [](double x) { return 1.0 / (std::sqrt(x) * (1.0 + x) * (1.0 + x)); };
  const double value = integrate_sqrt_singular(f, 0.0, 1.0, SingularEndpoint::lower) +
                       integrate_to_infinity(f, 1.0);
  CHECK(value == Catch::Approx(0.5 * kPi).margin(1e-10));
}
