#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "repi/counterexamples.hpp"
#include "repi/renyi.hpp"

using namespace repi;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("epi_check: uniform pair at alpha = 1.5") {
  const AnalyticDensity u(Uniform{0.0, 1.0});
  const auto rep = epi_check(u, u, 2.0, 1.5);
  CHECK(rep.holds);
  CHECK(rep.rhs == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rep.lhs == doctest::Approx(3.375).epsilon(1e-4));
}

TEST_CASE("epi_check: Gaussian pair is an equality at alpha = 1") {
  const AnalyticDensity g(Gaussian{1.0});
  const auto rep = epi_check(g, g, 2.0, 1.0);
  CHECK(rep.holds);
  CHECK(rep.rhs == doctest::Approx(8.0 * kPi).epsilon(1e-12));
  CHECK(std::abs(rep.slack) <= 1e-6 * rep.rhs);
}

TEST_CASE("epi_check: beta pair violates alpha = 1 at both resolutions") {
  const AnalyticDensity q(QGaussianBeta{});
  for (const int n : {1 << 13, 1 << 15}) {
    EpiOptions opts;
    opts.grid_n = n;
    const auto rep = epi_check(q, q, 2.0, 1.0, opts);
    CAPTURE(n);
    CHECK(!rep.holds);
    CHECK(rep.rhs == doctest::Approx(50.0 / 9.0).epsilon(1e-12));
    // Frozen from the convolution oracle: N_2(X+Y) ~ 5.31482.
    CHECK(rep.lhs == doctest::Approx(5.31482).epsilon(1e-4));
    // The violation dwarfs the numerical error.
    CHECK(rep.slack < -0.2);
  }
}

TEST_CASE("epi_check: cross-family pair at the guaranteed alpha") {
  const auto rep = epi_check(AnalyticDensity(Uniform{0.0, 1.0}),
                             AnalyticDensity(Gaussian{0.5}), 2.0, 1.5);
  CHECK(rep.holds);
}

TEST_CASE("epi_check validation") {
  const AnalyticDensity u(Uniform{0.0, 1.0});
  CHECK_THROWS_AS(epi_check(u, u, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(epi_check(u, u, 2.0, 0.0), std::domain_error);
}

TEST_CASE("nash functional closed form for exponential powers") {
  // 4 Gamma(1/p) Gamma(2-1/p) r^{2r/(p(r-1)) - 1}; at p = 2 equals the
  // Gaussian threshold.
  CHECK(nash_functional(AnalyticDensity(ExpPower{2.0}), 2.0) ==
        doctest::Approx(4.0 * kPi).epsilon(1e-12));
  for (const double r : {1.5, 2.0, 3.0})
    CHECK(nash_functional(AnalyticDensity(ExpPower{2.0}), r) ==
          doctest::Approx(nash_threshold(r)).epsilon(1e-12));
  // Scale invariance of the closed form.
  CHECK(nash_functional(AnalyticDensity(ExpPower{2.5}, 1.0, 3.0), 2.0) ==
        doctest::Approx(nash_functional(AnalyticDensity(ExpPower{2.5}), 2.0))
            .epsilon(1e-12));
}

TEST_CASE("nash functional quadrature matches the closed form") {
  for (const double p : {2.0, 2.5}) {
    for (const double r : {1.5, 2.0, 3.0}) {
      CAPTURE(p);
      CAPTURE(r);
      const AnalyticDensity d(ExpPower{p});
      const double closed = nash_functional(d, r);
      const double quad = nash_functional_quadrature(d, r);
      CHECK(std::abs(quad - closed) <= 1e-5 * closed);
    }
  }
}

TEST_CASE("nash functional: Gaussian saturates the threshold") {
  for (const double sigma : {0.5, 1.0, 2.0}) {
    for (const double r : {1.5, 2.0, 3.0}) {
      CAPTURE(sigma);
      CAPTURE(r);
      const double quad =
          nash_functional(AnalyticDensity(Gaussian{sigma}), r);
      CHECK(std::abs(quad - nash_threshold(r)) <= 1e-5 * nash_threshold(r));
    }
  }
}

TEST_CASE("nash functional rejects non-differentiable densities") {
  CHECK_THROWS_AS(nash_functional(AnalyticDensity(Uniform{0.0, 1.0}), 2.0),
                  std::domain_error);
  CHECK_THROWS_AS(nash_functional(AnalyticDensity(Triangle{}), 2.0),
                  std::domain_error);
}

TEST_CASE("criterion G(p, r)") {
  for (const double r : {1.5, 2.0, 3.0, 10.0})
    CHECK(nash_criterion(2.0, r) == 2.0 * kPi);  // exact by construction
  // Decreasing through p = 2.
  const double h = 1e-4;
  CHECK((nash_criterion(2.0 + h, 2.0) - nash_criterion(2.0, 2.0)) / h < 0.0);
  CHECK(nash_criterion(2.2, 2.0) < 2.0 * kPi);
}

TEST_CASE("criterion slope at one half") {
  CHECK(nash_criterion_slope_at_half(2.0) ==
        doctest::Approx(4.0 * std::log(2.0) - 2.0).epsilon(1e-15));
  CHECK(nash_criterion_slope_at_half(2.0) == doctest::Approx(0.77259).epsilon(1e-4));
  CHECK(nash_criterion_slope_at_half(2.0) > 0.0);
  // r -> 1+ limit approaches 0 from above.
  const double near_one = nash_criterion_slope_at_half(1.001);
  CHECK(near_one > 0.0);
  CHECK(near_one < 0.01);
  // Digamma route agrees with the closed form.
  for (const double r : {1.2, 1.5, 2.0, 3.0, 7.0})
    CHECK(std::abs(nash_criterion_slope(0.5, r) - nash_criterion_slope_at_half(r)) <=
          1e-9);
}

TEST_CASE("find_violating_p") {
  const auto p2 = find_violating_p(2.0, 3.0);
  REQUIRE(p2.has_value());
  CHECK(*p2 > 2.0);
  CHECK(*p2 < 3.0);
  CHECK(nash_criterion(*p2, 2.0) < 2.0 * kPi);

  const auto p15 = find_violating_p(1.5, 3.0);
  REQUIRE(p15.has_value());
  CHECK(nash_criterion(*p15, 1.5) < 2.0 * kPi);

  CHECK(!find_violating_p(2.0, 2.0000001).has_value());
  CHECK_THROWS_AS(find_violating_p(2.0, 1.5), std::domain_error);
}

TEST_CASE("heat expansion: Gaussian slope equals the threshold") {
  const auto rep = heat_expansion_check(AnalyticDensity(Gaussian{1.0}), 2.0, 1e-3);
  CHECK(rep.analytic_slope == doctest::Approx(4.0 * kPi).epsilon(1e-5));
  CHECK(rep.rel_err <= 5e-3);
}

TEST_CASE("heat expansion: exponential power above 2 undershoots the Gaussian") {
  const auto rep = heat_expansion_check(AnalyticDensity(ExpPower{2.2}), 2.0, 1e-3);
  CHECK(rep.analytic_slope < 4.0 * kPi);
  CHECK(rep.rel_err <= 5e-3);
}

TEST_CASE("heat expansion: halving t halves the defect") {
  const AnalyticDensity d(ExpPower{2.2});
  const auto coarse = heat_expansion_check(d, 2.0, 4e-3);
  const auto fine = heat_expansion_check(d, 2.0, 2e-3);
  const double defect_coarse =
      std::abs(coarse.numeric_slope - coarse.analytic_slope);
  const double defect_fine = std::abs(fine.numeric_slope - fine.analytic_slope);
  CHECK(defect_coarse / defect_fine >= 1.5);
  CHECK(defect_coarse / defect_fine <= 3.0);
}

TEST_CASE("nash form constants") {
  CHECK(nash_form_constant(2.0) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-15));
  CHECK(nash_form_constant(2.0) == doctest::Approx(0.15915).epsilon(1e-4));
  CHECK(sharp_nash_constant_1d() == doctest::Approx(0.170978).epsilon(1e-5));
  CHECK(nash_form_constant(2.0) < sharp_nash_constant_1d());
}

TEST_CASE("nash form: equality for the Gaussian at r = 2") {
  const auto rep = nash_form_check(AnalyticDensity(Gaussian{1.0}), 2.0);
  CHECK(rep.holds);
  CHECK(std::abs(rep.slack) <= 1e-5 * rep.rhs);
}

TEST_CASE("nash form: exponential power fails with K_2, holds with the sharp constant") {
  const auto rep = nash_form_check(AnalyticDensity(ExpPower{2.2}), 2.0);
  CHECK(!rep.holds);
  CHECK(rep.context.at("holds_with_sharp_constant") == "true");
}

TEST_CASE("triangle alpha lower bound") {
  CHECK(triangle_alpha_lower(3.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(triangle_alpha_lower(2.0) ==
        doctest::Approx(std::log(2.0) / (2.0 * std::log(1.5))).epsilon(1e-14));
  CHECK(triangle_alpha_lower(2.0) == doctest::Approx(0.8548).epsilon(1e-4));
}

TEST_CASE("uniform pair is an equality case at the lower-bound alpha") {
  const AnalyticDensity u(Uniform{0.0, 1.0});
  for (const double r : {1.5, 2.0, 3.0}) {
    const auto rep = epi_check(u, u, r, triangle_alpha_lower(r));
    CAPTURE(r);
    CHECK(std::abs(rep.slack) <= 1e-6);
    CHECK(rep.rhs == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("alpha-EPI holds at alpha = (r+1)/2 on a density sample") {
  const std::vector<AnalyticDensity> ds = {
      AnalyticDensity(Gaussian{1.0}),
      AnalyticDensity(Uniform{0.0, 1.0}, 0.0, 2.0),
      AnalyticDensity(ExpPower{2.5}),
      AnalyticDensity(QGaussianBeta{}, 0.0, 0.5),
  };
  for (const auto& a : ds) {
    for (const auto& b : ds) {
      for (const double r : {1.5, 3.0}) {
        CAPTURE(describe(a));
        CAPTURE(describe(b));
        CAPTURE(r);
        const auto rep = epi_check(a, b, r, 0.5 * (r + 1.0));
        CHECK(rep.holds);
      }
    }
  }
}
