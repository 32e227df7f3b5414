#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "repi/clt.hpp"
#include "repi/density.hpp"

using namespace repi;

TEST_CASE("edgeworth coefficient") {
  // Symmetric case reduces to (r-1)/(8r) gamma4.
  for (const double r : {1.5, 2.0, 3.0})
    for (const double g4 : {-1.2, 0.5})
      CHECK(edgeworth_coefficient(0.0, g4, r) ==
            doctest::Approx((r - 1.0) / (8.0 * r) * g4).epsilon(1e-14));
  // Shannon case r = 1: gamma3^2 / 12.
  CHECK(edgeworth_coefficient(1.0, 0.0, 1.0) ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(edgeworth_coefficient(0.0, 0.0, 2.0) == 0.0);
  CHECK_THROWS_AS(edgeworth_coefficient(0.0, 1.0, 0.5), std::domain_error);
}

TEST_CASE("negative-B threshold") {
  const auto r0 = negative_b_threshold(1.0, 0.0);
  REQUIRE(r0.has_value());
  CHECK(*r0 == doctest::Approx(2.0).epsilon(1e-14));
  // B_r < 0 beyond the threshold, = 0 at it, > 0 below it.
  CHECK(edgeworth_coefficient(1.0, 0.0, *r0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(edgeworth_coefficient(1.0, 0.0, 3.0) < 0.0);
  CHECK(edgeworth_coefficient(1.0, 0.0, 1.5) > 0.0);
  // gamma4 >= (2/3) gamma3^2: no sign change, B_r > 0 for r > 1.
  CHECK(!negative_b_threshold(1.0, 1.0).has_value());
  for (const double r : {1.5, 2.0, 5.0})
    CHECK(edgeworth_coefficient(1.0, 1.0, r) > 0.0);
  CHECK_THROWS_AS(negative_b_threshold(0.0, 1.0), std::domain_error);
}

TEST_CASE("standardize") {
  const AnalyticDensity su = standardize(AnalyticDensity(Uniform{0.0, 1.0}));
  CHECK(mean(su) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(variance(su) == doctest::Approx(1.0).epsilon(1e-14));
  // Support becomes [-sqrt(3), sqrt(3)].
  const Window w = default_window(su);
  CHECK(w.lo == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));
  CHECK(w.hi == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  const AnalyticDensity sg = standardize(AnalyticDensity(Gaussian{2.5}, 3.0, 2.0));
  CHECK(mean(sg) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(variance(sg) == doctest::Approx(1.0).epsilon(1e-14));

  // q-Gaussian has variance 1/5, so the standardized scale is sqrt(5).
  const AnalyticDensity sq = standardize(AnalyticDensity(QGaussianBeta{}));
  CHECK(sq.scale == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("clt_scan validates k_max") {
  const AnalyticDensity u(Uniform{0.0, 1.0});
  CHECK_THROWS_AS(clt_scan(u, 2.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(clt_scan(u, 2.0, 512), std::invalid_argument);
  CHECK_THROWS_AS(clt_scan(u, 0.5, 16), std::domain_error);
}

TEST_CASE("Gaussian start is a fixed point") {
  const CltScanResult scan = clt_scan(AnalyticDensity(Gaussian{1.0}), 2.0, 16);
  REQUIRE(scan.ks.size() == 5);
  for (const double d : scan.deltas) CHECK(std::abs(d) <= 1e-7);
  CHECK(scan.b_analytic == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("Gaussian anchor entropy") {
  const CltScanResult scan = clt_scan(AnalyticDensity(Gaussian{1.0}), 2.0, 2);
  CHECK(scan.h_gaussian ==
        doctest::Approx(0.5 * std::log(2.0 * std::numbers::pi *
                                       std::pow(2.0, 1.0 / (2.0 - 1.0))))
            .epsilon(1e-14));
}

TEST_CASE("uniform start at r = 2 approaches the Edgeworth constant") {
  const CltScanResult scan = clt_scan(AnalyticDensity(Uniform{0.0, 1.0}), 2.0, 64);
  CHECK(scan.b_analytic == doctest::Approx(-3.0 / 40.0).epsilon(1e-13));
  const double k_delta = scan.ks.back() * scan.deltas.back();
  CHECK(std::abs(k_delta - scan.b_analytic) <= 0.2 * std::abs(scan.b_analytic));
  CHECK(std::abs(scan.slope_estimate - scan.b_analytic) <=
        0.2 * std::abs(scan.b_analytic));
  // Eventual monotonicity failure: h_r(Z_k) exceeds h_r(Z).
  CHECK(scan.deltas.back() < 0.0);
}

TEST_CASE("Shannon control is non-decreasing along the doubling sequence") {
  const CltScanResult scan = clt_scan(AnalyticDensity(Uniform{0.0, 1.0}), 1.0, 64);
  for (std::size_t i = 1; i < scan.h_values.size(); ++i)
    CHECK(scan.h_values[i] >= scan.h_values[i - 1] - 1e-6);
  // Deltas stay positive and approach zero from above in the Shannon case.
  CHECK(scan.deltas.back() > 0.0);
  CHECK(scan.deltas.back() < scan.deltas.front());
}

TEST_CASE("slope sign matches the Edgeworth constant") {
  for (const auto& d :
       {AnalyticDensity(Uniform{0.0, 1.0}), AnalyticDensity(QGaussianBeta{})}) {
    for (const double r : {1.5, 2.0, 3.0}) {
      CAPTURE(describe(d));
      CAPTURE(r);
      const CltScanResult scan = clt_scan(d, r, 16);
      REQUIRE(std::abs(scan.b_analytic) > 0.01);
      CHECK(std::signbit(scan.slope_estimate) == std::signbit(scan.b_analytic));
    }
  }
}

TEST_CASE("scan output shape") {
  const CltScanResult scan = clt_scan(AnalyticDensity(Uniform{0.0, 1.0}), 2.0, 8);
  REQUIRE(scan.ks.size() == 4);
  CHECK(scan.ks[0] == 1);
  CHECK(scan.ks[3] == 8);
  CHECK(scan.h_values.size() == scan.ks.size());
  CHECK(scan.deltas.size() == scan.ks.size());
  for (std::size_t i = 0; i < scan.ks.size(); ++i)
    CHECK(scan.deltas[i] ==
          doctest::Approx(scan.h_gaussian - scan.h_values[i]).epsilon(1e-14));
}
