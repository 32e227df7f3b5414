#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "repi/counterexamples.hpp"
#include "repi/renyi.hpp"
#include "repi/young.hpp"

using namespace repi;

TEST_CASE("conjugate exponents") {
  CHECK(conjugate_exponent(2.0) == doctest::Approx(2.0));
  CHECK(std::isinf(conjugate_exponent(1.0)));
  CHECK(conjugate_exponent(4.0 / 3.0) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(conjugate_exponent(std::numeric_limits<double>::infinity()) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(conjugate_exponent(0.9), std::domain_error);
}

TEST_CASE("sharp Young factor c_alpha") {
  CHECK(sharp_young_c(1.0) == doctest::Approx(1.0));
  CHECK(sharp_young_c(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  // (4/3)^{3/4} / 4^{1/4}
  CHECK(sharp_young_c(4.0 / 3.0) ==
        doctest::Approx(std::pow(4.0 / 3.0, 0.75) / std::pow(4.0, 0.25))
            .epsilon(1e-13));
  CHECK(sharp_young_c(4.0 / 3.0) == doctest::Approx(0.8774).epsilon(1e-4));
  CHECK_THROWS_AS(sharp_young_c(0.5), std::domain_error);
}

TEST_CASE("YoungExponents admissibility") {
  CHECK_NOTHROW(YoungExponents::from_pqr(4.0 / 3.0, 4.0 / 3.0, 2.0));
  CHECK_THROWS_AS(YoungExponents::from_pqr(2.0, 2.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(YoungExponents::from_pqr(0.5, 2.0, 2.0), std::domain_error);
  const YoungExponents e = YoungExponents::from_dual_fraction(0.25, 2.0);
  CHECK(e.p == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(e.p_conj == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(e.q == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("young constant values") {
  CHECK(young_constant(YoungExponents::from_pqr(1.0, 1.0, 1.0)) ==
        doctest::Approx(1.0));
  // p = q = 2r/(r+1): C = 2^{2/r} r (r+1)^{-(r+1)/r}.
  for (const double r : {1.5, 2.0, 3.0, 5.0}) {
    const double p = 2.0 * r / (r + 1.0);
    const double c = young_constant(YoungExponents::from_pqr(p, p, r));
    const double closed =
        std::pow(2.0, 2.0 / r) * r * std::pow(r + 1.0, -(r + 1.0) / r);
    CHECK(c == doctest::Approx(closed).epsilon(1e-12));
  }
  CHECK(young_constant(YoungExponents::from_pqr(4.0 / 3.0, 4.0 / 3.0, 2.0)) ==
        doctest::Approx(4.0 / std::pow(3.0, 1.5)).epsilon(1e-12));
  // p = r forces q = 1 and C = 1.
  for (const double r : {1.5, 2.0, 4.0})
    CHECK(young_constant(YoungExponents::from_pqr(r, 1.0, r)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("C <= 1 for random admissible triples") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double r = 1.0 + 9.0 * u(rng);
    const double c = (r - 1.0) / r;
    const double x = c * u(rng);
    const double cval = young_constant(YoungExponents::from_dual_fraction(x, r));
    CHECK(cval <= 1.0 + 1e-12);
    CHECK(cval > 0.0);
  }
}

TEST_CASE("convolution power bound at the symmetric exponents") {
  // x = 1/p' = 1/(2r') gives the equal-power constant.
  const YoungExponents e = YoungExponents::from_dual_fraction(0.25, 2.0);
  CHECK(convolution_power_bound(1.0, 1.0, e) ==
        doctest::Approx(27.0 / 16.0).epsilon(1e-12));
  CHECK_THROWS_AS(convolution_power_bound(0.0, 1.0, e), std::domain_error);
  CHECK_THROWS_AS(
      convolution_power_bound(1.0, 1.0, YoungExponents::from_pqr(1.0, 1.0, 1.0)),
      std::domain_error);
}

TEST_CASE("Gaussian pair sanity: bound is valid but not tight") {
  const double n = 4.0 * std::numbers::pi;
  const OptimizedBound opt = optimize_exponents(n, n, 2.0);
  CHECK(opt.bound == doctest::Approx(27.0 / 16.0 * n).epsilon(1e-9));
  CHECK(opt.bound <= 2.0 * n);  // true value N_2(X+Y) = 8*pi
}

TEST_CASE("optimizer matches the closed constant at equal powers") {
  for (const double r : {1.5, 2.0, 3.0, 5.0}) {
    const OptimizedBound opt = optimize_exponents(1.0, 1.0, r);
    CHECK(std::abs(opt.bound - equal_power_constant(r)) <= 1e-9);
    // Maximizer at 1/p' = 1/(2r') = (r-1)/(2r).
    CHECK(std::abs(opt.x - 0.5 * (r - 1.0) / r) <= 1e-9);
    CHECK(opt.exponents.p_conj ==
          doctest::Approx(2.0 * r / (r - 1.0)).epsilon(1e-9));
  }
}

TEST_CASE("optimizer dominates fixed exponents for unequal powers") {
  const double r = 2.0;
  const OptimizedBound opt = optimize_exponents(1.0, 1e6, r);
  CHECK(opt.bound > 0.0);
  const double mid = convolution_power_bound(
      1.0, 1e6, YoungExponents::from_dual_fraction(0.25, r));
  CHECK(opt.bound >= mid * (1.0 - 1e-12));
}

TEST_CASE("objective is unimodal at equal powers") {
  // Sampled bound over the admissible interval has a single local maximum.
  const double r = 2.0;
  const double c = (r - 1.0) / r;
  std::vector<double> vals;
  for (int i = 1; i < 1000; ++i) {
    const double x = c * i / 1000.0;
    vals.push_back(
        convolution_power_bound(1.0, 1.0, YoungExponents::from_dual_fraction(x, r)));
  }
  int local_maxima = 0;
  for (std::size_t i = 1; i + 1 < vals.size(); ++i)
    if (vals[i] > vals[i - 1] && vals[i] > vals[i + 1]) ++local_maxima;
  CHECK(local_maxima == 1);
}

TEST_CASE("equal power constant closed forms") {
  CHECK(equal_power_constant(2.0) == doctest::Approx(27.0 / 16.0).epsilon(1e-15));
  CHECK(equal_power_constant(3.0) ==
        doctest::Approx(std::pow(4.0 / 3.0, 1.5)).epsilon(1e-13));
  CHECK(equal_power_constant(3.0) == doctest::Approx(1.5396).epsilon(1e-4));
  CHECK(equal_power_constant(1.0001) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK_THROWS_AS(equal_power_constant(1.0), std::domain_error);
}

TEST_CASE("1 < A_r < 2 and the power test on an r-grid") {
  for (int i = 1; i <= 1000; ++i) {
    const double r = 1.0 + 49.0 * i / 1000.0;
    const double a = equal_power_constant(r);
    CHECK(a > 1.0);
    CHECK(a < 2.0);
    // alpha = (r+1)/2 suffices in the equal-power case.
    CHECK(std::pow(a, 0.5 * (r + 1.0)) >= 2.0 * (1.0 - 1e-12));
  }
}

TEST_CASE("minimal alpha from the equal-power bound") {
  CHECK(min_alpha_equal_power(2.0) ==
        doctest::Approx(std::log(2.0) / std::log(27.0 / 16.0)).epsilon(1e-14));
  CHECK(min_alpha_equal_power(2.0) == doctest::Approx(1.3247).epsilon(1e-4));
  CHECK(min_alpha_equal_power(1.001) == doctest::Approx(1.0).epsilon(1e-2));
  for (int i = 1; i <= 500; ++i) {
    const double r = 1.0 + 19.0 * i / 500.0;
    CHECK(min_alpha_equal_power(r) <= 0.5 * (r + 1.0) + 1e-12);
  }
}

TEST_CASE("alpha bracket") {
  const AlphaBracket b2 = optimal_alpha_bracket(2.0);
  CHECK(b2.lower == doctest::Approx(0.8548).epsilon(1e-4));
  CHECK(b2.upper == doctest::Approx(1.5));
  const AlphaBracket b3 = optimal_alpha_bracket(3.0);
  CHECK(b3.lower == 1.0);  // exactly: (log2/2)*2/log2
  CHECK(b3.upper == 2.0);
  for (int i = 1; i <= 500; ++i) {
    const double r = 1.0 + 49.0 * i / 500.0;
    const AlphaBracket b = optimal_alpha_bracket(r);
    CHECK(b.lower <= b.upper);
  }
  CHECK_THROWS_AS(optimal_alpha_bracket(1.0), std::domain_error);
}

TEST_CASE("optimized bound stays below the numeric convolution power") {
  const std::vector<AnalyticDensity> ds = {
      AnalyticDensity(Uniform{0.0, 1.0}),
      AnalyticDensity(Gaussian{1.0}),
      AnalyticDensity(QGaussianBeta{}),
      AnalyticDensity(ExpPower{2.5}),
  };
  for (const auto& a : ds) {
    for (const auto& b : ds) {
      const GridDensity conv = convolved_pair_grid(a, b, 1 << 12);
      for (const double r : {1.5, 2.0, 3.0}) {
        CAPTURE(describe(a));
        CAPTURE(describe(b));
        CAPTURE(r);
        const double na = entropy_power(a, RenyiOrder::finite(r));
        const double nb = entropy_power(b, RenyiOrder::finite(r));
        const double n_conv = entropy_power(conv, RenyiOrder::finite(r));
        const OptimizedBound opt = optimize_exponents(na, nb, r);
        CHECK(opt.bound <= n_conv * (1.0 + 1e-6));
      }
    }
  }
}
