#pragma once

#include <optional>
#include <string>
#include <variant>

#include "repi/grid.hpp"

namespace repi {

// Closed-form density families on the line. Each family is stated in a
// canonical position; an affine pushforward x -> scale*x + shift is applied
// on top.

struct Gaussian {
  double sigma = 1.0;  // mean 0, density (2*pi*sigma^2)^{-1/2} exp(-x^2/(2 sigma^2))
};

struct Uniform {
  double a = 0.0, b = 1.0;  // density 1/(b-a) on [a, b]
};

struct ExpPower {
  double p = 2.0;  // density B exp(-|x|^p / p), B^{-1} = 2 p^{1/p - 1} Gamma(1/p); p >= 1
};

struct QGaussianBeta {};  // density (3/4)(1 - x^2) on |x| < 1

struct Triangle {};  // density x on [0,1], 2-x on [1,2]

using DensityFamily =
    std::variant<Gaussian, Uniform, ExpPower, QGaussianBeta, Triangle>;

struct AnalyticDensity {
  DensityFamily family;
  double shift = 0.0;
  double scale = 1.0;  // must be > 0

  AnalyticDensity() = default;
  AnalyticDensity(DensityFamily f, double shift_ = 0.0, double scale_ = 1.0);
};

struct Window {
  double lo = 0.0, hi = 0.0;
  double length() const { return hi - lo; }
};

// Cumulants of the standardized (mean 0, variance 1) pushforward, together
// with the mean/variance of the density itself. All supported families are
// symmetric, so gamma3 = 0 exactly.
struct CumulantSet {
  double mean = 0.0;
  double variance = 1.0;
  double gamma3 = 0.0;  // E X^3 after standardization
  double gamma4 = 0.0;  // E X^4 - 3 after standardization
};

// Density value at x; zero outside the support. At a jump of the density the
// inside limit is returned (e.g. a uniform evaluates to 1/(b-a) at both
// endpoints), which keeps grid quadrature of f^r exact on support-aligned
// windows.
double eval(const AnalyticDensity& d, double x);

double mean(const AnalyticDensity& d);
double variance(const AnalyticDensity& d);
double sup_density(const AnalyticDensity& d);

// Exact integral of f^r (r > 0, r != 1). Empty only for families without a
// known closed form (none of the built-in ones). Affine rule:
// a scaled density integrates to scale^{1-r} times the base value.
std::optional<double> power_integral(const AnalyticDensity& d, double r);

// Exact integral of f'(x)^2 f(x)^{r-2}; available for the exponential-power
// family only (r > 1). Scales as scale^{-(r+1)}.
std::optional<double> gradient_power_integral(const AnalyticDensity& d,
                                              double r);

// Closed-form Shannon entropy -int f log f.
double shannon_entropy_closed(const AnalyticDensity& d);

// Cumulants (closed forms; the exponential-power family uses Gamma-function
// moments).
CumulantSet cumulants(const AnalyticDensity& d);

// Default truncation window: exact support for compactly supported families,
// +/- window_factor * sigma for the Gaussian, and an exponent-based cutoff
// with tail mass far below every tolerance for exponential powers.
Window default_window(const AnalyticDensity& d, double window_factor = 12.0);

// Samples eval on n grid points spanning [lo, hi] and renormalizes to unit
// trapezoidal mass. Throws std::runtime_error if the window truncates more
// than roundoff-plus-jump-level mass.
GridDensity discretize(const AnalyticDensity& d, double lo, double hi, int n);
GridDensity discretize(const AnalyticDensity& d, int n,
                       double window_factor = 12.0);

// "family:params[@scale,shift]" round-trippable description, e.g.
// "gaussian:1", "uniform:0,1@2,0.5".
std::string describe(const AnalyticDensity& d);

}  // namespace repi
