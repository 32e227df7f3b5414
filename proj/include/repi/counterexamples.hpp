#pragma once

#include <optional>

#include "repi/density.hpp"
#include "repi/report.hpp"

namespace repi {

struct EpiOptions {
  int grid_n = 8192;
  double tol_rel = 1e-6;  // tolerance as a fraction of the right-hand side
};

// Discretizes the two densities on a shared spacing (default windows,
// stretched where needed to align) and returns the density of X + Y.
GridDensity convolved_pair_grid(const AnalyticDensity& fx,
                                const AnalyticDensity& fy, int grid_n = 8192);

// Checks N_r(X+Y)^alpha >= N_r(X)^alpha + N_r(Y)^alpha for independent X, Y
// with the given densities. The left side is computed by FFT convolution on
// a common grid; the right side from closed forms.
InequalityReport epi_check(const AnalyticDensity& fx, const AnalyticDensity& fy,
                           double r, double alpha, const EpiOptions& opts = {});

// Left side of the Nash-type inequality obtained by matching first-order
// terms of N_r along the heat semigroup:
//   r (int f^r)^{(1+r)/(1-r)} int f^{r-2} f'^2.
// Closed form for the exponential-power family (scale invariant), quadrature
// otherwise. Throws std::domain_error for families without a derivative
// (uniform, triangle).
double nash_functional(const AnalyticDensity& d, double r, int grid_n = 8192);

// Always-quadrature evaluation of the same functional (cross-check route).
double nash_functional_quadrature(const AnalyticDensity& d, double r,
                                  int grid_n = 8192);

// Right side of the same inequality: 2 pi r^{1/(r-1)}, the Gaussian value.
double nash_threshold(double r);

// The inequality specialized to exponential-power densities reduces to
// 2 pi <= G(p, r) with
//   G(p, r) = 4 r^{-r(p-2)/(p(r-1))} Gamma(1/p) Gamma(2 - 1/p).
// G(2, r) = 2 pi exactly for every r.
double nash_criterion(double p, double r);

// Derivative of log G(1/x) in x: (2r/(r-1)) log r + psi(x) - psi(2 - x).
double nash_criterion_slope(double x, double r);

// Closed form of the above at x = 1/2: (2r/(r-1)) log r - 2; positive for all
// r > 1, which forces G below 2 pi just to the right of p = 2.
double nash_criterion_slope_at_half(double r);

// Smallest p in (2, p_max] at which G(p, r) drops below 2 pi by a safety
// margin (relative, default 0.1%), located by grid scan plus bisection to
// 1e-8. Returns nullopt when no such p exists up to p_max. The margin keeps
// reported violations far above quadrature noise.
std::optional<double> find_violating_p(double r, double p_max,
                                       double margin_rel = 1e-3);

struct HeatExpansionReport {
  double numeric_slope = 0.0;   // (N_r(X_t) - N_r(X)) / t on grids
  double analytic_slope = 0.0;  // r (int f^r)^{(1+r)/(1-r)} int f^{r-2} f'^2
  double rel_err = 0.0;
};

// First-order expansion of N_r(X + sqrt(t) Z) in t, checked numerically
// against the closed-form slope.
HeatExpansionReport heat_expansion_check(const AnalyticDensity& d, double r,
                                         double t = 1e-3, int grid_n = 8192);

// Nash form in u = f^{r/2}:
//   (int u^2)^{(r+1)/(r-1)} <= K_r int u'^2 (int u^{2/r})^{2r/(r-1)},
// K_r = 2 / (pi r^{r/(r-1)}). The report is oriented lhs = bound side,
// rhs = (int u^2)^{(r+1)/(r-1)}. At r = 2 the context also compares against
// the sharp one-dimensional Nash constant 27/(16 pi^2), which is larger.
InequalityReport nash_form_check(const AnalyticDensity& d, double r,
                                 int grid_n = 8192, double tol_rel = 1e-5);

double nash_form_constant(double r);  // K_r
double sharp_nash_constant_1d();      // 27/(16 pi^2)

// Lower bound on the optimal additive exponent from the uniform pair:
// (r-1) log 2 / (2 log((r+1)/2)). The additive inequality at this alpha is
// an equality for two standard uniforms.
double triangle_alpha_lower(double r);

}  // namespace repi
