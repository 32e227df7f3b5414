#include "repi/counterexamples.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "repi/numerics.hpp"
#include "repi/renyi.hpp"
#include "repi/specfun.hpp"

namespace repi {

namespace {

constexpr double kPi = std::numbers::pi;

using specfun::digamma;
using specfun::log_gamma;

bool differentiable(const AnalyticDensity& d) {
  return !std::holds_alternative<Uniform>(d.family) &&
         !std::holds_alternative<Triangle>(d.family);
}

// Samples a density on a window stretched to the next multiple of the
// required spacing, so two grids can share dx for convolution.
GridDensity discretize_matched(const AnalyticDensity& d, const Window& w,
                               double dx) {
  int n = static_cast<int>(std::ceil(w.length() / dx - 1e-9)) + 1;
  if (n < 16) n = 16;
  const double extra = (n - 1) * dx - w.length();
  return discretize(d, w.lo - 0.5 * extra, w.hi + 0.5 * extra, n);
}

double grid_weighted_integral(const GridDensity& g,
                              const std::vector<double>& deriv, double r) {
  // int f'^2 f^{r-2}; nodes with f = 0 carry no mass and are skipped, which
  // matters for r < 2 where f^{r-2} diverges at a support edge.
  std::vector<double> tmp(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double f = g.values()[i];
    tmp[i] = (f > 0.0) ? deriv[i] * deriv[i] * std::pow(f, r - 2.0) : 0.0;
  }
  return integrate(tmp, g.dx());
}

double grid_power_integral(const GridDensity& g, double r) {
  std::vector<double> tmp(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    tmp[i] = std::pow(g.values()[i], r);
  return integrate(tmp, g.dx());
}

}  // namespace

GridDensity convolved_pair_grid(const AnalyticDensity& fx,
                                const AnalyticDensity& fy, int grid_n) {
  const Window wx = default_window(fx);
  const Window wy = default_window(fy);
  GridDensity gx, gy;
  if (wx.length() >= wy.length()) {
    gx = discretize(fx, wx.lo, wx.hi, grid_n);
    gy = discretize_matched(fy, wy, gx.dx());
  } else {
    gy = discretize(fy, wy.lo, wy.hi, grid_n);
    gx = discretize_matched(fx, wx, gy.dx());
  }
  return convolve(gx, gy);
}

InequalityReport epi_check(const AnalyticDensity& fx, const AnalyticDensity& fy,
                           double r, double alpha, const EpiOptions& opts) {
  if (!(r > 1.0)) throw std::domain_error("epi_check: requires r > 1");
  if (!(alpha > 0.0)) throw std::domain_error("epi_check: requires alpha > 0");
  const GridDensity conv = convolved_pair_grid(fx, fy, opts.grid_n);

  const RenyiOrder order = RenyiOrder::finite(r);
  const double n_conv = entropy_power(conv, order);
  const double nx = entropy_power(fx, order);
  const double ny = entropy_power(fy, order);
  const double lhs = std::pow(n_conv, alpha);
  const double rhs = std::pow(nx, alpha) + std::pow(ny, alpha);
  const double tol = opts.tol_rel * rhs;

  auto rep = InequalityReport::make(lhs, rhs, tol);
  rep.context["x"] = describe(fx);
  rep.context["y"] = describe(fy);
  rep.context["r"] = format_double(r);
  rep.context["alpha"] = format_double(alpha);
  rep.context["grid_n"] = std::to_string(opts.grid_n);
  rep.context["N_x"] = format_double(nx);
  rep.context["N_y"] = format_double(ny);
  rep.context["N_conv"] = format_double(n_conv);
  return rep;
}

double nash_functional(const AnalyticDensity& d, double r, int grid_n) {
  if (!(r > 1.0)) throw std::domain_error("nash_functional: requires r > 1");
  if (!differentiable(d))
    throw std::domain_error("nash_functional: density has no derivative");
  if (const auto* e = std::get_if<ExpPower>(&d.family)) {
    // 4 Gamma(1/p) Gamma(2-1/p) r^{2r/(p(r-1)) - 1}; scale invariant.
    const double p = e->p;
    return std::exp(std::log(4.0) + log_gamma(1.0 / p) + log_gamma(2.0 - 1.0 / p) +
                    (2.0 * r / (p * (r - 1.0)) - 1.0) * std::log(r));
  }
  return nash_functional_quadrature(d, r, grid_n);
}

double nash_functional_quadrature(const AnalyticDensity& d, double r,
                                  int grid_n) {
  if (!(r > 1.0)) throw std::domain_error("nash_functional: requires r > 1");
  if (!differentiable(d))
    throw std::domain_error("nash_functional: density has no derivative");
  const GridDensity g = discretize(d, grid_n);
  const std::vector<double> df = derivative(g);
  const double i_power = grid_power_integral(g, r);
  const double i_grad = grid_weighted_integral(g, df, r);
  return r * std::pow(i_power, (1.0 + r) / (1.0 - r)) * i_grad;
}

double nash_threshold(double r) {
  if (!(r > 1.0)) throw std::domain_error("nash_threshold: requires r > 1");
  return 2.0 * kPi * std::pow(r, 1.0 / (r - 1.0));
}

double nash_criterion(double p, double r) {
  if (!(p > 1.0)) throw std::domain_error("nash_criterion: requires p > 1");
  if (!(r > 1.0)) throw std::domain_error("nash_criterion: requires r > 1");
  if (p == 2.0) return 2.0 * kPi;  // exactly, for every r
  return std::exp(std::log(4.0) -
                  r * (p - 2.0) / (p * (r - 1.0)) * std::log(r) +
                  log_gamma(1.0 / p) + log_gamma(2.0 - 1.0 / p));
}

double nash_criterion_slope(double x, double r) {
  if (!(x > 0.0 && x < 2.0))
    throw std::domain_error("nash_criterion_slope: requires 0 < x < 2");
  if (!(r > 1.0)) throw std::domain_error("nash_criterion_slope: requires r > 1");
  return 2.0 * r / (r - 1.0) * std::log(r) + digamma(x) - digamma(2.0 - x);
}

double nash_criterion_slope_at_half(double r) {
  if (!(r > 1.0))
    throw std::domain_error("nash_criterion_slope_at_half: requires r > 1");
  return 2.0 * r / (r - 1.0) * std::log(r) - 2.0;
}

std::optional<double> find_violating_p(double r, double p_max,
                                       double margin_rel) {
  if (!(r > 1.0)) throw std::domain_error("find_violating_p: requires r > 1");
  if (!(p_max > 2.0)) throw std::domain_error("find_violating_p: requires p_max > 2");
  const double threshold = 2.0 * kPi * (1.0 - margin_rel);
  const int kScan = 256;
  double prev = 2.0;
  for (int i = 1; i <= kScan; ++i) {
    const double p = 2.0 + (p_max - 2.0) * static_cast<double>(i) / kScan;
    if (nash_criterion(p, r) < threshold) {
      // Bisect the crossing between the last conforming point and here.
      double lo = prev, hi = p;
      while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        if (nash_criterion(mid, r) < threshold)
          hi = mid;
        else
          lo = mid;
      }
      return hi;
    }
    prev = p;
  }
  return std::nullopt;
}

HeatExpansionReport heat_expansion_check(const AnalyticDensity& d, double r,
                                         double t, int grid_n) {
  if (!(r > 1.0)) throw std::domain_error("heat_expansion_check: requires r > 1");
  if (!(t > 0.0)) throw std::domain_error("heat_expansion_check: requires t > 0");
  if (!differentiable(d))
    throw std::domain_error("heat_expansion_check: density has no derivative");

  const GridDensity g = discretize(d, grid_n);
  const RenyiOrder order = RenyiOrder::finite(r);
  const double n0 = entropy_power(g, order);
  const double n1 = entropy_power(heat_evolve(g, t), order);

  const double i_power = power_integral(d, r).value_or(grid_power_integral(g, r));
  double i_grad;
  if (auto closed = gradient_power_integral(d, r)) {
    i_grad = *closed;
  } else {
    i_grad = grid_weighted_integral(g, derivative(g), r);
  }

  HeatExpansionReport rep;
  rep.numeric_slope = (n1 - n0) / t;
  rep.analytic_slope = r * std::pow(i_power, (1.0 + r) / (1.0 - r)) * i_grad;
  rep.rel_err = std::abs(rep.numeric_slope - rep.analytic_slope) /
                std::abs(rep.analytic_slope);
  return rep;
}

double nash_form_constant(double r) {
  if (!(r > 1.0)) throw std::domain_error("nash_form_constant: requires r > 1");
  return 2.0 / (kPi * std::pow(r, r / (r - 1.0)));
}

double sharp_nash_constant_1d() { return 27.0 / (16.0 * kPi * kPi); }

InequalityReport nash_form_check(const AnalyticDensity& d, double r,
                                 int grid_n, double tol_rel) {
  if (!(r > 1.0)) throw std::domain_error("nash_form_check: requires r > 1");
  if (!differentiable(d))
    throw std::domain_error("nash_form_check: density has no derivative");

  const GridDensity g = discretize(d, grid_n);
  const double dx = g.dx();
  std::vector<double> u(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    u[i] = std::pow(g.values()[i], 0.5 * r);
  const std::vector<double> du = derivative(u, dx);

  std::vector<double> tmp(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) tmp[i] = u[i] * u[i];
  const double int_u2 = integrate(tmp, dx);  // = int f^r
  for (std::size_t i = 0; i < g.size(); ++i) tmp[i] = du[i] * du[i];
  const double int_du2 = integrate(tmp, dx);
  const double int_f = integrate(g.values(), dx);  // = int u^{2/r}

  const double lower_side = std::pow(int_u2, (r + 1.0) / (r - 1.0));
  const double k_r = nash_form_constant(r);
  const double bound_side =
      k_r * int_du2 * std::pow(int_f, 2.0 * r / (r - 1.0));

  auto rep = InequalityReport::make(bound_side, lower_side,
                                    tol_rel * lower_side);
  rep.context["orientation"] = "bound_side >= power_side";
  rep.context["K_r"] = format_double(k_r);
  rep.context["int_u2"] = format_double(int_u2);
  rep.context["int_du2"] = format_double(int_du2);
  if (r == 2.0) {
    const double sharp = sharp_nash_constant_1d();
    const double sharp_side =
        sharp * int_du2 * std::pow(int_f, 2.0 * r / (r - 1.0));
    rep.context["sharp_constant"] = format_double(sharp);
    rep.context["sharp_bound_side"] = format_double(sharp_side);
    rep.context["holds_with_sharp_constant"] =
        (sharp_side >= lower_side - tol_rel * lower_side) ? "true" : "false";
  }
  return rep;
}

double triangle_alpha_lower(double r) {
  if (!(r > 1.0)) throw std::domain_error("triangle_alpha_lower: requires r > 1");
  return (r - 1.0) * std::log(2.0) / (2.0 * std::log(0.5 * (r + 1.0)));
}

}  // namespace repi
