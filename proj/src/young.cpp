#include "repi/young.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace repi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log c_alpha with the boundary limits log c_1 = log c_inf = 0.
double log_sharp_young_c(double alpha) {
  if (alpha < 1.0) throw std::domain_error("sharp_young_c: requires alpha >= 1");
  if (alpha == 1.0 || std::isinf(alpha)) return 0.0;
  const double conj = alpha / (alpha - 1.0);
  return std::log(alpha) / alpha - std::log(conj) / conj;
}

// 1/p' computed directly from p; exact 0 at p = 1.
double dual_fraction(double p) { return (p - 1.0) / p; }

// (1-t) log(1-t) - t log t with the 0 log 0 = 0 convention.
double phi(double t) {
  double s = 0.0;
  if (t > 0.0 && t < 1.0) s = (1.0 - t) * std::log1p(-t) - t * std::log(t);
  return s;
}

double phi_prime(double t) { return -std::log(t * (1.0 - t)) - 2.0; }

}  // namespace

double conjugate_exponent(double p) {
  if (p < 1.0) throw std::domain_error("conjugate_exponent: requires p >= 1");
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

double sharp_young_c(double alpha) { return std::exp(log_sharp_young_c(alpha)); }

YoungExponents YoungExponents::from_pqr(double p, double q, double r) {
  if (p < 1.0 || q < 1.0 || r < 1.0)
    throw std::domain_error("YoungExponents: exponents must be >= 1");
  YoungExponents e;
  e.p = p;
  e.q = q;
  e.r = r;
  e.p_conj = conjugate_exponent(p);
  e.q_conj = conjugate_exponent(q);
  e.r_conj = conjugate_exponent(r);
  const double lhs = dual_fraction(p) + dual_fraction(q);
  if (std::abs(lhs - dual_fraction(r)) > 1e-12)
    throw std::domain_error("YoungExponents: 1/p' + 1/q' = 1/r' violated");
  return e;
}

YoungExponents YoungExponents::from_dual_fraction(double x, double r) {
  if (r < 1.0) throw std::domain_error("YoungExponents: requires r >= 1");
  const double c = dual_fraction(r);
  if (x < 0.0 || x > c)
    throw std::domain_error("YoungExponents: 1/p' must lie in [0, 1/r']");
  const double y = c - x;
  YoungExponents e;
  e.p = 1.0 / (1.0 - x);
  e.q = 1.0 / (1.0 - y);
  e.r = r;
  e.p_conj = (x == 0.0) ? kInf : 1.0 / x;
  e.q_conj = (y == 0.0) ? kInf : 1.0 / y;
  e.r_conj = conjugate_exponent(r);
  return e;
}

double young_constant(const YoungExponents& e) {
  return std::exp(log_sharp_young_c(e.p) + log_sharp_young_c(e.q) -
                  log_sharp_young_c(e.r));
}

namespace {

// log(1/C) as a function of x = 1/p' at fixed r, plus the entropy-power
// weights; the bound is exp(r' * objective).
double bound_objective(double x, double c, double log_c_r, double log_nx,
                       double log_ny) {
  const double y = c - x;
  return log_c_r + phi(x) + phi(y) + x * log_nx + y * log_ny;
}

double bound_objective_deriv(double x, double c, double log_nx, double log_ny) {
  const double y = c - x;
  return phi_prime(x) - phi_prime(y) + log_nx - log_ny;
}

}  // namespace

double convolution_power_bound(double nx, double ny, const YoungExponents& e) {
  if (!(nx > 0.0 && ny > 0.0))
    throw std::domain_error("convolution_power_bound: powers must be positive");
  if (!(e.r > 1.0))
    throw std::domain_error("convolution_power_bound: requires r > 1");
  const double x = (e.p - 1.0) / e.p;
  const double y = (e.q - 1.0) / e.q;
  const double r_conj = e.r / (e.r - 1.0);
  const double log_c = log_sharp_young_c(e.p) + log_sharp_young_c(e.q) -
                       log_sharp_young_c(e.r);
  return std::exp(r_conj * (-log_c + x * std::log(nx) + y * std::log(ny)));
}

OptimizedBound optimize_exponents(double nx, double ny, double r) {
  if (!(nx > 0.0 && ny > 0.0))
    throw std::domain_error("optimize_exponents: powers must be positive");
  if (!(r > 1.0)) throw std::domain_error("optimize_exponents: requires r > 1");
  const double c = (r - 1.0) / r;
  const double log_c_r = log_sharp_young_c(r);
  const double log_nx = std::log(nx);
  const double log_ny = std::log(ny);
  const auto g = [&](double x) {
    return bound_objective(x, c, log_c_r, log_nx, log_ny);
  };

  // Coarse scan to bracket the maximum, golden section to contract, then a
  // bisection polish on the derivative for full positional accuracy.
  const double eps = 1e-9;
  const int kScan = 64;
  double best_x = c / 2.0;
  double best_g = g(best_x);
  for (int i = 1; i <= kScan; ++i) {
    const double x = c * static_cast<double>(i) / (kScan + 1);
    const double v = g(x);
    if (v > best_g) {
      best_g = v;
      best_x = x;
    }
  }
  double lo = std::max(eps, best_x - c / (kScan + 1));
  double hi = std::min(c - eps, best_x + c / (kScan + 1));
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - golden * (hi - lo);
  double x2 = lo + golden * (hi - lo);
  double g1 = g(x1), g2 = g(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * c; ++it) {
    if (g1 < g2) {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + golden * (hi - lo);
      g2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - golden * (hi - lo);
      g1 = g(x1);
    }
  }
  double x_opt = 0.5 * (lo + hi);
  // Derivative polish: the objective's derivative decreases through zero at
  // an interior maximum.
  double blo = std::max(eps, x_opt - 1e-3 * c);
  double bhi = std::min(c - eps, x_opt + 1e-3 * c);
  if (bound_objective_deriv(blo, c, log_nx, log_ny) > 0.0 &&
      bound_objective_deriv(bhi, c, log_nx, log_ny) < 0.0) {
    for (int it = 0; it < 200 && bhi - blo > 1e-17 * c; ++it) {
      const double mid = 0.5 * (blo + bhi);
      if (bound_objective_deriv(mid, c, log_nx, log_ny) > 0.0)
        blo = mid;
      else
        bhi = mid;
    }
    x_opt = 0.5 * (blo + bhi);
  }

  OptimizedBound result;
  result.x = x_opt;
  result.exponents = YoungExponents::from_dual_fraction(x_opt, r);
  result.bound = std::exp(r / (r - 1.0) * g(x_opt));
  return result;
}

double equal_power_constant(double r) {
  if (!(r > 1.0)) throw std::domain_error("equal_power_constant: requires r > 1");
  const double log_a = (-std::log(4.0) + (r + 1.0) * std::log(r + 1.0) -
                        r * std::log(r)) /
                       (r - 1.0);
  return std::exp(log_a);
}

double min_alpha_equal_power(double r) {
  if (!(r > 1.0)) throw std::domain_error("min_alpha_equal_power: requires r > 1");
  return std::log(2.0) / std::log(equal_power_constant(r));
}

AlphaBracket optimal_alpha_bracket(double r) {
  if (!(r > 1.0)) throw std::domain_error("optimal_alpha_bracket: requires r > 1");
  const double candidate =
      0.5 * std::log(2.0) * (r - 1.0) / std::log(0.5 * (r + 1.0));
  return AlphaBracket{std::min(1.0, candidate), 0.5 * (r + 1.0)};
}

}  // namespace repi
