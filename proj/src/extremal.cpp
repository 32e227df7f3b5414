#include "repi/extremal.hpp"

#include <cmath>
#include <stdexcept>

namespace repi::extremal {

namespace {

// t log t with 0 log 0 = 0; evaluating all power products through this
// keeps the endpoint conventions (0^0 = 1) exact.
double t_log_t(double t) { return (t > 0.0) ? t * std::log(t) : 0.0; }

void check_params(double x, double c, double beta) {
  if (!(c > 0.0 && c < 1.0))
    throw std::domain_error("extremal: requires 0 < c < 1");
  if (x < 0.0 || x > c)
    throw std::domain_error("extremal: requires 0 <= x <= c");
  (void)beta;
}

double v_value(double x, double c, double beta) {
  const double y = c - x;
  return beta * (t_log_t(1.0 - x) + t_log_t(1.0 - y)) -
         (t_log_t(x) + t_log_t(y));
}

double v_prime(double x, double c, double beta) {
  const double y = c - x;
  return -beta * (std::log1p(-x) - std::log1p(-y)) -
         (std::log(x) - std::log(y));
}

}  // namespace

double log_psi(double x, double c, double beta) {
  check_params(x, c, beta);
  return v_value(x, c, beta);
}

double psi(double x, double c, double beta) {
  return std::exp(log_psi(x, c, beta));
}

double convexity_quadratic(double x, double c, double beta) {
  check_params(x, c, beta);
  const double y = c - x;
  return beta * (2.0 - c) * x * y - c * (1.0 - x) * (1.0 - y);
}

const char* to_string(MinLocation loc) {
  switch (loc) {
    case MinLocation::endpoint: return "endpoint";
    case MinLocation::center: return "center";
    case MinLocation::other: return "other";
  }
  return "other";
}

MinimizeResult minimize_psi(double c, double beta, int n_grid) {
  if (!(c > 0.0 && c < 1.0))
    throw std::domain_error("minimize_psi: requires 0 < c < 1");
  if (n_grid < 1000)
    throw std::domain_error("minimize_psi: requires n_grid >= 1000");

  // Coarse grid over [0, c].
  double best_x = 0.0;
  double best_v = v_value(0.0, c, beta);
  for (int i = 1; i <= n_grid; ++i) {
    const double x = c * static_cast<double>(i) / n_grid;
    const double v = v_value(x, c, beta);
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  }

  // Refine an interior candidate by bisection on v' (sign change - to +
  // across a local minimum), then let the endpoints compete for the global
  // minimum; psi(0) = psi(c) exactly by symmetry.
  double argmin = best_x;
  double min_v = best_v;
  if (best_x > 0.0 && best_x < c) {
    double lo = std::max(best_x - c / n_grid, 1e-300);
    double hi = std::min(best_x + c / n_grid, c - 1e-300);
    if (v_prime(lo, c, beta) < 0.0 && v_prime(hi, c, beta) > 0.0) {
      for (int it = 0; it < 200 && hi - lo > 1e-16 * c; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (v_prime(mid, c, beta) < 0.0)
          lo = mid;
        else
          hi = mid;
      }
      argmin = 0.5 * (lo + hi);
      min_v = v_value(argmin, c, beta);
    }
  }
  const double v_end = v_value(0.0, c, beta);
  if (v_end <= min_v) {
    argmin = 0.0;
    min_v = v_end;
  }

  MinimizeResult res;
  res.argmin = argmin;
  res.min_value = std::exp(min_v);
  const double tol = 1e-6 * c;
  if (argmin <= tol || argmin >= c - tol)
    res.location = MinLocation::endpoint;
  else if (std::abs(argmin - 0.5 * c) <= tol)
    res.location = MinLocation::center;
  else
    res.location = MinLocation::other;
  return res;
}

InequalityReport two_point_inequality(double x, double y, double alpha,
                                      double tol) {
  if (!(x > 0.0 && y > 0.0 && x + y < 1.0))
    throw std::domain_error("two_point_inequality: requires x, y > 0, x + y < 1");
  if (!(alpha > 1.0))
    throw std::domain_error("two_point_inequality: requires alpha > 1");
  const double beta = alpha / (alpha - 1.0);
  const double c = x + y;
  const double log_lhs = beta * (t_log_t(1.0 - x) + t_log_t(1.0 - y)) -
                         (t_log_t(x) + t_log_t(y));
  const double log_rhs = beta * t_log_t(1.0 - c) - t_log_t(c);
  auto rep = InequalityReport::make(std::exp(log_lhs), std::exp(log_rhs), tol);
  rep.context["x"] = format_double(x);
  rep.context["y"] = format_double(y);
  rep.context["alpha"] = format_double(alpha);
  rep.context["beta"] = format_double(beta);
  return rep;
}

}  // namespace repi::extremal
