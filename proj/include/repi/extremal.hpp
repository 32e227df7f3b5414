#pragma once

#include "repi/report.hpp"

namespace repi::extremal {

// Numeric study of the extremal function
//   psi(x) = (1-x)^{b(1-x)} (1-y)^{b(1-y)} / (x^x y^y),  y = c - x,
// on [0, c] for 0 < c < 1, with the convention 0^0 = 1. All products of
// powers are computed in log space so the endpoint conventions are exact.

double log_psi(double x, double c, double beta);
double psi(double x, double c, double beta);

// w(x) = beta (2-c) x y - c (1-x)(1-y); its sign equals the sign of
// (log psi)'' inside (0, c).
double convexity_quadratic(double x, double c, double beta);

enum class MinLocation { endpoint, center, other };

struct MinimizeResult {
  double argmin = 0.0;
  double min_value = 0.0;
  MinLocation location = MinLocation::other;
};

// Global minimum of psi on [0, c] by coarse grid plus derivative bisection.
// For beta >= 2/c - 1 the minimum always classifies as endpoint or center;
// "other" signals a verification failure. Classification tolerance on x is
// 1e-6 * c.
MinimizeResult minimize_psi(double c, double beta, int n_grid = 10000);

const char* to_string(MinLocation loc);

// Two-point inequality behind the additive entropy-power bound:
//   psi-form lhs >= (1-x-y)^{b(1-x-y)} / (x+y)^{x+y}
// for x, y > 0, x + y < 1, beta = alpha/(alpha-1). Holds with equality at
// the boundary x = 0 or y = 0; for beta = 2/(x+y) - 1 it holds everywhere.
InequalityReport two_point_inequality(double x, double y, double alpha,
                                      double tol = 1e-12);

}  // namespace repi::extremal
