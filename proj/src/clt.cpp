#include "repi/clt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "repi/numerics.hpp"

namespace repi {

double edgeworth_coefficient(double gamma3, double gamma4, double r) {
  if (!(r >= 1.0)) throw std::domain_error("edgeworth_coefficient: requires r >= 1");
  return (1.0 / (4.0 * r)) *
         ((2.0 - r) / 3.0 * gamma3 * gamma3 + (r - 1.0) / 2.0 * gamma4);
}

std::optional<double> negative_b_threshold(double gamma3, double gamma4) {
  if (gamma3 == 0.0)
    throw std::domain_error("negative_b_threshold: requires gamma3 != 0");
  const double g32 = gamma3 * gamma3;
  if (!(gamma4 < 2.0 / 3.0 * g32)) return std::nullopt;
  return (4.0 * g32 - 3.0 * gamma4) / (2.0 * g32 - 3.0 * gamma4);
}

AnalyticDensity standardize(const AnalyticDensity& d) {
  const double mu = mean(d);
  const double sd = std::sqrt(variance(d));
  return AnalyticDensity(d.family, (d.shift - mu) / sd, d.scale / sd);
}

CltScanResult clt_scan(const AnalyticDensity& d, double r, int k_max,
                       const CltOptions& opts) {
  if (!(r >= 1.0)) throw std::domain_error("clt_scan: requires r >= 1");
  if (k_max < 1 || k_max > 256 || (k_max & (k_max - 1)) != 0)
    throw std::invalid_argument("clt_scan: k_max must be a power of two <= 256");

  const AnalyticDensity sd = standardize(d);
  const RenyiOrder order =
      (r == 1.0) ? RenyiOrder::shannon() : RenyiOrder::finite(r);

  CltScanResult result;
  result.b_analytic = [&] {
    const CumulantSet c = cumulants(sd);
    return edgeworth_coefficient(c.gamma3, c.gamma4, r);
  }();
  result.h_gaussian = (r == 1.0)
      ? 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e)
      : 0.5 * std::log(2.0 * std::numbers::pi * std::pow(r, 1.0 / (r - 1.0)));

  // Work with the unnormalized sum S_m = X_1 + ... + X_m on a grid of fixed
  // spacing; h_r(Z_m) = h_r(S_m) - (1/2) log m handles the rescaling exactly.
  GridDensity grid = discretize(sd, opts.grid_n);
  int m = 1;
  while (true) {
    const double h =
        renyi_entropy(grid, order).h - 0.5 * std::log(static_cast<double>(m));
    result.ks.push_back(m);
    result.h_values.push_back(h);
    result.deltas.push_back(result.h_gaussian - h);
    if (m == k_max) break;
    grid = convolve(grid, grid);
    m *= 2;
    // The sum has variance m; everything beyond ~12 standard deviations is
    // far below quadrature tolerance and may be cropped.
    const double w = 12.0 * std::sqrt(static_cast<double>(m)) + 5.0;
    if (grid.x0() < -w || grid.x(grid.size() - 1) > w)
      grid = grid.cropped(-w, w);
  }

  // Weighted fit of delta_k ~ B/k on the largest three k (weights k^2), which
  // keeps the k^{-2} correction from leaking into the estimate.
  const std::size_t count = result.ks.size();
  const std::size_t use = std::min<std::size_t>(3, count);
  double num = 0.0, den = 0.0;
  for (std::size_t i = count - use; i < count; ++i) {
    const double k = static_cast<double>(result.ks[i]);
    num += k * k * result.deltas[i] / k;
    den += k * k / (k * k);
  }
  result.slope_estimate = num / den;
  return result;
}

}  // namespace repi
