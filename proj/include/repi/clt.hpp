#pragma once

#include <optional>
#include <vector>

#include "repi/density.hpp"
#include "repi/renyi.hpp"

namespace repi {

// First-order Edgeworth constant in the expansion
//   h_r(Z) - h_r(Z_k) = B_r / k + O(k^{-2}),
// B_r = (1/(4r)) [ (2-r)/3 gamma3^2 + (r-1)/2 gamma4 ].
double edgeworth_coefficient(double gamma3, double gamma4, double r);

// When gamma3 != 0 and gamma4 < (2/3) gamma3^2, B_r turns negative for all
// r above (4 gamma3^2 - 3 gamma4) / (2 gamma3^2 - 3 gamma4); otherwise there
// is no sign change and nullopt is returned.
std::optional<double> negative_b_threshold(double gamma3, double gamma4);

// Affine pushforward with mean 0 and variance 1.
AnalyticDensity standardize(const AnalyticDensity& d);

struct CltScanResult {
  std::vector<int> ks;            // 1, 2, 4, ..., k_max
  std::vector<double> h_values;   // h_r(Z_k)
  std::vector<double> deltas;     // h_r(Z) - h_r(Z_k)
  double slope_estimate = 0.0;    // fit of delta_k ~ B/k on the largest ks
  double b_analytic = 0.0;        // Edgeworth constant from the cumulants
  double h_gaussian = 0.0;        // h_r of the standard normal
};

struct CltOptions {
  int grid_n = 8192;
};

// Entropies of the normalized sums Z_k = (X_1 + ... + X_k)/sqrt(k) along the
// doubling subsequence k = 2^l. Each step self-convolves the grid of the
// unnormalized sum; the sqrt-k rescaling is accounted exactly through
// h_r(a X) = h_r(X) + log a, so no resampling is needed. Windows expand with
// k and are cropped where the tail mass is negligible.
// Requires k_max a power of two <= 256 and r >= 1 (r = 1 is the Shannon
// control case). The input density is standardized internally.
CltScanResult clt_scan(const AnalyticDensity& d, double r, int k_max = 64,
                       const CltOptions& opts = {});

}  // namespace repi
