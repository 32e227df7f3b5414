#pragma once

#include <string_view>

#include "repi/density.hpp"
#include "repi/grid.hpp"

namespace repi {

// Entropy order with its three regimes: the Shannon limit r = 1, finite
// r > 0 (r != 1), and the sup-norm limit r = infinity.
class RenyiOrder {
 public:
  enum class Regime { shannon, finite, sup };

  static RenyiOrder shannon() { return RenyiOrder(Regime::shannon, 1.0); }
  static RenyiOrder sup() { return RenyiOrder(Regime::sup, 0.0); }
  static RenyiOrder finite(double r);

  // "1" -> shannon, "inf"/"sup" -> sup, otherwise a finite order.
  static RenyiOrder parse(std::string_view text);

  Regime regime() const { return regime_; }
  double r() const { return r_; }  // meaningful in the finite regime

 private:
  RenyiOrder(Regime reg, double r) : regime_(reg), r_(r) {}
  Regime regime_;
  double r_;
};

struct EntropyResult {
  double h = 0.0;      // entropy in nats
  double N = 0.0;      // entropy power exp(2h/n)
  int dimension = 1;   // numerics fix n = 1; closed forms parameterize n
};

// h_r = -log(int f^r)/(r-1) (finite), -int f log f (shannon, 0 log 0 = 0),
// -log ||f||_inf (sup). The analytic overload uses closed-form integrals,
// the grid overload Simpson quadrature.
EntropyResult renyi_entropy(const AnalyticDensity& d, RenyiOrder order);
EntropyResult renyi_entropy(const GridDensity& g, RenyiOrder order);

double entropy_power(const AnalyticDensity& d, RenyiOrder order);
double entropy_power(const GridDensity& g, RenyiOrder order);

// Entropy power and entropy from a known value of int f^r in dimension n.
EntropyResult entropy_from_power_integral(double integral, double r,
                                          int dimension = 1);

// (int f^r)^{-2/(r-1) - 1} for r > 1; equals N_r^{1 + (r-1)/2} on the line.
double savare_toscani_power(const AnalyticDensity& d, double r);
double savare_toscani_power(const GridDensity& g, double r);

// N_r raised to alpha (alpha > 0).
double power_alpha(const AnalyticDensity& d, RenyiOrder order, double alpha);
double power_alpha(const GridDensity& g, RenyiOrder order, double alpha);

// Closed form for a Gaussian with standard deviation sigma (any dimension):
// finite r -> 2 pi sigma^2 r^{1/(r-1)}, shannon -> 2 pi e sigma^2,
// sup -> 2 pi sigma^2.
double gaussian_entropy_power(double sigma, RenyiOrder order);

}  // namespace repi
