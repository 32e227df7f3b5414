#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace repi {

// A probability density sampled on a uniform grid x0 + i*dx. This is the
// workhorse of every numeric entropy and convolution computation.
//
// Invariants maintained by the factory functions:
//   - dx > 0 and at least 16 samples,
//   - all values >= 0,
//   - trapezoidal mass within 1e-6 of 1 after construction/renormalization.
class GridDensity {
 public:
  GridDensity() = default;

  // Validates, clips roundoff-level negatives to zero and renormalizes to
  // unit trapezoidal mass. Throws std::invalid_argument on bad input.
  static GridDensity from_samples(double x0, double dx,
                                  std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double x0() const { return x0_; }
  double dx() const { return dx_; }
  double x(std::size_t i) const { return x0_ + static_cast<double>(i) * dx_; }
  const std::vector<double>& values() const { return values_; }

  double trapezoid_mass() const;
  double max_value() const;

  // Divides by the current trapezoidal mass.
  void renormalize();

  // Restrict to grid points with lo <= x <= hi, then renormalize.
  // Throws if fewer than 16 samples remain.
  GridDensity cropped(double lo, double hi) const;

  // CSV serialization: header "x,f", one row per grid point.
  void write_csv(std::ostream& out) const;
  static GridDensity read_csv(std::istream& in);

 private:
  double x0_ = 0.0;
  double dx_ = 0.0;
  std::vector<double> values_;
};

}  // namespace repi
