#pragma once

#include <complex>
#include <span>
#include <vector>

#include "repi/grid.hpp"

namespace repi {

// Composite Simpson quadrature over a uniform grid (trapezoid fallback on
// the last panel when the sample count is even). Needs >= 3 samples.
double integrate(std::span<const double> values, double dx);

// Linear convolution of two densities on grids with equal spacing, via
// zero-padded FFT. The Riemann sum uses trapezoid end weights, roundoff
// negatives are clipped, and the result is renormalized to unit mass.
// Output: x0 = a.x0 + b.x0, length = |a| + |b| - 1.
// If raw_mass is non-null it receives the pre-renormalization trapezoidal
// mass; a deviation above 1e-4 throws std::runtime_error.
GridDensity convolve(const GridDensity& a, const GridDensity& b,
                     double* raw_mass = nullptr);

// Second-order derivative estimate: central differences inside, one-sided
// three-point stencils at the two ends.
std::vector<double> derivative(std::span<const double> values, double dx);
std::vector<double> derivative(const GridDensity& a);

// Density of X + sqrt(t) Z for Z standard normal: convolution with a
// discretized Gaussian(sqrt(t)) kernel on a matching grid. The output window
// expands by the kernel half-width.
GridDensity heat_evolve(const GridDensity& a, double t);

namespace detail {
// Iterative radix-2 FFT; data.size() must be a power of two.
void fft(std::vector<std::complex<double>>& data, bool inverse);
}

}  // namespace repi
