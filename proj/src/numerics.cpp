#include "repi/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "repi/density.hpp"

namespace repi {

namespace detail {

void fft(std::vector<std::complex<double>>& data, bool inverse) {
  const std::size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft: size must be a power of two");
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  // Precomputed twiddle table for the full transform keeps per-stage
  // accuracy at machine level.
  std::vector<std::complex<double>> twiddle(n / 2);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(n);
    twiddle[k] = {std::cos(ang), std::sin(ang)};
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> w = twiddle[k * stride];
        const std::complex<double> u = data[i + k];
        const std::complex<double> v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& z : data) z *= scale;
  }
}

}  // namespace detail

double integrate(std::span<const double> values, double dx) {
  const std::size_t n = values.size();
  if (n < 3) throw std::invalid_argument("integrate: need at least 3 samples");
  if (!(dx > 0.0)) throw std::invalid_argument("integrate: dx must be positive");
  // Composite Simpson needs an odd sample count; with an even count the last
  // panel falls back to the trapezoid rule.
  const std::size_t m = (n % 2 == 1) ? n : n - 1;
  double s = values[0] + values[m - 1];
  double four = 0.0, two = 0.0;
  for (std::size_t i = 1; i < m - 1; i += 2) four += values[i];
  for (std::size_t i = 2; i < m - 1; i += 2) two += values[i];
  double result = dx / 3.0 * (s + 4.0 * four + 2.0 * two);
  if (n % 2 == 0) result += 0.5 * dx * (values[n - 2] + values[n - 1]);
  return result;
}

GridDensity convolve(const GridDensity& a, const GridDensity& b,
                     double* raw_mass) {
  if (std::abs(a.dx() - b.dx()) > 1e-12 * std::max(a.dx(), b.dx()))
    throw std::invalid_argument("convolve: grids must have equal spacing");
  const double dx = a.dx();
  const std::size_t out_n = a.size() + b.size() - 1;
  std::size_t padded = 1;
  while (padded < out_n) padded <<= 1;

  // Trapezoid end weights turn the lattice sum into a second-order
  // approximation of the convolution integral even when a density jumps at
  // its window edge (a uniform sampled on its exact support).
  std::vector<std::complex<double>> fa(padded), fb(padded);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a.values()[i];
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b.values()[i];
  fa[0] *= 0.5;
  fa[a.size() - 1] *= 0.5;
  fb[0] *= 0.5;
  fb[b.size() - 1] *= 0.5;

  detail::fft(fa, false);
  detail::fft(fb, false);
  for (std::size_t i = 0; i < padded; ++i) fa[i] *= fb[i];
  detail::fft(fa, true);

  std::vector<double> out(out_n);
  for (std::size_t i = 0; i < out_n; ++i)
    out[i] = std::max(0.0, fa[i].real() * dx);  // clip FFT roundoff negatives

  double mass = 0.0;
  for (double v : out) mass += v;
  mass -= 0.5 * (out.front() + out.back());
  mass *= dx;
  if (raw_mass != nullptr) *raw_mass = mass;
  if (std::abs(mass - 1.0) > 1e-4)
    throw std::runtime_error("convolve: mass deviation exceeds 1e-4");
  return GridDensity::from_samples(a.x0() + b.x0(), dx, std::move(out));
}

std::vector<double> derivative(std::span<const double> values, double dx) {
  const std::size_t n = values.size();
  if (n < 3) throw std::invalid_argument("derivative: need at least 3 samples");
  std::vector<double> d(n);
  d[0] = (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * dx);
  for (std::size_t i = 1; i + 1 < n; ++i)
    d[i] = (values[i + 1] - values[i - 1]) / (2.0 * dx);
  d[n - 1] =
      (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * dx);
  return d;
}

std::vector<double> derivative(const GridDensity& a) {
  return derivative(a.values(), a.dx());
}

GridDensity heat_evolve(const GridDensity& a, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("heat_evolve: requires t > 0");
  const double sigma = std::sqrt(t);
  const double dx = a.dx();
  // Kernel half-width: 12 sigma captures all mass to ~1e-32; keep at least
  // 8 grid cells so the kernel grid is a valid density even for tiny t.
  const double half = std::max(12.0 * sigma, 8.0 * dx);
  const long m = std::lround(half / dx);
  std::vector<double> ker(static_cast<std::size_t>(2 * m + 1));
  const double norm = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  for (long i = -m; i <= m; ++i) {
    const double x = static_cast<double>(i) * dx;
    ker[static_cast<std::size_t>(i + m)] =
        norm * std::exp(-0.5 * x * x / (sigma * sigma));
  }
  const GridDensity kernel = GridDensity::from_samples(
      -static_cast<double>(m) * dx, dx, std::move(ker));
  return convolve(a, kernel);
}

}  // namespace repi
