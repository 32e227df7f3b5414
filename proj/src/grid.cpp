#include "repi/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace repi {

namespace {
constexpr std::size_t kMinSamples = 16;
}

GridDensity GridDensity::from_samples(double x0, double dx,
                                      std::vector<double> values) {
  if (!(dx > 0.0) || !std::isfinite(dx) || !std::isfinite(x0))
    throw std::invalid_argument("GridDensity: dx must be positive and finite");
  if (values.size() < kMinSamples)
    throw std::invalid_argument("GridDensity: need at least 16 samples");
  double vmax = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("GridDensity: non-finite sample");
    vmax = std::max(vmax, v);
  }
  if (!(vmax > 0.0)) throw std::invalid_argument("GridDensity: all samples zero");
  const double clip = -1e-12 * vmax;
  for (double& v : values) {
    if (v < 0.0) {
      if (v < clip) throw std::invalid_argument("GridDensity: negative sample");
      v = 0.0;
    }
  }
  GridDensity g;
  g.x0_ = x0;
  g.dx_ = dx;
  g.values_ = std::move(values);
  g.renormalize();
  return g;
}

double GridDensity::trapezoid_mass() const {
  double s = 0.0;
  for (double v : values_) s += v;
  s -= 0.5 * (values_.front() + values_.back());
  return s * dx_;
}

double GridDensity::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

void GridDensity::renormalize() {
  const double m = trapezoid_mass();
  if (!(m > 0.0) || !std::isfinite(m))
    throw std::invalid_argument("GridDensity: non-positive mass");
  for (double& v : values_) v /= m;
}

GridDensity GridDensity::cropped(double lo, double hi) const {
  const double eps = 1e-9 * dx_;
  std::size_t i0 = 0, i1 = values_.size();
  while (i0 < values_.size() && x(i0) < lo - eps) ++i0;
  while (i1 > i0 && x(i1 - 1) > hi + eps) --i1;
  if (i1 - i0 < kMinSamples)
    throw std::invalid_argument("GridDensity::cropped: window too narrow");
  GridDensity g;
  g.x0_ = x(i0);
  g.dx_ = dx_;
  g.values_.assign(values_.begin() + static_cast<std::ptrdiff_t>(i0),
                   values_.begin() + static_cast<std::ptrdiff_t>(i1));
  g.renormalize();
  return g;
}

void GridDensity::write_csv(std::ostream& out) const {
  out << "x,f\n";
  char buf[64];
  for (std::size_t i = 0; i < values_.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", x(i), values_[i]);
    out << buf;
  }
}

GridDensity GridDensity::read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,f", 0) != 0)
    throw std::invalid_argument("GridDensity: expected 'x,f' CSV header");
  std::vector<double> xs, vs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("GridDensity: malformed CSV row");
    xs.push_back(std::stod(line.substr(0, comma)));
    vs.push_back(std::stod(line.substr(comma + 1)));
  }
  if (xs.size() < kMinSamples)
    throw std::invalid_argument("GridDensity: CSV has too few rows");
  const double dx = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  if (!(dx > 0.0)) throw std::invalid_argument("GridDensity: x not increasing");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double expect = xs.front() + static_cast<double>(i) * dx;
    if (std::abs(xs[i] - expect) > 1e-9 * std::max(1.0, std::abs(expect)))
      throw std::invalid_argument("GridDensity: grid must be uniform");
  }
  return from_samples(xs.front(), dx, std::move(vs));
}

}  // namespace repi
