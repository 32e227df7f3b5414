#include "repi/renyi.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "repi/numerics.hpp"

namespace repi {

namespace {

EntropyResult from_entropy(double h, int dimension = 1) {
  EntropyResult res;
  res.h = h;
  res.N = std::exp(2.0 * h / dimension);
  res.dimension = dimension;
  return res;
}

double grid_power_integral(const GridDensity& g, double r) {
  std::vector<double> tmp(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    tmp[i] = std::pow(g.values()[i], r);
  return integrate(tmp, g.dx());
}

double grid_shannon_integral(const GridDensity& g) {
  // int f log f with the 0 log 0 = 0 convention.
  std::vector<double> tmp(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double v = g.values()[i];
    tmp[i] = (v > 0.0) ? v * std::log(v) : 0.0;
  }
  return integrate(tmp, g.dx());
}

}  // namespace

RenyiOrder RenyiOrder::finite(double r) {
  if (!(r > 0.0)) throw std::domain_error("RenyiOrder: requires r > 0");
  if (r == 1.0) return shannon();
  return RenyiOrder(Regime::finite, r);
}

RenyiOrder RenyiOrder::parse(std::string_view text) {
  if (text == "inf" || text == "sup" || text == "infinity") return sup();
  size_t pos = 0;
  const double r = std::stod(std::string(text), &pos);
  if (pos != text.size())
    throw std::invalid_argument("RenyiOrder: cannot parse '" + std::string(text) + "'");
  return finite(r);
}

EntropyResult renyi_entropy(const AnalyticDensity& d, RenyiOrder order) {
  switch (order.regime()) {
    case RenyiOrder::Regime::shannon:
      return from_entropy(shannon_entropy_closed(d));
    case RenyiOrder::Regime::sup:
      return from_entropy(-std::log(sup_density(d)));
    case RenyiOrder::Regime::finite: {
      const double r = order.r();
      if (auto integral = power_integral(d, r))
        return from_entropy(-std::log(*integral) / (r - 1.0));
      return renyi_entropy(discretize(d, 8192), order);
    }
  }
  throw std::logic_error("renyi_entropy: unknown regime");
}

EntropyResult renyi_entropy(const GridDensity& g, RenyiOrder order) {
  if (g.size() == 0) throw std::invalid_argument("renyi_entropy: empty grid");
  switch (order.regime()) {
    case RenyiOrder::Regime::shannon:
      return from_entropy(-grid_shannon_integral(g));
    case RenyiOrder::Regime::sup:
      return from_entropy(-std::log(g.max_value()));
    case RenyiOrder::Regime::finite: {
      const double r = order.r();
      const double integral = grid_power_integral(g, r);
      if (!(integral > 0.0) || !std::isfinite(integral))
        throw std::runtime_error("renyi_entropy: f^r is not integrable on the grid");
      return from_entropy(-std::log(integral) / (r - 1.0));
    }
  }
  throw std::logic_error("renyi_entropy: unknown regime");
}

double entropy_power(const AnalyticDensity& d, RenyiOrder order) {
  return renyi_entropy(d, order).N;
}

double entropy_power(const GridDensity& g, RenyiOrder order) {
  return renyi_entropy(g, order).N;
}

EntropyResult entropy_from_power_integral(double integral, double r,
                                          int dimension) {
  if (!(integral > 0.0))
    throw std::domain_error("entropy_from_power_integral: integral must be positive");
  if (!(r > 0.0) || r == 1.0)
    throw std::domain_error("entropy_from_power_integral: requires r > 0, r != 1");
  if (dimension < 1)
    throw std::domain_error("entropy_from_power_integral: dimension >= 1");
  return from_entropy(-std::log(integral) / (r - 1.0), dimension);
}

namespace {
double savare_toscani_from_integral(double integral, double r) {
  if (!(r > 1.0)) throw std::domain_error("savare_toscani_power: requires r > 1");
  return std::pow(integral, -2.0 / (r - 1.0) - 1.0);
}
}  // namespace

double savare_toscani_power(const AnalyticDensity& d, double r) {
  if (!(r > 1.0)) throw std::domain_error("savare_toscani_power: requires r > 1");
  if (auto integral = power_integral(d, r))
    return savare_toscani_from_integral(*integral, r);
  return savare_toscani_power(discretize(d, 8192), r);
}

double savare_toscani_power(const GridDensity& g, double r) {
  if (!(r > 1.0)) throw std::domain_error("savare_toscani_power: requires r > 1");
  return savare_toscani_from_integral(grid_power_integral(g, r), r);
}

double power_alpha(const AnalyticDensity& d, RenyiOrder order, double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("power_alpha: requires alpha > 0");
  return std::pow(entropy_power(d, order), alpha);
}

double power_alpha(const GridDensity& g, RenyiOrder order, double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("power_alpha: requires alpha > 0");
  return std::pow(entropy_power(g, order), alpha);
}

double gaussian_entropy_power(double sigma, RenyiOrder order) {
  if (!(sigma > 0.0))
    throw std::domain_error("gaussian_entropy_power: requires sigma > 0");
  const double base = 2.0 * std::numbers::pi * sigma * sigma;
  switch (order.regime()) {
    case RenyiOrder::Regime::shannon:
      return base * std::numbers::e;
    case RenyiOrder::Regime::sup:
      return base;
    case RenyiOrder::Regime::finite: {
      const double r = order.r();
      return base * std::pow(r, 1.0 / (r - 1.0));
    }
  }
  throw std::logic_error("gaussian_entropy_power: unknown regime");
}

}  // namespace repi
