#include "repi/density.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "repi/specfun.hpp"

namespace repi {

namespace {

using specfun::log_gamma;

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// log of the exponential-power normalizer B, B^{-1} = 2 p^{1/p-1} Gamma(1/p).
double exp_power_log_b(double p) {
  return -(std::log(2.0) + (1.0 / p - 1.0) * std::log(p) + log_gamma(1.0 / p));
}

// E|X|^k = p^{k/p} Gamma((k+1)/p) / Gamma(1/p) for the base exponential power.
double exp_power_abs_moment(double p, int k) {
  return std::exp(k / p * std::log(p) + log_gamma((k + 1.0) / p) -
                  log_gamma(1.0 / p));
}

double base_eval(const DensityFamily& fam, double x) {
  return std::visit(
      overloaded{
          [&](const Gaussian& g) {
            const double z = x / g.sigma;
            return std::exp(-0.5 * z * z) / (g.sigma * std::sqrt(2.0 * kPi));
          },
          [&](const Uniform& u) {
            return (x >= u.a && x <= u.b) ? 1.0 / (u.b - u.a) : 0.0;
          },
          [&](const ExpPower& e) {
            const double b = std::exp(exp_power_log_b(e.p));
            return b * std::exp(-std::pow(std::abs(x), e.p) / e.p);
          },
          [&](const QGaussianBeta&) {
            return (std::abs(x) <= 1.0) ? 0.75 * (1.0 - x * x) : 0.0;
          },
          [&](const Triangle&) {
            if (x < 0.0 || x > 2.0) return 0.0;
            return (x <= 1.0) ? x : 2.0 - x;
          },
      },
      fam);
}

double base_variance(const DensityFamily& fam) {
  return std::visit(
      overloaded{
          [](const Gaussian& g) { return g.sigma * g.sigma; },
          [](const Uniform& u) { return (u.b - u.a) * (u.b - u.a) / 12.0; },
          [](const ExpPower& e) { return exp_power_abs_moment(e.p, 2); },
          [](const QGaussianBeta&) { return 1.0 / 5.0; },
          [](const Triangle&) { return 1.0 / 6.0; },
      },
      fam);
}

double base_mean(const DensityFamily& fam) {
  return std::visit(
      overloaded{
          [](const Gaussian&) { return 0.0; },
          [](const Uniform& u) { return 0.5 * (u.a + u.b); },
          [](const ExpPower&) { return 0.0; },
          [](const QGaussianBeta&) { return 0.0; },
          [](const Triangle&) { return 1.0; },
      },
      fam);
}

double base_excess_kurtosis(const DensityFamily& fam) {
  return std::visit(
      overloaded{
          [](const Gaussian&) { return 0.0; },
          [](const Uniform&) { return -6.0 / 5.0; },
          [](const ExpPower& e) {
            // E X^4 / (E X^2)^2 - 3 = Gamma(5/p) Gamma(1/p) / Gamma(3/p)^2 - 3.
            const double p = e.p;
            return std::exp(log_gamma(5.0 / p) + log_gamma(1.0 / p) -
                            2.0 * log_gamma(3.0 / p)) -
                   3.0;
          },
          [](const QGaussianBeta&) { return -6.0 / 7.0; },
          [](const Triangle&) { return -3.0 / 5.0; },
      },
      fam);
}

double base_sup(const DensityFamily& fam) {
  return std::visit(
      overloaded{
          [](const Gaussian& g) { return 1.0 / (g.sigma * std::sqrt(2.0 * kPi)); },
          [](const Uniform& u) { return 1.0 / (u.b - u.a); },
          [](const ExpPower& e) { return std::exp(exp_power_log_b(e.p)); },
          [](const QGaussianBeta&) { return 0.75; },
          [](const Triangle&) { return 1.0; },
      },
      fam);
}

// int f^r for the base (unscaled) density.
double base_power_integral(const DensityFamily& fam, double r) {
  return std::visit(
      overloaded{
          [&](const Gaussian& g) {
            // (2 pi sigma^2)^{(1-r)/2} r^{-1/2}
            return std::exp(0.5 * (1.0 - r) * std::log(2.0 * kPi * g.sigma * g.sigma) -
                            0.5 * std::log(r));
          },
          [&](const Uniform& u) { return std::pow(u.b - u.a, 1.0 - r); },
          [&](const ExpPower& e) {
            // B^{r-1} r^{-1/p}
            return std::exp((r - 1.0) * exp_power_log_b(e.p) -
                            std::log(r) / e.p);
          },
          [&](const QGaussianBeta&) {
            // (3/4)^r sqrt(pi) Gamma(r+1) / Gamma(r+3/2)
            return std::exp(r * std::log(0.75) + 0.5 * std::log(kPi) +
                            log_gamma(r + 1.0) - log_gamma(r + 1.5));
          },
          [&](const Triangle&) { return 2.0 / (r + 1.0); },
      },
      fam);
}

double base_shannon(const DensityFamily& fam) {
  return std::visit(
      overloaded{
          [](const Gaussian& g) {
            return 0.5 * std::log(2.0 * kPi * std::numbers::e * g.sigma * g.sigma);
          },
          [](const Uniform& u) { return std::log(u.b - u.a); },
          [](const ExpPower& e) {
            // -log B + E|X|^p / p, and E|X|^p = 1.
            return -exp_power_log_b(e.p) + 1.0 / e.p;
          },
          [](const QGaussianBeta&) {
            // -log(3/4) - (3/4) int (1-x^2) log(1-x^2) = 5/3 - log 3
            return 5.0 / 3.0 - std::log(3.0);
          },
          [](const Triangle&) { return 0.5; },
      },
      fam);
}

Window base_window(const DensityFamily& fam, double factor) {
  return std::visit(
      overloaded{
          [&](const Gaussian& g) {
            return Window{-factor * g.sigma, factor * g.sigma};
          },
          [](const Uniform& u) { return Window{u.a, u.b}; },
          [&](const ExpPower& e) {
            const double p = e.p;
            double w = std::pow(factor * p, 1.0 / p) * std::max(1.0, p);
            // Guarantee tail mass below ~1e-17 also for p close to 1.
            w = std::max(w, std::pow(40.0 * p, 1.0 / p));
            return Window{-w, w};
          },
          [](const QGaussianBeta&) { return Window{-1.0, 1.0}; },
          [](const Triangle&) { return Window{0.0, 2.0}; },
      },
      fam);
}

void validate(const AnalyticDensity& d) {
  if (!(d.scale > 0.0) || !std::isfinite(d.scale) || !std::isfinite(d.shift))
    throw std::invalid_argument("AnalyticDensity: scale must be positive");
  std::visit(overloaded{
                 [](const Gaussian& g) {
                   if (!(g.sigma > 0.0))
                     throw std::invalid_argument("Gaussian: sigma must be positive");
                 },
                 [](const Uniform& u) {
                   if (!(u.a < u.b))
                     throw std::invalid_argument("Uniform: requires a < b");
                 },
                 [](const ExpPower& e) {
                   if (!(e.p >= 1.0))
                     throw std::invalid_argument("ExpPower: requires p >= 1");
                 },
                 [](const QGaussianBeta&) {},
                 [](const Triangle&) {},
             },
             d.family);
}

}  // namespace

AnalyticDensity::AnalyticDensity(DensityFamily f, double shift_, double scale_)
    : family(std::move(f)), shift(shift_), scale(scale_) {
  validate(*this);
}

double eval(const AnalyticDensity& d, double x) {
  return base_eval(d.family, (x - d.shift) / d.scale) / d.scale;
}

double mean(const AnalyticDensity& d) {
  return d.scale * base_mean(d.family) + d.shift;
}

double variance(const AnalyticDensity& d) {
  return d.scale * d.scale * base_variance(d.family);
}

double sup_density(const AnalyticDensity& d) {
  return base_sup(d.family) / d.scale;
}

std::optional<double> power_integral(const AnalyticDensity& d, double r) {
  if (!(r > 0.0) || r == 1.0)
    throw std::domain_error("power_integral: requires r > 0, r != 1");
  return std::pow(d.scale, 1.0 - r) * base_power_integral(d.family, r);
}

std::optional<double> gradient_power_integral(const AnalyticDensity& d,
                                              double r) {
  if (!(r > 1.0)) throw std::domain_error("gradient_power_integral: requires r > 1");
  const auto* e = std::get_if<ExpPower>(&d.family);
  if (e == nullptr) return std::nullopt;
  const double p = e->p;
  // 2 B^r (p/r)^{(2p-1)/p} (1/p) Gamma(2 - 1/p), times scale^{-(r+1)}.
  const double log_val = std::log(2.0) + r * exp_power_log_b(p) +
                         (2.0 * p - 1.0) / p * std::log(p / r) - std::log(p) +
                         log_gamma(2.0 - 1.0 / p);
  return std::exp(log_val - (r + 1.0) * std::log(d.scale));
}

double shannon_entropy_closed(const AnalyticDensity& d) {
  return base_shannon(d.family) + std::log(d.scale);
}

CumulantSet cumulants(const AnalyticDensity& d) {
  CumulantSet c;
  c.mean = mean(d);
  c.variance = variance(d);
  c.gamma3 = 0.0;  // every supported family is symmetric
  c.gamma4 = base_excess_kurtosis(d.family);
  return c;
}

Window default_window(const AnalyticDensity& d, double window_factor) {
  const Window w = base_window(d.family, window_factor);
  return {d.scale * w.lo + d.shift, d.scale * w.hi + d.shift};
}

GridDensity discretize(const AnalyticDensity& d, double lo, double hi, int n) {
  if (!(lo < hi)) throw std::invalid_argument("discretize: requires lo < hi");
  if (n < 16) throw std::invalid_argument("discretize: requires n >= 16");
  const double dx = (hi - lo) / static_cast<double>(n - 1);
  std::vector<double> vals(static_cast<std::size_t>(n));
  double vmax = 0.0;
  for (int i = 0; i < n; ++i) {
    vals[static_cast<std::size_t>(i)] = eval(d, lo + i * dx);
    vmax = std::max(vmax, vals[static_cast<std::size_t>(i)]);
  }
  // Captured-mass check before renormalization. Jump discontinuities on or
  // off the grid perturb the trapezoidal mass by up to ~dx * sup f, which is
  // discretization jitter, not truncation; allow for it.
  double mass = 0.0;
  for (double v : vals) mass += v;
  mass -= 0.5 * (vals.front() + vals.back());
  mass *= dx;
  const double allowance = 1e-6 + 2.0 * dx * vmax;
  if (mass < 1.0 - allowance)
    throw std::runtime_error("discretize: window truncates the density (mass " +
                             std::to_string(mass) + ")");
  if (mass > 1.0 + allowance)
    throw std::runtime_error("discretize: sampled mass exceeds 1 beyond tolerance");
  return GridDensity::from_samples(lo, dx, std::move(vals));
}

GridDensity discretize(const AnalyticDensity& d, int n, double window_factor) {
  const Window w = default_window(d, window_factor);
  return discretize(d, w.lo, w.hi, n);
}

std::string describe(const AnalyticDensity& d) {
  std::ostringstream out;
  std::visit(overloaded{
                 [&](const Gaussian& g) { out << "gaussian:" << g.sigma; },
                 [&](const Uniform& u) { out << "uniform:" << u.a << "," << u.b; },
                 [&](const ExpPower& e) { out << "exppower:" << e.p; },
                 [&](const QGaussianBeta&) { out << "qgaussian"; },
                 [&](const Triangle&) { out << "triangle"; },
             },
             d.family);
  if (d.scale != 1.0 || d.shift != 0.0)
    out << "@" << d.scale << "," << d.shift;
  return out.str();
}

}  // namespace repi
