#include "swipt/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "swipt/errors.hpp"

namespace swipt::frontier {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInnerTolerance = 1e-11;
constexpr double kOuterTolerance = 1e-10;
constexpr double kFrontierSolveTolerance = 1e-9;  // in units of mean_energy
constexpr int kMaxBracketDoublings = 200;
constexpr int kMaxBisections = 300;

// With two relays write gamma_min ~ Exp(mean/4) and the spacing
// gamma_max - gamma_min ~ Exp(mean/2), independent. Given the SNRs the Pareto
// rule keeps the max-SNR relay unless the other relay's energy surplus
// exceeds D / zeta, D = F(gamma_max) - F(gamma_min). For exponential
// energies with u = D / (zeta mean_energy):
//   P(keep max-SNR relay) = 1 - e^{-u} / 2
//   E[energy] / mean_energy = 1 + e^{-u} (1 + u) / 2
// so only the capacity loss E[e^{-u} D] / 2 and the energy gain need
// integrating over the two SNR variables.
struct Moments {
  double capacity_loss = 0.0;
  double energy_gain = 0.0;
};

double spacing_gain(double s, double t, double mean_snr) {
  const double gamma_min = 0.25 * mean_snr * s;
  const double spacing = 0.5 * mean_snr * t;
  return std::log1p(spacing / (1.0 + gamma_min)) / (2.0 * std::numbers::ln2);
}

struct Integrand {
  double mean_snr;
  double scale;  // zeta * mean_energy

  double loss(double s, double t) const {
    const double d = spacing_gain(s, t, mean_snr);
    return 0.5 * std::exp(-d / scale) * d;
  }
  double gain(double s, double t) const {
    const double u = spacing_gain(s, t, mean_snr) / scale;
    return 0.5 * std::exp(-u) * (1.0 + u);
  }
};

template <class F>
std::pair<double, double> nested_exp_sinh(F&& f) {
  boost::math::quadrature::exp_sinh<double> inner_rule;
  boost::math::quadrature::exp_sinh<double> outer_rule;
  double inner_error = 0.0;
  const auto outer = [&](double s) {
    double err = 0.0;
    const double v = inner_rule.integrate(
        [&](double t) { return std::exp(-t) * f(s, t); }, kInnerTolerance, &err);
    inner_error = std::max(inner_error, err);
    return std::exp(-s) * v;
  };
  double outer_error = 0.0;
  const double value = outer_rule.integrate(outer, kOuterTolerance, &outer_error);
  return {value, outer_error + inner_error};
}

Moments moments_quadrature(const Integrand& g, double& error) {
  const auto [loss, e1] =
      nested_exp_sinh([&](double s, double t) { return g.loss(s, t); });
  const auto [gain, e2] =
      nested_exp_sinh([&](double s, double t) { return g.gain(s, t); });
  error = std::max(e1, e2);
  return {loss, gain};
}

// Rank-2 Kronecker (R2) low-discrepancy sequence mapped through the
// exponential inverse CDF.
Moments moments_qmc(const Integrand& g, std::uint64_t n) {
  constexpr double plastic = 1.32471795724474602596;
  constexpr double a1 = 1.0 / plastic;
  constexpr double a2 = 1.0 / (plastic * plastic);
  double loss = 0.0, gain = 0.0;
  for (std::uint64_t k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k);
    double x = 0.5 + a1 * kk;
    double y = 0.5 + a2 * kk;
    x -= std::floor(x);
    y -= std::floor(y);
    const double s = -std::log1p(-x);
    const double t = -std::log1p(-y);
    loss += g.loss(s, t);
    gain += g.gain(s, t);
  }
  return {loss / static_cast<double>(n), gain / static_cast<double>(n)};
}

Moments moments_qmc_certified(const Integrand& g, double& error) {
  std::uint64_t n = std::uint64_t{1} << 22;
  Moments previous = moments_qmc(g, n / 2);
  for (int round = 0; round < 4; ++round, n *= 2) {
    const Moments current = moments_qmc(g, n);
    error = std::max(std::abs(current.capacity_loss - previous.capacity_loss),
                     std::abs(current.energy_gain - previous.energy_gain));
    if (error < kPointTolerance) return current;
    previous = current;
  }
  return previous;
}

void require_pair(const SystemConfig& config, const char* what) {
  config.validate();
  if (config.n_relays != 2) {
    throw DimensionError(std::string(what) + " is defined for two relays only");
  }
}

double energy_at(const SystemConfig& config, double zeta, Metric metric,
                 FrontierMethod method, double& error) {
  if (metric == Metric::OutageIndicator) {
    error = 0.0;
    return closedform::pareto_outage_energy(config, zeta);
  }
  const ParetoPoint p = pareto_capacity_point(config, zeta, method);
  error = p.error * config.mean_energy;
  return p.point.energy;
}

void check_grid(const std::vector<double>& grid, double lo, const char* what) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= lo && grid[i] <= 1.0)) {
      std::ostringstream msg;
      msg << what << ": delta " << grid[i] << " outside [" << lo << ", 1]";
      throw DomainError(msg.str());
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw DomainError(std::string(what) + ": grid must be strictly increasing");
    }
  }
}

}  // namespace

ParetoPoint pareto_capacity_point(const SystemConfig& config, double zeta,
                                  FrontierMethod method) {
  require_pair(config, "pareto_capacity_point");
  if (!(zeta >= 0.0)) throw DomainError("pareto_capacity_point: zeta must be >= 0");
  const double e = config.mean_energy;
  const double hi = closedform::c_max(config);

  ParetoPoint out;
  out.zeta = zeta;
  out.method = method;
  if (zeta == 0.0) {
    out.point = {e, hi, 0.0};
    return out;
  }
  if (std::isinf(zeta)) {
    out.point = {1.5 * e, closedform::c_min(config), 1.0};
    return out;
  }

  const Integrand g{config.mean_snr, zeta * e};
  double error = 0.0;
  const Moments m = method == FrontierMethod::Quadrature
                        ? moments_quadrature(g, error)
                        : moments_qmc_certified(g, error);
  if (!(error < kPointTolerance) || !std::isfinite(m.capacity_loss) ||
      !std::isfinite(m.energy_gain)) {
    std::ostringstream msg;
    msg << "pareto_capacity_point: integration error estimate " << error
        << " exceeds " << kPointTolerance << " at zeta " << zeta;
    throw ToleranceError(msg.str());
  }
  const double energy = e * (1.0 + std::clamp(m.energy_gain, 0.0, 0.5));
  out.point = {energy, hi - m.capacity_loss,
               closedform::delta_from_energy(config, energy)};
  out.error = error;
  return out;
}

double solve_zeta_for_energy(const SystemConfig& config, double target,
                             Metric metric, std::optional<double> tolerance,
                             FrontierMethod method) {
  require_pair(config, "solve_zeta_for_energy");
  const double e = config.mean_energy;
  const double tol = tolerance.value_or(1e-4 * e);
  if (!(tol > 0.0)) throw DomainError("solve_zeta_for_energy: tolerance must be > 0");

  const double floor = metric == Metric::Capacity
                           ? e
                           : closedform::pareto_outage_energy_min(config);
  if (!(target >= floor - tol && target < 1.5 * e)) {
    std::ostringstream msg;
    msg << "solve_zeta_for_energy: target " << target << " outside [" << floor
        << ", " << 1.5 * e << ")";
    throw DomainError(msg.str());
  }
  if (target <= floor + tol) return 0.0;

  double err = 0.0;
  double lo = 0.0;
  double hi = 1.0;
  double previous = floor;
  double e_hi = energy_at(config, hi, metric, method, err);
  std::vector<std::pair<double, double>> samples{{0.0, floor}, {hi, e_hi}};
  for (int i = 0; e_hi < target; ++i) {
    if (e_hi < previous - err - 1e-12 * e || i == kMaxBracketDoublings) {
      std::ostringstream msg;
      msg << "solve_zeta_for_energy: energy map not monotone or unbounded; samples";
      for (const auto& [z, en] : samples) msg << " (" << z << ", " << en << ")";
      throw BracketError(msg.str());
    }
    previous = e_hi;
    lo = hi;
    hi *= 2.0;
    e_hi = energy_at(config, hi, metric, method, err);
    samples.emplace_back(hi, e_hi);
  }

  double mid = hi;
  double e_mid = e_hi;
  for (int i = 0; i < kMaxBisections && std::abs(e_mid - target) >= tol; ++i) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    e_mid = energy_at(config, mid, metric, method, err);
    if (e_mid < target) lo = mid;
    else hi = mid;
  }
  if (std::abs(e_mid - target) >= tol) {
    std::ostringstream msg;
    msg << "solve_zeta_for_energy: bisection stalled at energy " << e_mid
        << " for target " << target;
    throw ToleranceError(msg.str());
  }
  return mid;
}

FrontierCurve capacity_frontier(const SystemConfig& config,
                                const std::vector<double>& grid,
                                FrontierMethod method) {
  require_pair(config, "capacity_frontier");
  check_grid(grid, 0.0, "capacity_frontier");
  FrontierCurve curve;
  curve.method = method;
  const double tol = kFrontierSolveTolerance * config.mean_energy;
  for (const double delta : grid) {
    const double target = closedform::energy_from_delta(config, delta);
    const double zeta =
        delta >= 1.0 ? kInf
                     : solve_zeta_for_energy(config, target, Metric::Capacity, tol, method);
    const ParetoPoint p = pareto_capacity_point(config, zeta, method);
    curve.points.push_back(p.point);
    curve.zetas.push_back(zeta);
    curve.tolerance = std::max(curve.tolerance, p.error);
  }
  return curve;
}

FrontierCurve outage_frontier(const SystemConfig& config,
                              const std::vector<double>& grid) {
  require_pair(config, "outage_frontier");
  const double delta_lo = closedform::delta_range_outage(config).first;
  check_grid(grid, delta_lo * (1.0 - 1e-12), "outage_frontier");
  FrontierCurve curve;
  curve.method = FrontierMethod::Quadrature;
  const double tol = kFrontierSolveTolerance * config.mean_energy;
  for (const double delta : grid) {
    double zeta = 0.0;
    if (delta >= 1.0) {
      zeta = kInf;
    } else if (delta > delta_lo) {
      zeta = solve_zeta_for_energy(config, closedform::energy_from_delta(config, delta),
                                   Metric::OutageIndicator, tol);
    }
    const double energy = closedform::pareto_outage_energy(config, zeta);
    curve.zetas.push_back(zeta);
    curve.points.push_back({energy, closedform::pareto_no_outage(config, zeta),
                            closedform::delta_from_energy(config, energy)});
    curve.tolerance = std::max(curve.tolerance, tol);
  }
  return curve;
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 2 || !(hi > lo)) throw DomainError("uniform_grid: need n >= 2 and hi > lo");
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  }
  grid.back() = hi;
  return grid;
}

}  // namespace swipt::frontier
