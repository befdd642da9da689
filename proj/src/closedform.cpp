#include "swipt/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "swipt/errors.hpp"
#include "swipt/specfun.hpp"

namespace swipt::closedform {
namespace {

using specfun::exp_integral_e1;
using specfun::exp_scaled_e1;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = std::numbers::ln2;
constexpr double kRangeSlack = 1e-9;
constexpr double kSingularBand = 1e-8;
constexpr double kBridgeStep = 1e-6;

void require_tradeoff(const SystemConfig& config, const char* what) {
  config.validate();
  if (config.n_relays < 2) {
    throw DomainError(std::string(what) +
                      ": the energy range is empty for a single relay");
  }
}

void require_two_relays(const SystemConfig& config, const char* what) {
  config.validate();
  if (config.n_relays != 2) {
    throw DimensionError(std::string(what) + " is defined for two relays only");
  }
}

double harmonic_of(const SystemConfig& config) {
  return specfun::harmonic(static_cast<unsigned>(config.n_relays));
}

double checked_delta(double delta, const char* what) {
  if (!(delta >= -kRangeSlack && delta <= 1.0 + kRangeSlack)) {
    throw DomainError(std::string(what) + ": delta must lie in [0, 1]");
  }
  return std::clamp(delta, 0.0, 1.0);
}

// Energy as a fraction of the feasible range, i.e. the tradeoff factor.
double energy_fraction(const SystemConfig& config, double energy,
                       const char* what) {
  require_tradeoff(config, what);
  const double lo = config.mean_energy;
  const double hi = harmonic_of(config) * config.mean_energy;
  if (!(energy >= lo * (1.0 - kRangeSlack) && energy <= hi * (1.0 + kRangeSlack))) {
    throw DomainError(std::string(what) + ": energy outside [mean, H_N mean]");
  }
  const double clamped = std::clamp(energy, lo, hi);
  return (clamped / config.mean_energy - 1.0) / (harmonic_of(config) - 1.0);
}

double binomial(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// Shared by c_min and c_max so that c_min equals c_max at N = 1 exactly.
double max_selection_capacity(int n, double mean_snr) {
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double a = 2.0 * (j + 1) / mean_snr;
    sum += sign * binomial(n - 1, j) / (2.0 * (j + 1) * kLn2) * exp_scaled_e1(a);
  }
  return n * sum;
}

// Single-relay outage probability 1 - exp(-2 gamma_th / mean_snr).
double single_outage(const SystemConfig& config) {
  return -std::expm1(-2.0 * config.outage_threshold / config.mean_snr);
}

// Evaluates f(t) but bridges a removable 0/0 at t == pole by averaging
// the two neighbours t (1 +- kBridgeStep).
template <class F>
double bridged(F&& f, double t, double pole) {
  if (std::abs(t - pole) <= kSingularBand * std::abs(pole)) {
    return 0.5 * (f(t * (1.0 - kBridgeStep)) + f(t * (1.0 + kBridgeStep)));
  }
  return f(t);
}

}  // namespace

double c_min(const SystemConfig& config) {
  config.validate();
  return max_selection_capacity(1, config.mean_snr);
}

double c_max(const SystemConfig& config) {
  config.validate();
  return max_selection_capacity(config.n_relays, config.mean_snr);
}

std::pair<double, double> energy_bounds(const SystemConfig& config) {
  config.validate();
  return {config.mean_energy, harmonic_of(config) * config.mean_energy};
}

double delta_from_energy(const SystemConfig& config, double energy) {
  return energy_fraction(config, energy, "delta_from_energy");
}

double energy_from_delta(const SystemConfig& config, double delta) {
  require_tradeoff(config, "energy_from_delta");
  delta = checked_delta(delta, "energy_from_delta");
  return config.mean_energy * (1.0 + delta * (harmonic_of(config) - 1.0));
}

// ---------------------------------------------------------------------------

double mu_from_energy(const SystemConfig& config, double energy) {
  energy_fraction(config, energy, "mu_from_energy");
  const double h = harmonic_of(config);
  const double clamped =
      std::clamp(energy, config.mean_energy, h * config.mean_energy);
  if (clamped <= config.mean_energy) return 1.0;
  if (clamped >= h * config.mean_energy) return 0.0;
  const double mu = (config.mean_energy * h - clamped) / (config.mean_energy * (h - 1.0));
  return std::clamp(mu, 0.0, 1.0);
}

double energy_ts_of_mu(const SystemConfig& config, double mu) {
  require_tradeoff(config, "energy_ts_of_mu");
  if (!(mu >= 0.0 && mu <= 1.0)) throw DomainError("energy_ts_of_mu: mu in [0, 1]");
  return config.mean_energy * (mu + (1.0 - mu) * harmonic_of(config));
}

double c_ts_of_mu(const SystemConfig& config, double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw DomainError("c_ts_of_mu: mu in [0, 1]");
  return mu * c_max(config) + (1.0 - mu) * c_min(config);
}

double c_ts(const SystemConfig& config, double energy) {
  return c_ts_of_mu(config, mu_from_energy(config, energy));
}

double c_ts_direct(const SystemConfig& config, double energy) {
  energy_fraction(config, energy, "c_ts_direct");
  const double g = config.mean_snr;
  const double e = config.mean_energy;
  const double h = harmonic_of(config);
  const int n = config.n_relays;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double a = 2.0 * (j + 1) / g;
    sum += n * sign * std::exp(a) * binomial(n - 1, j) * exp_integral_e1(a) /
           (2.0 * (j + 1) * kLn2);
  }
  const double numerator =
      std::exp(2.0 / g) * (energy - e) * exp_integral_e1(2.0 / g) +
      (e * h - energy) * std::log(4.0) * sum;
  return numerator / (2.0 * e * (h - 1.0) * kLn2);
}

// ---------------------------------------------------------------------------

double tau_from_energy(const SystemConfig& config, double energy) {
  const double delta = energy_fraction(config, energy, "tau_from_energy");
  const double root = std::pow(delta, 1.0 / config.n_relays);
  if (root >= 1.0) return kInf;
  return -0.5 * config.mean_snr * std::log1p(-root);
}

double energy_tc_of_tau(const SystemConfig& config, double tau) {
  require_tradeoff(config, "energy_tc_of_tau");
  if (!(tau >= 0.0)) throw DomainError("energy_tc_of_tau: tau must be >= 0");
  const double below =
      std::pow(-std::expm1(-2.0 * tau / config.mean_snr), config.n_relays);
  return config.mean_energy * (1.0 + below * (harmonic_of(config) - 1.0));
}

double c_tc_of_tau(const SystemConfig& config, double tau) {
  config.validate();
  if (!(tau >= 0.0)) throw DomainError("c_tc_of_tau: tau must be >= 0");
  if (std::isinf(tau)) return c_min(config);
  const int n = config.n_relays;
  const double g = config.mean_snr;
  const double log_tau = std::log1p(tau);

  // Max-SNR relay used: E{C_kappa ; gamma_kappa >= tau}.
  double above = 0.0;
  for (int j = 0; j < n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double a = 2.0 * (j + 1) / g;
    above += n * sign * binomial(n - 1, j) * std::exp(-a * tau) *
             (exp_scaled_e1(a * (tau + 1.0)) + log_tau) /
             (2.0 * (j + 1) * kLn2);
  }

  // Max-energy relay used: its SNR is a single relay's SNR conditioned
  // below tau, and the other N-1 relays are below tau as well.
  const double b = 2.0 / g;
  const double single =
      (exp_scaled_e1(b) -
       std::exp(-b * tau) * (exp_scaled_e1(b * (1.0 + tau)) + log_tau)) /
      (2.0 * kLn2);
  const double others_below = std::pow(-std::expm1(-b * tau), n - 1);
  return above + single * others_below;
}

double c_tc(const SystemConfig& config, double energy) {
  return c_tc_of_tau(config, tau_from_energy(config, energy));
}

double c_tc_direct(const SystemConfig& config, double energy) {
  const double fraction = energy_fraction(config, energy, "c_tc_direct");
  const int n = config.n_relays;
  const double g = config.mean_snr;
  const double z = std::pow(fraction, 1.0 / n);
  const double log_rest = std::log(1.0 - z);
  const double shifted = 1.0 - g * log_rest / 2.0;  // 1 + tau

  const double first =
      std::pow(z, n - 1) / (2.0 * kLn2) *
      (std::exp(2.0 / g) * exp_integral_e1(2.0 / g) -
       std::exp(2.0 / g) * exp_integral_e1(2.0 / g - log_rest) -
       (1.0 - z) * std::log(shifted));

  double second = 0.0;
  for (int j = 0; j < n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double arg = 2.0 * (j + 1) * shifted / g;
    const double numerator =
        std::exp(arg) * exp_integral_e1(arg) + std::log(shifted);
    const double weight = n * binomial(n - 1, j) * std::pow(1.0 - z, j + 1);
    second += numerator / (2.0 / weight * sign * (j + 1) * kLn2);
  }
  return first + second;
}

// ---------------------------------------------------------------------------

double nu_from_energy(const SystemConfig& config, double energy) {
  require_two_relays(config, "nu_from_energy");
  energy_fraction(config, energy, "nu_from_energy");
  const double e = config.mean_energy;
  const double clamped = std::clamp(energy, e, 1.5 * e);
  const double gap = 3.0 * e - 2.0 * clamped;
  if (gap <= 0.0) return kInf;
  // sqrt(e / gap) - 1 written without cancellation near energy == e.
  const double r = std::sqrt(e / gap);
  return config.mean_snr / (2.0 * e) * (2.0 * (clamped - e) / gap) / (r + 1.0);
}

double energy_wd_of_nu(const SystemConfig& config, double nu) {
  require_two_relays(config, "energy_wd_of_nu");
  if (!(nu >= 0.0)) throw DomainError("energy_wd_of_nu: nu must be >= 0");
  if (std::isinf(nu)) return 1.5 * config.mean_energy;
  const double g = config.mean_snr;
  const double ratio = g / (g + 2.0 * nu * config.mean_energy);
  return 0.5 * config.mean_energy * (3.0 - ratio * ratio);
}

double c_wd_of_nu(const SystemConfig& config, double nu) {
  require_two_relays(config, "c_wd_of_nu");
  if (!(nu >= 0.0)) throw DomainError("c_wd_of_nu: nu must be >= 0");
  if (std::isinf(nu)) return c_min(config);
  const double g = config.mean_snr;
  const double b = 2.0 / g;
  const auto formula = [&](double v) {
    // x = 2 v mean_energy / mean_snr; numerator and denominator of the
    // closed form divided by mean_snr^2 e^{-2/mean_snr}.
    const double x = 2.0 * v * config.mean_energy / g;
    const double one_minus_x2 = 1.0 - x * x;
    const double cross = x > 0.0 ? x * x * exp_scaled_e1(b + b / x) : 0.0;
    return (2.0 * one_minus_x2 * exp_scaled_e1(b) + cross - exp_scaled_e1(2.0 * b)) /
           (2.0 * one_minus_x2 * kLn2);
  };
  return bridged(formula, nu, g / (2.0 * config.mean_energy));
}

double c_wd(const SystemConfig& config, double energy) {
  return c_wd_of_nu(config, nu_from_energy(config, energy));
}

double c_wd_direct(const SystemConfig& config, double energy) {
  require_two_relays(config, "c_wd_direct");
  energy_fraction(config, energy, "c_wd_direct");
  const double g = config.mean_snr;
  const double e = config.mean_energy;
  const double b = 2.0 / g;
  const auto formula = [&](double en) {
    const double y = 1.0 - std::sqrt(e / (3.0 * e - 2.0 * en));
    const double y2 = y * y;
    const double denominator = 2.0 * std::exp(-b) * (1.0 - y2) * kLn2;
    const double first =
        (2.0 * (1.0 - y2) * exp_integral_e1(b) - std::exp(b) * exp_integral_e1(2.0 * b)) /
        denominator;
    const double second =
        std::exp(-b / y) * y2 * exp_integral_e1(b * (1.0 - 1.0 / y)) / denominator;
    return first + second;
  };
  // y = -1 where 3e - 2 energy = e / 4.
  return bridged(formula, energy, 1.375 * e);
}

// ---------------------------------------------------------------------------

double outage_ts_of_mu(const SystemConfig& config, double mu) {
  config.validate();
  if (!(mu >= 0.0 && mu <= 1.0)) throw DomainError("outage_ts_of_mu: mu in [0, 1]");
  const double q = single_outage(config);
  return mu * std::pow(q, config.n_relays) + (1.0 - mu) * q;
}

double outage_ts(const SystemConfig& config, double delta) {
  return outage_ts_of_mu(config,
                         mu_from_energy(config, energy_from_delta(config, delta)));
}

double outage_ts_direct(const SystemConfig& config, double delta) {
  require_tradeoff(config, "outage_ts_direct");
  delta = checked_delta(delta, "outage_ts_direct");
  const double q = single_outage(config);
  return (1.0 - delta) * std::pow(q, config.n_relays) + delta * q;
}

double outage_ts_direct_energy(const SystemConfig& config, double energy) {
  energy_fraction(config, energy, "outage_ts_direct_energy");
  const double h = harmonic_of(config);
  const double ratio = energy / config.mean_energy;
  const double t = 2.0 * config.outage_threshold / config.mean_snr;
  const double q_n = std::pow(1.0 - std::exp(-t), config.n_relays);
  return std::exp(-t) *
         (1.0 - ratio + std::exp(t) * (ratio + (h - ratio) * q_n - 1.0)) /
         (h - 1.0);
}

double outage_tc_of_tau(const SystemConfig& config, double tau) {
  config.validate();
  if (!(tau >= 0.0)) throw DomainError("outage_tc_of_tau: tau must be >= 0");
  const double q = single_outage(config);
  if (tau <= config.outage_threshold) return std::pow(q, config.n_relays);
  if (std::isinf(tau)) return q;
  return q * std::pow(-std::expm1(-2.0 * tau / config.mean_snr),
                      config.n_relays - 1);
}

double outage_tc(const SystemConfig& config, double delta) {
  return outage_tc_of_tau(
      config, tau_from_energy(config, energy_from_delta(config, delta)));
}

double outage_tc_direct(const SystemConfig& config, double delta) {
  require_tradeoff(config, "outage_tc_direct");
  delta = checked_delta(delta, "outage_tc_direct");
  const int n = config.n_relays;
  const double q = single_outage(config);
  const double breakpoint = std::pow(q, n);
  if (delta <= breakpoint) return breakpoint;
  return q * std::pow(delta, (n - 1.0) / n);
}

double outage_tc_direct_energy(const SystemConfig& config, double energy) {
  energy_fraction(config, energy, "outage_tc_direct_energy");
  const int n = config.n_relays;
  const double h = harmonic_of(config);
  const double q = 1.0 - std::exp(-2.0 * config.outage_threshold / config.mean_snr);
  const double ratio = energy / config.mean_energy;
  if (ratio <= 1.0 + (h - 1.0) * std::pow(q, n)) return std::pow(q, n);
  return q * std::pow((ratio - 1.0) / (h - 1.0), (n - 1.0) / n);
}

double outage_wd_of_nu(const SystemConfig& config, double nu) {
  require_two_relays(config, "outage_wd_of_nu");
  if (!(nu >= 0.0)) throw DomainError("outage_wd_of_nu: nu must be >= 0");
  const double q = single_outage(config);
  if (std::isinf(nu)) return q;
  const double g = config.mean_snr;
  const double t = config.outage_threshold;
  const auto formula = [&](double v) {
    const double x = 2.0 * v * config.mean_energy / g;
    const double x2 = x * x;
    const double tail = v > 0.0 ? std::exp(-t / (v * config.mean_energy)) : 0.0;
    return (q * q + x2 * (std::exp(-2.0 * t / g) * (2.0 - tail) - 1.0)) /
           (1.0 - x2);
  };
  return bridged(formula, nu, g / (2.0 * config.mean_energy));
}

double outage_wd(const SystemConfig& config, double delta) {
  require_two_relays(config, "outage_wd");
  return outage_wd_of_nu(
      config, nu_from_energy(config, energy_from_delta(config, delta)));
}

namespace {

// Shared body of the delta and energy composites: s = 1 + 2 nu e / g.
double outage_wd_composite(const SystemConfig& config, double s) {
  const double a2 = 2.0 * config.outage_threshold / config.mean_snr;
  const double y = 1.0 - s;
  const double y2 = y * y;
  return (std::exp(-2.0 * a2) * std::pow(std::exp(a2) - 1.0, 2) +
          y2 * (std::exp(-a2) * (2.0 - std::exp(a2 / y)) - 1.0)) /
         (1.0 - y2);
}

}  // namespace

double outage_wd_direct(const SystemConfig& config, double delta) {
  require_two_relays(config, "outage_wd_direct");
  delta = checked_delta(delta, "outage_wd_direct");
  if (delta >= 1.0) return single_outage(config);
  if (delta <= 0.0) return std::pow(single_outage(config), 2);
  const auto formula = [&](double d) {
    return outage_wd_composite(config, std::sqrt(1.0 / (1.0 - d)));
  };
  return bridged(formula, delta, 0.75);
}

double outage_wd_direct_energy(const SystemConfig& config, double energy) {
  require_two_relays(config, "outage_wd_direct_energy");
  energy_fraction(config, energy, "outage_wd_direct_energy");
  const double e = config.mean_energy;
  if (energy >= 1.5 * e) return single_outage(config);
  if (energy <= e) return std::pow(single_outage(config), 2);
  const auto formula = [&](double en) {
    return outage_wd_composite(config, std::sqrt(e / (3.0 * e - 2.0 * en)));
  };
  return bridged(formula, energy, 1.375 * e);
}

// ---------------------------------------------------------------------------

namespace {

double asymptotic_factor(TradeoffScheme scheme, const SystemConfig& config,
                         double delta) {
  require_tradeoff(config, "asymptotic_outage");
  delta = checked_delta(delta, "asymptotic_outage");
  switch (scheme) {
    case TradeoffScheme::TimeSharing:
      return delta;
    case TradeoffScheme::ThresholdChecking:
      return std::pow(delta, (config.n_relays - 1.0) / config.n_relays);
    case TradeoffScheme::WeightedDifference:
      require_two_relays(config, "weighted-difference asymptotics");
      return 1.0 - std::sqrt(1.0 - delta);
  }
  throw DomainError("asymptotic_outage: unknown scheme");
}

}  // namespace

double asymptotic_outage(TradeoffScheme scheme, const SystemConfig& config,
                         double delta) {
  return 2.0 * config.outage_threshold / config.mean_snr *
         asymptotic_factor(scheme, config, delta);
}

double array_gain(TradeoffScheme scheme, const SystemConfig& config,
                  double delta) {
  const double factor = asymptotic_factor(scheme, config, delta);
  return factor > 0.0 ? 1.0 / (2.0 * factor) : kInf;
}

// ---------------------------------------------------------------------------

double pareto_outage_energy(const SystemConfig& config, double zeta) {
  require_two_relays(config, "pareto_outage_energy");
  if (!(zeta >= 0.0)) throw DomainError("pareto_outage_energy: zeta must be >= 0");
  if (zeta == 0.0) return pareto_outage_energy_min(config);
  const double e = config.mean_energy;
  if (std::isinf(zeta)) return 1.5 * e;
  const double a2 = 2.0 * config.outage_threshold / config.mean_snr;
  const double grow = std::exp(a2);
  return std::exp(-2.0 * a2) / 2.0 *
         (e * (2.0 - 2.0 * grow + 3.0 * grow * grow) +
          2.0 * std::exp(-1.0 / (zeta * e)) * (zeta * e + 1.0) * (grow - 1.0) / zeta);
}

double pareto_no_outage(const SystemConfig& config, double zeta) {
  require_two_relays(config, "pareto_no_outage");
  if (!(zeta >= 0.0)) throw DomainError("pareto_no_outage: zeta must be >= 0");
  const double a2 = 2.0 * config.outage_threshold / config.mean_snr;
  const double grow = std::exp(a2);
  // exp(-1/(zeta e)) is 0 at zeta == 0 and 1 at zeta == inf.
  const double tail = std::exp(-1.0 / (zeta * config.mean_energy));
  return std::exp(-2.0 * a2) * (2.0 * grow - tail * (grow - 1.0) - 1.0);
}

double pareto_outage_energy_min(const SystemConfig& config) {
  require_two_relays(config, "pareto_outage_energy_min");
  const double a2 = 2.0 * config.outage_threshold / config.mean_snr;
  return config.mean_energy * (1.5 + std::exp(-2.0 * a2) - std::exp(-a2));
}

std::pair<double, double> delta_range_outage(const SystemConfig& config) {
  require_two_relays(config, "delta_range_outage");
  const double a2 = 2.0 * config.outage_threshold / config.mean_snr;
  return {1.0 - 2.0 * (std::exp(-a2) - std::exp(-2.0 * a2)), 1.0};
}

}  // namespace swipt::closedform
