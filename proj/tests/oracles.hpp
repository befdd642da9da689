#pragma once

// Reference values computed without the library's closed forms: direct
// numerical quadrature of the defining integrals and Boost special functions.

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/expint.hpp>

namespace oracle {

inline double half_log2(double x) { return 0.5 * std::log2(1.0 + x); }

/// E1(x) = int_1^inf e^{-x y} / y dy.
inline double e1_quadrature(double x) {
  boost::math::quadrature::exp_sinh<double> rule;
  // Shift to [0, inf): y = 1 + t.
  return rule.integrate([x](double t) { return std::exp(-x * (1.0 + t)) / (1.0 + t); },
                        1e-14);
}

inline double e1_boost(double x) { return -boost::math::expint(-x); }

/// Density of the largest of n i.i.d. Exp(mean m) variables.
inline double max_density(double x, int n, double m) {
  const double f = std::exp(-x / m) / m;
  const double cdf = -std::expm1(-x / m);
  return n * f * std::pow(cdf, n - 1);
}

/// E[F(max of n end-to-end SNRs)], each Exp(mean_snr / 2).
inline double max_capacity(int n, double mean_snr) {
  boost::math::quadrature::exp_sinh<double> rule;
  return rule.integrate(
      [&](double x) { return half_log2(x) * max_density(x, n, mean_snr / 2.0); }, 1e-13);
}

/// Threshold checking: max-SNR relay if it reaches tau, else max-energy
/// relay (whose SNR is a single relay's SNR given all lie below tau).
inline double threshold_capacity(int n, double mean_snr, double tau) {
  const double m = mean_snr / 2.0;
  boost::math::quadrature::exp_sinh<double> tail;
  boost::math::quadrature::tanh_sinh<double> finite;
  const double above =
      tail.integrate([&](double t) { return half_log2(tau + t) * max_density(tau + t, n, m); },
                     1e-13);
  double below = 0.0;
  if (tau > 0.0) {
    below = finite.integrate(
                [&](double x) { return half_log2(x) * std::exp(-x / m) / m; }, 0.0, tau, 1e-13) *
            std::pow(-std::expm1(-tau / m), n - 1);
  }
  return above + below;
}

/// Pareto rule, outage metric, two relays, conditioned on the outage pattern:
/// both clear or both fail -> larger energy (tie); exactly one clears -> it is
/// kept unless the other's energy surplus exceeds 1/zeta. For an energy
/// surplus threshold u (in mean-energy units) on Exp energies,
/// P(keep) = 1 - e^{-u}/2 and E[energy] = 1 + e^{-u}(1+u)/2.
struct ParetoOutage {
  double energy;
  double no_outage;
};

inline ParetoOutage pareto_outage_enumerated(double mean_snr, double mean_energy,
                                             double threshold, double zeta) {
  const double p = std::exp(-2.0 * threshold / mean_snr);
  const double q = 1.0 - p;
  const double u = 1.0 / (zeta * mean_energy);
  const double keep = 1.0 - 0.5 * std::exp(-u);
  const double split_energy = 1.0 + 0.5 * std::exp(-u) * (1.0 + u);
  return {mean_energy * ((p * p + q * q) * 1.5 + 2.0 * p * q * split_energy),
          p * p + 2.0 * p * q * keep};
}

}  // namespace oracle

namespace oracle {

/// Probability that the weighted-difference rule keeps relay 1 given the SNR
/// gap g = gamma_1 - gamma_2: energy gap e_2 - e_1 is Laplace(mean_energy).
inline double wd_keep_first(double gap, double nu, double mean_energy) {
  if (nu == 0.0) return gap >= 0.0 ? 1.0 : 0.0;
  const double d = gap / (nu * mean_energy);
  return d >= 0.0 ? 1.0 - 0.5 * std::exp(-d) : 0.5 * std::exp(d);
}

/// 2 E[h(gamma_1) P(keep relay 1 | gammas)] by nested quadrature, split at
/// the kink gamma_2 = gamma_1.
template <class H>
double wd_expectation(double mean_snr, double mean_energy, double nu, H h) {
  const double m = mean_snr / 2.0;
  boost::math::quadrature::exp_sinh<double> outer_rule, tail_rule;
  boost::math::quadrature::tanh_sinh<double> finite_rule;
  const auto inner = [&](double g1) {
    const auto integrand = [&](double g2) {
      return wd_keep_first(g1 - g2, nu, mean_energy) * std::exp(-g2 / m) / m;
    };
    const double head = g1 > 0.0 ? finite_rule.integrate(integrand, 0.0, g1, 1e-12) : 0.0;
    const double tail =
        tail_rule.integrate([&](double t) { return integrand(g1 + t); }, 1e-12);
    return head + tail;
  };
  return 2.0 * outer_rule.integrate(
                   [&](double g1) { return h(g1) * std::exp(-g1 / m) / m * inner(g1); }, 1e-11);
}

inline double wd_capacity(double mean_snr, double mean_energy, double nu) {
  return wd_expectation(mean_snr, mean_energy, nu, half_log2);
}

inline double wd_outage(double mean_snr, double mean_energy, double threshold, double nu) {
  const double m = mean_snr / 2.0;
  boost::math::quadrature::tanh_sinh<double> finite_rule;
  boost::math::quadrature::exp_sinh<double> tail_rule;
  // Selected SNR below threshold: integrate gamma_1 over [0, threshold].
  const auto inner = [&](double g1) {
    const auto integrand = [&](double g2) {
      return wd_keep_first(g1 - g2, nu, mean_energy) * std::exp(-g2 / m) / m;
    };
    const double head = g1 > 0.0 ? finite_rule.integrate(integrand, 0.0, g1, 1e-12) : 0.0;
    return head + tail_rule.integrate([&](double t) { return integrand(g1 + t); }, 1e-12);
  };
  return 2.0 * finite_rule.integrate(
                   [&](double g1) { return std::exp(-g1 / m) / m * inner(g1); }, 0.0,
                   threshold, 1e-11);
}

}  // namespace oracle
