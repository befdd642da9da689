#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "swipt/model.hpp"

namespace swipt {

// Relay indices are zero-based throughout the library.

enum class Metric { Capacity, OutageIndicator };

/// Select the max-SNR relay with probability mu, else the max-energy relay.
struct TimeSharing {
  double mu = 1.0;
};

/// Select the max-SNR relay if its SNR reaches tau, else the max-energy
/// relay. tau = +inf always selects the max-energy relay.
struct ThresholdChecking {
  double tau = 0.0;
};

/// Two relays: compare the SNR difference against nu times the energy
/// difference. `energy_only` stands for nu = +inf.
struct WeightedDifference {
  double nu = 0.0;
  bool energy_only = false;
};

/// Two relays: Lagrangian-optimal rule F(g1) - F(g2) vs zeta (e2 - e1).
/// `energy_only` stands for zeta = +inf.
struct ParetoOptimal {
  double zeta = 0.0;
  Metric metric = Metric::Capacity;
  bool energy_only = false;
};

using SchemeParam =
    std::variant<TimeSharing, ThresholdChecking, WeightedDifference,
                 ParetoOptimal>;

/// Maps nu = +inf onto the energy-only flag.
WeightedDifference weighted_difference(double nu);
/// Maps zeta = +inf onto the energy-only flag.
ParetoOptimal pareto_optimal(double zeta, Metric metric);

/// Checks parameter ranges and the N = 2 restriction. Throws DomainError
/// for out-of-range parameters and DimensionError for N != 2 where needed.
void validate(const SchemeParam& scheme, const SystemConfig& config);

std::string scheme_name(const SchemeParam& scheme);
double scheme_parameter(const SchemeParam& scheme);

/// Lowest index attaining the maximum SNR.
std::size_t argmax_snr(const ChannelFrame& frame);
/// Lowest index attaining the maximum energy.
std::size_t argmax_energy(const ChannelFrame& frame);

std::size_t select_time_sharing(const ChannelFrame& frame, double mu,
                                double coin);
std::size_t select_threshold(const ChannelFrame& frame, double tau);

/// Ties (g1 - g2 == nu (e2 - e1)) go to relay 0. Requires two relays.
std::size_t select_weighted_difference(const ChannelFrame& frame, double nu);

/// Pareto metric value of one relay: half log2(1 + snr) for Capacity, the
/// no-outage indicator (snr >= threshold) for OutageIndicator.
double pareto_metric(Metric metric, double snr, double threshold);

/// Ties go to the relay with more energy, then relay 0. Requires two relays.
std::size_t select_pareto(const ChannelFrame& frame, double zeta,
                          Metric metric, double threshold);

/// Dispatches on the scheme; `coin` is only read by time sharing.
std::size_t select(const SchemeParam& scheme, const ChannelFrame& frame,
                   double threshold, double coin);

}  // namespace swipt
