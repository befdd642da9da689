#pragma once

#include <utility>

#include "swipt/model.hpp"

// Closed-form tradeoff expressions for i.i.d. Rayleigh-faded DF relays.
//
// Conventions: `energy` is an average transferred energy in the units of
// SystemConfig::mean_energy, `delta` is the tradeoff factor in [0, 1] that
// positions an energy inside [mean_energy, H_N mean_energy]. Every curve
// "as a function of energy/delta" is computed by inverting to the scheme's
// tuning parameter and evaluating the parameter form; the `*_direct`
// functions transcribe the fully substituted composite expressions and exist
// to cross-check the production path.
//
// Curve functions need N >= 2 (the energy range collapses for N = 1) and
// throw DomainError otherwise. Weighted-difference and Pareto functions need
// N == 2 and throw DimensionError otherwise.

namespace swipt {

/// One point of a tradeoff curve: average transferred energy, performance
/// value (capacity in bits/s/Hz or a probability) and its tradeoff factor.
struct TradeoffPoint {
  double energy = 0.0;
  double value = 0.0;
  double delta = 0.0;
};

}  // namespace swipt

namespace swipt::closedform {

// -- boundaries ------------------------------------------------------------

/// Ergodic capacity of a single relay chosen independently of its SNR.
double c_min(const SystemConfig& config);
/// Ergodic capacity of max-SNR selection over N relays.
double c_max(const SystemConfig& config);

/// (mean_energy, H_N * mean_energy).
std::pair<double, double> energy_bounds(const SystemConfig& config);

double delta_from_energy(const SystemConfig& config, double energy);
double energy_from_delta(const SystemConfig& config, double delta);

// -- time sharing -----------------------------------------------------------

double mu_from_energy(const SystemConfig& config, double energy);
double energy_ts_of_mu(const SystemConfig& config, double mu);
double c_ts_of_mu(const SystemConfig& config, double mu);
double c_ts(const SystemConfig& config, double energy);
double c_ts_direct(const SystemConfig& config, double energy);

// -- threshold checking -----------------------------------------------------

/// +inf at energy == H_N mean_energy (always select the max-energy relay).
double tau_from_energy(const SystemConfig& config, double energy);
double energy_tc_of_tau(const SystemConfig& config, double tau);
double c_tc_of_tau(const SystemConfig& config, double tau);
double c_tc(const SystemConfig& config, double energy);
double c_tc_direct(const SystemConfig& config, double energy);

// -- weighted difference (N = 2) -------------------------------------------

/// +inf at energy == 1.5 mean_energy.
double nu_from_energy(const SystemConfig& config, double energy);
double energy_wd_of_nu(const SystemConfig& config, double nu);
/// Has a removable singularity at mean_snr == 2 nu mean_energy, bridged by
/// averaging the two neighbours nu (1 +- 1e-6).
double c_wd_of_nu(const SystemConfig& config, double nu);
double c_wd(const SystemConfig& config, double energy);
/// Valid on the open interval (mean_energy, 1.5 mean_energy).
double c_wd_direct(const SystemConfig& config, double energy);

// -- outage -----------------------------------------------------------------

double outage_ts_of_mu(const SystemConfig& config, double mu);
double outage_ts(const SystemConfig& config, double delta);
double outage_ts_direct(const SystemConfig& config, double delta);
double outage_ts_direct_energy(const SystemConfig& config, double energy);

double outage_tc_of_tau(const SystemConfig& config, double tau);
double outage_tc(const SystemConfig& config, double delta);
double outage_tc_direct(const SystemConfig& config, double delta);
double outage_tc_direct_energy(const SystemConfig& config, double energy);

double outage_wd_of_nu(const SystemConfig& config, double nu);
/// delta == 1 returns the energy-only limit.
double outage_wd(const SystemConfig& config, double delta);
double outage_wd_direct(const SystemConfig& config, double delta);
double outage_wd_direct_energy(const SystemConfig& config, double energy);

// -- high-SNR behaviour -----------------------------------------------------

enum class TradeoffScheme { TimeSharing, ThresholdChecking, WeightedDifference };

/// First-order outage 2 gamma_th / mean_snr * g(delta).
double asymptotic_outage(TradeoffScheme scheme, const SystemConfig& config,
                         double delta);
/// Array gain 1 / (2 g(delta)); +inf at delta == 0.
double array_gain(TradeoffScheme scheme, const SystemConfig& config,
                  double delta);

// -- Pareto-optimal outage policy (N = 2) ------------------------------------

/// Average energy of the no-outage Pareto policy with multiplier zeta.
/// zeta == 0 returns the zeta -> 0+ limit, zeta == +inf returns 1.5 mean_energy.
double pareto_outage_energy(const SystemConfig& config, double zeta);
/// Probability of no outage under the same policy.
double pareto_no_outage(const SystemConfig& config, double zeta);
double pareto_outage_energy_min(const SystemConfig& config);
/// Tradeoff factors reachable by the policy: [delta_lo, 1].
std::pair<double, double> delta_range_outage(const SystemConfig& config);

}  // namespace swipt::closedform
