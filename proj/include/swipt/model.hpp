#pragma once

#include <cstddef>
#include <vector>

#include "swipt/rng.hpp"

namespace swipt {

/// Statistics shared by every relay: N relays, mean per-hop SNR, mean
/// harvestable energy per relay and the outage SNR threshold. All SNRs are
/// linear.
struct SystemConfig {
  int n_relays = 2;
  double mean_snr = 10.0;
  double mean_energy = 1.0;
  double outage_threshold = 1.0;

  /// Validating constructor; throws DomainError on any non-finite or
  /// non-positive field.
  static SystemConfig make(int n_relays, double mean_snr, double mean_energy,
                           double outage_threshold);

  /// Threshold from a fixed rate r (bits/s/Hz): 2^{2r} - 1.
  static SystemConfig from_rate(int n_relays, double mean_snr,
                                double mean_energy, double rate);

  /// Mean energy from the harvester efficiency and noise power:
  /// mean_energy = beta * noise_power * mean_snr, 0 < beta <= 1.
  static SystemConfig from_physical(int n_relays, double mean_snr, double beta,
                                    double noise_power,
                                    double outage_threshold);

  void validate() const;

  SystemConfig with_relays(int n) const;
  SystemConfig with_mean_snr(double snr) const;
};

double db_to_linear(double db);
double linear_to_db(double linear);
double rate_to_threshold(double rate);

/// One frame: end-to-end DF SNR and harvestable energy per relay.
struct ChannelFrame {
  std::vector<double> snr;
  std::vector<double> energy;

  std::size_t size() const noexcept { return snr.size(); }
};

/// Draws a frame in the fixed order (SR_1, RD_1, energy_1, SR_2, ...).
/// Each end-to-end SNR is the minimum of its two hop SNRs.
ChannelFrame sample_frame(const SystemConfig& config, FrameStream& rng);

/// As sample_frame, reusing the storage of `frame`.
void sample_frame_into(const SystemConfig& config, FrameStream& rng,
                       ChannelFrame& frame);

/// 1/2 log2(1 + snr): half-duplex DF relaying uses two slots.
double instantaneous_capacity(double snr);

/// 1 if snr < threshold, else 0. snr == threshold is not an outage.
int outage_indicator(double snr, double threshold);

}  // namespace swipt
