#include "swipt/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swipt/errors.hpp"

namespace swipt {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError(std::string("SystemConfig: ") + name +
                      " must be finite and > 0");
  }
}

}  // namespace

SystemConfig SystemConfig::make(int n_relays, double mean_snr,
                                double mean_energy, double outage_threshold) {
  SystemConfig config{n_relays, mean_snr, mean_energy, outage_threshold};
  config.validate();
  return config;
}

SystemConfig SystemConfig::from_rate(int n_relays, double mean_snr,
                                     double mean_energy, double rate) {
  require_positive(rate, "rate");
  return make(n_relays, mean_snr, mean_energy, rate_to_threshold(rate));
}

SystemConfig SystemConfig::from_physical(int n_relays, double mean_snr,
                                         double beta, double noise_power,
                                         double outage_threshold) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw DomainError("SystemConfig: beta must lie in (0, 1]");
  }
  require_positive(noise_power, "noise_power");
  require_positive(mean_snr, "mean_snr");
  return make(n_relays, mean_snr, beta * noise_power * mean_snr,
              outage_threshold);
}

void SystemConfig::validate() const {
  if (n_relays < 1) throw DomainError("SystemConfig: n_relays must be >= 1");
  require_positive(mean_snr, "mean_snr");
  require_positive(mean_energy, "mean_energy");
  require_positive(outage_threshold, "outage_threshold");
}

SystemConfig SystemConfig::with_relays(int n) const {
  return make(n, mean_snr, mean_energy, outage_threshold);
}

SystemConfig SystemConfig::with_mean_snr(double snr) const {
  return make(n_relays, snr, mean_energy, outage_threshold);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double rate_to_threshold(double rate) { return std::exp2(2.0 * rate) - 1.0; }

ChannelFrame sample_frame(const SystemConfig& config, FrameStream& rng) {
  ChannelFrame frame;
  sample_frame_into(config, rng, frame);
  return frame;
}

void sample_frame_into(const SystemConfig& config, FrameStream& rng,
                       ChannelFrame& frame) {
  const auto n = static_cast<std::size_t>(config.n_relays);
  frame.snr.resize(n);
  frame.energy.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double source_relay = rng.exponential(config.mean_snr);
    const double relay_destination = rng.exponential(config.mean_snr);
    frame.snr[i] = std::min(source_relay, relay_destination);
    frame.energy[i] = rng.exponential(config.mean_energy);
  }
}

double instantaneous_capacity(double snr) {
  if (!(snr >= 0.0) || !std::isfinite(snr)) {
    throw DomainError("instantaneous_capacity: snr must be finite and >= 0");
  }
  return 0.5 * std::log2(1.0 + snr);
}

int outage_indicator(double snr, double threshold) {
  return snr < threshold ? 1 : 0;
}

}  // namespace swipt
