#include "swipt/schemes.hpp"

#include <cmath>
#include <limits>

#include "swipt/errors.hpp"

namespace swipt {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_two_relays(std::size_t n, const char* what) {
  if (n != 2) {
    throw DimensionError(std::string(what) + " is defined for two relays only");
  }
}

void require_nonnegative(double value, const char* what) {
  if (std::isnan(value) || value < 0.0) {
    throw DomainError(std::string(what) + " must be >= 0");
  }
}

}  // namespace

WeightedDifference weighted_difference(double nu) {
  if (std::isinf(nu) && nu > 0.0) return {0.0, true};
  return {nu, false};
}

ParetoOptimal pareto_optimal(double zeta, Metric metric) {
  if (std::isinf(zeta) && zeta > 0.0) return {0.0, metric, true};
  return {zeta, metric, false};
}

void validate(const SchemeParam& scheme, const SystemConfig& config) {
  std::visit(
      overloaded{
          [](const TimeSharing& s) {
            if (!(s.mu >= 0.0 && s.mu <= 1.0)) {
              throw DomainError("time sharing: mu must lie in [0, 1]");
            }
          },
          [](const ThresholdChecking& s) {
            require_nonnegative(s.tau, "threshold checking: tau");
          },
          [&](const WeightedDifference& s) {
            require_two_relays(static_cast<std::size_t>(config.n_relays),
                               "weighted difference");
            if (!s.energy_only) {
              require_nonnegative(s.nu, "weighted difference: nu");
              if (std::isinf(s.nu)) {
                throw DomainError("weighted difference: use energy_only for nu = inf");
              }
            }
          },
          [&](const ParetoOptimal& s) {
            require_two_relays(static_cast<std::size_t>(config.n_relays),
                               "pareto selection");
            if (!s.energy_only) {
              require_nonnegative(s.zeta, "pareto selection: zeta");
              if (std::isinf(s.zeta)) {
                throw DomainError("pareto selection: use energy_only for zeta = inf");
              }
            }
          },
      },
      scheme);
}

std::string scheme_name(const SchemeParam& scheme) {
  return std::visit(
      overloaded{
          [](const TimeSharing&) -> std::string { return "time-sharing"; },
          [](const ThresholdChecking&) -> std::string {
            return "threshold-checking";
          },
          [](const WeightedDifference&) -> std::string {
            return "weighted-difference";
          },
          [](const ParetoOptimal& s) -> std::string {
            return s.metric == Metric::Capacity ? "pareto-capacity"
                                                : "pareto-outage";
          },
      },
      scheme);
}

double scheme_parameter(const SchemeParam& scheme) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(
      overloaded{
          [](const TimeSharing& s) { return s.mu; },
          [](const ThresholdChecking& s) { return s.tau; },
          [](const WeightedDifference& s) { return s.energy_only ? inf : s.nu; },
          [](const ParetoOptimal& s) { return s.energy_only ? inf : s.zeta; },
      },
      scheme);
}

std::size_t argmax_snr(const ChannelFrame& frame) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < frame.snr.size(); ++i) {
    if (frame.snr[i] > frame.snr[best]) best = i;
  }
  return best;
}

std::size_t argmax_energy(const ChannelFrame& frame) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < frame.energy.size(); ++i) {
    if (frame.energy[i] > frame.energy[best]) best = i;
  }
  return best;
}

std::size_t select_time_sharing(const ChannelFrame& frame, double mu,
                                double coin) {
  return coin < mu ? argmax_snr(frame) : argmax_energy(frame);
}

std::size_t select_threshold(const ChannelFrame& frame, double tau) {
  const std::size_t kappa = argmax_snr(frame);
  return frame.snr[kappa] >= tau ? kappa : argmax_energy(frame);
}

std::size_t select_weighted_difference(const ChannelFrame& frame, double nu) {
  require_two_relays(frame.size(), "weighted difference");
  const double lhs = frame.snr[0] - frame.snr[1];
  const double rhs = nu * (frame.energy[1] - frame.energy[0]);
  return lhs < rhs ? 1 : 0;
}

double pareto_metric(Metric metric, double snr, double threshold) {
  if (metric == Metric::Capacity) return 0.5 * std::log2(1.0 + snr);
  return outage_indicator(snr, threshold) == 0 ? 1.0 : 0.0;
}

std::size_t select_pareto(const ChannelFrame& frame, double zeta,
                          Metric metric, double threshold) {
  require_two_relays(frame.size(), "pareto selection");
  const double lhs = pareto_metric(metric, frame.snr[0], threshold) -
                     pareto_metric(metric, frame.snr[1], threshold);
  const double rhs = zeta * (frame.energy[1] - frame.energy[0]);
  if (lhs > rhs) return 0;
  if (lhs < rhs) return 1;
  return frame.energy[1] > frame.energy[0] ? 1 : 0;
}

std::size_t select(const SchemeParam& scheme, const ChannelFrame& frame,
                   double threshold, double coin) {
  return std::visit(
      overloaded{
          [&](const TimeSharing& s) {
            return select_time_sharing(frame, s.mu, coin);
          },
          [&](const ThresholdChecking& s) {
            return select_threshold(frame, s.tau);
          },
          [&](const WeightedDifference& s) {
            if (s.energy_only) return argmax_energy(frame);
            return select_weighted_difference(frame, s.nu);
          },
          [&](const ParetoOptimal& s) {
            if (s.energy_only) return argmax_energy(frame);
            return select_pareto(frame, s.zeta, s.metric, threshold);
          },
      },
      scheme);
}

}  // namespace swipt
