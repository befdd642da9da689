#pragma once

// Discretised two-relay model for the per-state optimality check: SNR and
// energy of each relay take one of four equiprobable levels, so the state
// space has 4^4 = 256 equally likely states.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "swipt/model.hpp"
#include "swipt/schemes.hpp"

namespace toy {

inline constexpr std::array<double, 4> kSnr{0.3, 1.0, 2.5, 7.0};
inline constexpr std::array<double, 4> kEnergy{0.2, 0.9, 1.6, 3.1};

struct Report {
  int states = 0;
  int rule_mismatches = 0;     // rule picks a relay with strictly lower Lagrangian
  int improving_deviations = 0;  // deviation with more F and no less energy
};

inline Report check(swipt::Metric metric, double zeta, double threshold) {
  Report r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const swipt::ChannelFrame f{{kSnr[a], kSnr[b]}, {kEnergy[c], kEnergy[d]}};
          std::array<double, 2> value{}, lagrangian{};
          for (std::size_t i = 0; i < 2; ++i) {
            value[i] = swipt::pareto_metric(metric, f.snr[i], threshold);
            lagrangian[i] = value[i] + zeta * f.energy[i];
          }
          const std::size_t chosen = swipt::select_pareto(f, zeta, metric, threshold);
          const std::size_t other = 1 - chosen;
          ++r.states;
          if (lagrangian[chosen] < lagrangian[other]) ++r.rule_mismatches;
          const double gain_f = value[other] - value[chosen];
          const double gain_e = f.energy[other] - f.energy[chosen];
          if (gain_f > 0.0 && gain_e >= 0.0) ++r.improving_deviations;
        }
  return r;
}

}  // namespace toy
