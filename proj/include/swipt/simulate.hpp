#pragma once

#include <cstdint>
#include <vector>

#include "swipt/model.hpp"
#include "swipt/schemes.hpp"

namespace swipt::simulate {

struct MonteCarloConfig {
  std::uint64_t n_frames = 1'000'000;
  std::uint64_t seed = 1;
  /// Frames per scheduling unit; 0 picks min(10^4, n_frames). Results do not
  /// depend on it.
  std::uint64_t batch_size = 0;
  /// Worker threads; 0 uses the hardware concurrency. Results do not depend
  /// on it.
  unsigned workers = 1;
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;
};

struct SimulationResult {
  Estimate capacity;
  Estimate energy;
  Estimate outage;
  std::vector<std::uint64_t> selection_counts;
  /// Fewer than 100 outage events were observed.
  bool outage_low_confidence = false;
};

/// Frame k is drawn from FrameStream(seed, k); time sharing reads one extra
/// uniform after the frame as its coin. Statistics are reduced over fixed
/// blocks of frames in block order, so the result is bit-identical for any
/// batch size and worker count.
SimulationResult run(const SystemConfig& config, const SchemeParam& scheme,
                     const MonteCarloConfig& mc);

}  // namespace swipt::simulate
