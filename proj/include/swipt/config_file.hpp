#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>

#include "swipt/model.hpp"

namespace swipt {

/// Contents of a key-value configuration file.
///
///     # comment
///     n_relays = 2
///     mean_snr_db = 20        # or: mean_snr = 100 (linear)
///     mean_energy = 1
///     outage_threshold = 1    # or: rate = 0.5
///     seed = 42
///
/// Every key is optional; unspecified fields keep their defaults.
struct ConfigFile {
  std::optional<int> n_relays;
  std::optional<double> mean_snr;  // linear, converted from dB if needed
  std::optional<double> mean_energy;
  std::optional<double> outage_threshold;  // linear, converted from rate
  std::optional<std::uint64_t> seed;

  /// Overlays the present fields on `base` and validates the result.
  SystemConfig apply(SystemConfig base) const;
};

/// Throws std::invalid_argument with the offending line number on unknown
/// keys, duplicate or conflicting keys and malformed values.
ConfigFile parse_config(std::istream& in);
ConfigFile load_config(const std::string& path);

}  // namespace swipt
