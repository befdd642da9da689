#include "swipt/config_file.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string_view>

namespace swipt {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, int line) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("config line " + std::to_string(line) +
                                ": cannot parse '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

SystemConfig ConfigFile::apply(SystemConfig base) const {
  if (n_relays) base.n_relays = *n_relays;
  if (mean_snr) base.mean_snr = *mean_snr;
  if (mean_energy) base.mean_energy = *mean_energy;
  if (outage_threshold) base.outage_threshold = *outage_threshold;
  base.validate();
  return base;
}

ConfigFile parse_config(std::istream& in) {
  ConfigFile out;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line) +
                                  ": expected key = value");
    }
    const std::string key(trim(text.substr(0, eq)));
    const std::string_view value = trim(text.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw std::invalid_argument("config line " + std::to_string(line) +
                                  ": duplicate key '" + key + "'");
    }
    if (key == "n_relays") {
      out.n_relays = parse_number<int>(value, line);
    } else if (key == "mean_snr") {
      out.mean_snr = parse_number<double>(value, line);
    } else if (key == "mean_snr_db") {
      out.mean_snr = db_to_linear(parse_number<double>(value, line));
    } else if (key == "mean_energy") {
      out.mean_energy = parse_number<double>(value, line);
    } else if (key == "outage_threshold") {
      out.outage_threshold = parse_number<double>(value, line);
    } else if (key == "rate") {
      out.outage_threshold = rate_to_threshold(parse_number<double>(value, line));
    } else if (key == "seed") {
      out.seed = parse_number<std::uint64_t>(value, line);
    } else {
      throw std::invalid_argument("config line " + std::to_string(line) +
                                  ": unknown key '" + key + "'");
    }
  }
  if (seen.count("mean_snr") && seen.count("mean_snr_db")) {
    throw std::invalid_argument("config: mean_snr and mean_snr_db are exclusive");
  }
  if (seen.count("outage_threshold") && seen.count("rate")) {
    throw std::invalid_argument("config: outage_threshold and rate are exclusive");
  }
  return out;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace swipt
