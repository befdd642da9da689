#include "swipt/figures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "swipt/errors.hpp"
#include "swipt/frontier.hpp"

namespace swipt::figures {
namespace {

using closedform::TradeoffScheme;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const char* short_name(TradeoffScheme s) {
  switch (s) {
    case TradeoffScheme::TimeSharing: return "ts";
    case TradeoffScheme::ThresholdChecking: return "tc";
    case TradeoffScheme::WeightedDifference: return "wd";
  }
  return "?";
}

std::vector<TradeoffScheme> schemes_for(const SystemConfig& config) {
  if (config.n_relays == 2) {
    return {TradeoffScheme::TimeSharing, TradeoffScheme::ThresholdChecking,
            TradeoffScheme::WeightedDifference};
  }
  return {TradeoffScheme::TimeSharing, TradeoffScheme::ThresholdChecking};
}

double capacity_of(TradeoffScheme s, const SystemConfig& config, double energy) {
  switch (s) {
    case TradeoffScheme::TimeSharing: return closedform::c_ts(config, energy);
    case TradeoffScheme::ThresholdChecking: return closedform::c_tc(config, energy);
    case TradeoffScheme::WeightedDifference: return closedform::c_wd(config, energy);
  }
  return kNaN;
}

double outage_of(TradeoffScheme s, const SystemConfig& config, double delta) {
  switch (s) {
    case TradeoffScheme::TimeSharing: return closedform::outage_ts(config, delta);
    case TradeoffScheme::ThresholdChecking: return closedform::outage_tc(config, delta);
    case TradeoffScheme::WeightedDifference: return closedform::outage_wd(config, delta);
  }
  return kNaN;
}

// Pareto-outage multiplier at max(delta, lowest feasible factor).
double outage_zeta(const SystemConfig& config, double delta) {
  const double lo = closedform::delta_range_outage(config).first;
  const double d = std::max(delta, lo);
  return frontier::outage_frontier(config, {d}).zetas.front();
}

std::string suffix(double delta) { return "_d" + format_number(delta); }

void check_deltas(const std::vector<double>& deltas) {
  if (deltas.empty()) throw DomainError("figure: empty delta grid");
  for (const double d : deltas) {
    if (!(d >= 0.0 && d <= 1.0)) throw DomainError("figure: delta outside [0, 1]");
  }
}

// Capacity frontier values for arbitrary (unsorted, repeated) deltas.
std::vector<double> frontier_values(const SystemConfig& config,
                                    const std::vector<double>& deltas) {
  std::vector<double> sorted = deltas;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto curve = frontier::capacity_frontier(config, sorted);
  std::vector<double> out;
  for (const double d : deltas) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), d);
    out.push_back(curve.points[static_cast<std::size_t>(it - sorted.begin())].value);
  }
  return out;
}

}  // namespace

SchemeParam scheme_for_delta(TradeoffScheme scheme, const SystemConfig& config,
                             double delta) {
  const double energy = closedform::energy_from_delta(config, delta);
  switch (scheme) {
    case TradeoffScheme::TimeSharing:
      return TimeSharing{closedform::mu_from_energy(config, energy)};
    case TradeoffScheme::ThresholdChecking:
      return ThresholdChecking{closedform::tau_from_energy(config, energy)};
    case TradeoffScheme::WeightedDifference:
      return weighted_difference(closedform::nu_from_energy(config, energy));
  }
  throw DomainError("scheme_for_delta: unknown scheme");
}

Table tradeoff_capacity(const SystemConfig& config, const std::vector<double>& deltas,
                        const std::optional<simulate::MonteCarloConfig>& mc) {
  check_deltas(deltas);
  const bool pair = config.n_relays == 2;
  Table table;
  table.header = {"delta", "energy", "c_ts", "c_tc", "c_wd", "c_pareto"};
  if (mc) {
    for (const char* s : {"ts", "tc", "wd", "pareto"}) {
      const std::string n = s;
      for (const std::string& col :
           {"mc_c_" + n, "mc_c_" + n + "_se", "mc_e_" + n, "mc_e_" + n + "_se"}) {
        table.header.push_back(col);
      }
    }
  }

  std::vector<double> pareto(deltas.size(), kNaN);
  std::vector<double> zetas(deltas.size(), kNaN);
  if (pair) {
    std::vector<double> sorted = deltas;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const auto curve = frontier::capacity_frontier(config, sorted);
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      const auto k = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), deltas[i]) - sorted.begin());
      pareto[i] = curve.points[k].value;
      zetas[i] = curve.zetas[k];
    }
  }

  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double delta = deltas[i];
    const double energy = closedform::energy_from_delta(config, delta);
    std::vector<double> row{delta, energy, closedform::c_ts(config, energy),
                            closedform::c_tc(config, energy),
                            pair ? closedform::c_wd(config, energy) : kNaN, pareto[i]};
    if (mc) {
      std::vector<std::optional<SchemeParam>> runs{
          scheme_for_delta(TradeoffScheme::TimeSharing, config, delta),
          scheme_for_delta(TradeoffScheme::ThresholdChecking, config, delta)};
      if (pair) {
        runs.emplace_back(scheme_for_delta(TradeoffScheme::WeightedDifference, config, delta));
        runs.emplace_back(pareto_optimal(zetas[i], Metric::Capacity));
      } else {
        runs.emplace_back();
        runs.emplace_back();
      }
      for (const auto& scheme : runs) {
        if (!scheme) {
          row.insert(row.end(), {kNaN, kNaN, kNaN, kNaN});
          continue;
        }
        const auto r = simulate::run(config, *scheme, *mc);
        row.insert(row.end(), {r.capacity.mean, r.capacity.std_error, r.energy.mean,
                               r.energy.std_error});
      }
    }
    table.add_row(row);
  }
  return table;
}

Table tradeoff_outage(const SystemConfig& config, std::vector<double> deltas) {
  check_deltas(deltas);
  const bool pair = config.n_relays == 2;
  double lo = 2.0;
  if (pair) {
    lo = closedform::delta_range_outage(config).first;
    deltas.push_back(lo);
  }
  std::sort(deltas.begin(), deltas.end());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());

  std::vector<double> feasible;
  for (const double d : deltas) {
    if (d >= lo) feasible.push_back(d);
  }
  std::vector<double> frontier_values;
  if (!feasible.empty()) {
    for (const auto& p : frontier::outage_frontier(config, feasible).points) {
      frontier_values.push_back(p.value);
    }
  }

  Table table;
  table.header = {"delta", "energy", "noout_ts", "noout_tc", "noout_wd", "noout_pareto"};
  std::size_t k = 0;
  for (const double d : deltas) {
    const double pareto = d >= lo ? frontier_values[k++] : kNaN;
    table.add_row({d, closedform::energy_from_delta(config, d),
                   1.0 - closedform::outage_ts(config, d),
                   1.0 - closedform::outage_tc(config, d),
                   pair ? 1.0 - closedform::outage_wd(config, d) : kNaN, pareto});
  }
  return table;
}

Table capacity_vs_snr(const SystemConfig& config, const std::vector<double>& snr_db,
                      const std::vector<double>& deltas) {
  check_deltas(deltas);
  const auto schemes = schemes_for(config);
  const bool pair = config.n_relays == 2;
  Table table;
  table.header = {"snr_db"};
  for (const double d : deltas) {
    for (const auto s : schemes) table.header.push_back(std::string("c_") + short_name(s) + suffix(d));
    if (pair) table.header.push_back("c_pareto" + suffix(d));
  }
  for (const double db : snr_db) {
    const SystemConfig at = config.with_mean_snr(db_to_linear(db));
    const std::vector<double> pareto = pair ? frontier_values(at, deltas) : std::vector<double>{};
    std::vector<double> row{db};
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      const double energy = closedform::energy_from_delta(at, deltas[i]);
      for (const auto s : schemes) row.push_back(capacity_of(s, at, energy));
      if (pair) row.push_back(pareto[i]);
    }
    table.add_row(row);
  }
  return table;
}

Table outage_vs_snr(const SystemConfig& config, const std::vector<double>& ratio_db,
                    const std::vector<double>& deltas) {
  check_deltas(deltas);
  const auto schemes = schemes_for(config);
  const bool pair = config.n_relays == 2;
  Table table;
  table.header = {"ratio_db"};
  for (const double d : deltas) {
    for (const auto s : schemes) table.header.push_back(std::string("out_") + short_name(s) + suffix(d));
    if (pair) table.header.push_back("out_pareto" + suffix(d));
  }
  for (const double db : ratio_db) {
    const SystemConfig at =
        config.with_mean_snr(db_to_linear(db) * config.outage_threshold);
    std::vector<double> row{db};
    for (const double d : deltas) {
      for (const auto s : schemes) row.push_back(outage_of(s, at, d));
      if (pair) row.push_back(1.0 - closedform::pareto_no_outage(at, outage_zeta(at, d)));
    }
    table.add_row(row);
  }
  return table;
}

Table montecarlo(const SystemConfig& config, const SchemeParam& scheme,
                 const simulate::MonteCarloConfig& mc) {
  const auto r = simulate::run(config, scheme, mc);
  Table table;
  table.header = {"scheme", "parameter", "n_relays", "mean_snr", "mean_energy",
                  "outage_threshold", "seed", "n_frames", "capacity", "capacity_se",
                  "energy", "energy_se", "outage", "outage_se", "outage_low_confidence"};
  for (std::size_t i = 0; i < r.selection_counts.size(); ++i) {
    table.header.push_back("selected_" + std::to_string(i + 1));
  }
  std::vector<std::string> row{scheme_name(scheme),
                               format_number(scheme_parameter(scheme)),
                               std::to_string(config.n_relays),
                               format_number(config.mean_snr),
                               format_number(config.mean_energy),
                               format_number(config.outage_threshold),
                               std::to_string(mc.seed),
                               std::to_string(mc.n_frames),
                               format_number(r.capacity.mean),
                               format_number(r.capacity.std_error),
                               format_number(r.energy.mean),
                               format_number(r.energy.std_error),
                               format_number(r.outage.mean),
                               format_number(r.outage.std_error),
                               r.outage_low_confidence ? "1" : "0"};
  for (const auto c : r.selection_counts) row.push_back(std::to_string(c));
  table.rows.push_back(std::move(row));
  return table;
}

std::string gnuplot_script(const Table& table, const std::string& csv_path,
                           const std::string& x_column, bool log_y) {
  std::ostringstream out;
  out << "set datafile separator ','\n"
      << "set datafile missing ''\n"
      << "set xlabel '" << x_column << "'\n"
      << "set key outside right\n";
  if (log_y) out << "set logscale y\n";
  out << "plot";
  bool first = true;
  for (const auto& column : table.header) {
    if (column == x_column || column == "delta" || column == "energy" ||
        column.ends_with("_se")) {
      continue;
    }
    out << (first ? " " : ", \\\n     ") << "'" << csv_path << "' using \""
        << x_column << "\":\"" << column << "\" with lines title '" << column << "'";
    first = false;
  }
  out << "\n";
  return out.str();
}

}  // namespace swipt::figures
