#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swipt/closedform.hpp"
#include "swipt/csv.hpp"
#include "swipt/model.hpp"
#include "swipt/schemes.hpp"
#include "swipt/simulate.hpp"

// Tables behind each reproduced figure. Cells a scheme cannot provide (two
// relay schemes at N != 2, the outage frontier below its lowest tradeoff
// factor) are left empty.

namespace swipt::figures {

/// Scheme instance whose average energy sits at tradeoff factor delta.
SchemeParam scheme_for_delta(closedform::TradeoffScheme scheme,
                             const SystemConfig& config, double delta);

/// delta, energy, c_ts, c_tc, c_wd, c_pareto; with `mc` also the simulated
/// capacity and energy of every scheme with standard errors.
Table tradeoff_capacity(const SystemConfig& config, const std::vector<double>& deltas,
                        const std::optional<simulate::MonteCarloConfig>& mc = std::nullopt);

/// delta, energy, noout_ts, noout_tc, noout_wd, noout_pareto. The lowest
/// feasible frontier factor is merged into the grid.
Table tradeoff_outage(const SystemConfig& config, std::vector<double> deltas);

/// snr_db followed by c_<scheme>_d<delta> for every delta.
Table capacity_vs_snr(const SystemConfig& config, const std::vector<double>& snr_db,
                      const std::vector<double>& deltas);

/// ratio_db (mean SNR over threshold) followed by out_<scheme>_d<delta>. The
/// frontier uses max(delta, lowest feasible factor).
Table outage_vs_snr(const SystemConfig& config, const std::vector<double>& ratio_db,
                    const std::vector<double>& deltas);

/// One row describing a single simulation.
Table montecarlo(const SystemConfig& config, const SchemeParam& scheme,
                 const simulate::MonteCarloConfig& mc);

/// Gnuplot script plotting every column after `x_column` against it.
std::string gnuplot_script(const Table& table, const std::string& csv_path,
                           const std::string& x_column, bool log_y);

}  // namespace swipt::figures
