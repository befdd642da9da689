#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "swipt/closedform.hpp"
#include "swipt/config_file.hpp"
#include "swipt/csv.hpp"
#include "swipt/errors.hpp"
#include "swipt/figures.hpp"
#include "swipt/frontier.hpp"
#include "swipt/simulate.hpp"

namespace swipt::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Option storage shared by every subcommand. A flag counts as given when its
// CLI11 option reports a count.
struct Options {
  std::string config_path;
  int n_relays = 2;
  double mean_snr = 0.0;
  double mean_snr_db = 0.0;
  double mean_energy = 1.0;
  double outage_threshold = 1.0;
  double rate = 0.0;
  std::uint64_t seed = 1;
  std::string output;
  bool gnuplot = false;
  int grid_points = 21;
  std::vector<double> deltas;
  double x_min_db = 0.0;
  double x_max_db = 40.0;
  double x_step_db = 2.0;
  std::string x_axis = "energy";
  bool with_mc = false;
  std::uint64_t mc_frames = 1'000'000;
  unsigned workers = 1;
  std::uint64_t batch_size = 0;
  std::string preset;
  std::string scheme;
  double mu = 0.0, tau = 0.0, nu = 0.0, zeta = 0.0, delta = 0.0;
  std::string metric = "capacity";

  std::map<std::string, CLI::Option*> given;

  bool has(const std::string& name) const {
    const auto it = given.find(name);
    return it != given.end() && it->second->count() > 0;
  }
};

void add_config_flags(CLI::App& app, Options& o) {
  o.given["config"] = app.add_option("--config", o.config_path, "key = value configuration file");
  o.given["n-relays"] = app.add_option("--n-relays", o.n_relays, "number of relays N");
  auto* snr = app.add_option("--mean-snr", o.mean_snr, "mean per-hop SNR, linear");
  auto* snr_db = app.add_option("--mean-snr-db", o.mean_snr_db, "mean per-hop SNR in dB");
  snr->excludes(snr_db);
  o.given["mean-snr"] = snr;
  o.given["mean-snr-db"] = snr_db;
  o.given["mean-energy"] = app.add_option("--mean-energy", o.mean_energy, "mean harvestable energy per relay");
  auto* th = app.add_option("--outage-threshold", o.outage_threshold, "outage SNR threshold, linear");
  auto* rate = app.add_option("--rate", o.rate, "target rate in bits/s/Hz; threshold 2^(2 rate) - 1");
  th->excludes(rate);
  o.given["outage-threshold"] = th;
  o.given["rate"] = rate;
  o.given["seed"] = app.add_option("--seed", o.seed, "Monte-Carlo seed");
  app.add_option("--output,-o", o.output, "CSV path (default: standard output)");
  app.add_flag("--gnuplot", o.gnuplot, "also write <output>.gp");
}

void add_grid_flags(CLI::App& app, Options& o) {
  o.given["grid-points"] =
      app.add_option("--grid-points", o.grid_points, "tradeoff-factor grid size")->check(CLI::Range(2, 100000));
  o.given["deltas"] = app.add_option("--deltas", o.deltas, "explicit tradeoff factors")->delimiter(',');
}

void add_x_range_flags(CLI::App& app, Options& o) {
  o.given["x-min-db"] = app.add_option("--x-min-db", o.x_min_db, "first x value in dB");
  o.given["x-max-db"] = app.add_option("--x-max-db", o.x_max_db, "last x value in dB");
  o.given["x-step-db"] = app.add_option("--x-step-db", o.x_step_db, "x step in dB");
}

void add_mc_flags(CLI::App& app, Options& o) {
  o.given["mc-frames"] = app.add_option("--mc-frames", o.mc_frames, "frames per simulation");
  app.add_option("--workers", o.workers, "worker threads (0: all cores)");
  app.add_option("--batch-size", o.batch_size, "frames per scheduling unit (0: default)");
}

SystemConfig resolve_config(const Options& o, SystemConfig base,
                            std::optional<std::uint64_t>& seed_from_file) {
  if (o.has("config")) {
    const ConfigFile file = load_config(o.config_path);
    base = file.apply(base);
    seed_from_file = file.seed;
  }
  if (o.has("n-relays")) base.n_relays = o.n_relays;
  if (o.has("mean-snr")) base.mean_snr = o.mean_snr;
  if (o.has("mean-snr-db")) base.mean_snr = db_to_linear(o.mean_snr_db);
  if (o.has("mean-energy")) base.mean_energy = o.mean_energy;
  if (o.has("outage-threshold")) base.outage_threshold = o.outage_threshold;
  if (o.has("rate")) base.outage_threshold = rate_to_threshold(o.rate);
  base.validate();
  return base;
}

bool snr_given(const Options& o, bool file_has_snr) {
  return o.has("mean-snr") || o.has("mean-snr-db") || file_has_snr;
}

std::vector<double> delta_grid(const Options& o) {
  if (o.has("deltas")) return o.deltas;
  return frontier::uniform_grid(0.0, 1.0, o.grid_points);
}

std::vector<double> db_grid(const Options& o) {
  if (!(o.x_step_db > 0.0) || !(o.x_max_db >= o.x_min_db)) {
    throw UsageError("x range needs step > 0 and max >= min");
  }
  std::vector<double> grid;
  const auto n = static_cast<long>(std::floor((o.x_max_db - o.x_min_db) / o.x_step_db + 1e-9));
  for (long i = 0; i <= n; ++i) grid.push_back(o.x_min_db + o.x_step_db * static_cast<double>(i));
  return grid;
}

simulate::MonteCarloConfig mc_config(const Options& o, std::uint64_t seed) {
  simulate::MonteCarloConfig mc;
  mc.n_frames = o.mc_frames;
  mc.seed = seed;
  mc.workers = o.workers;
  mc.batch_size = o.batch_size;
  if (mc.n_frames < 1) throw UsageError("--mc-frames must be >= 1");
  if (mc.batch_size > mc.n_frames) throw UsageError("--batch-size exceeds --mc-frames");
  return mc;
}

Metric parse_metric(const std::string& m) {
  if (m == "capacity") return Metric::Capacity;
  if (m == "outage") return Metric::OutageIndicator;
  throw UsageError("--metric must be capacity or outage");
}

SchemeParam scheme_from_flags(const Options& o, const SystemConfig& config) {
  const int params = o.has("mu") + o.has("tau") + o.has("nu") + o.has("zeta") + o.has("delta");
  if (params != 1) throw UsageError("give exactly one of --mu, --tau, --nu, --zeta, --delta");
  const auto bad = [](const char* what) { throw UsageError(what); };
  using closedform::TradeoffScheme;
  if (o.has("delta") && !(o.delta >= 0.0 && o.delta <= 1.0)) bad("--delta must lie in [0, 1]");

  SchemeParam scheme;
  if (o.scheme == "ts") {
    if (o.has("delta")) scheme = figures::scheme_for_delta(TradeoffScheme::TimeSharing, config, o.delta);
    else if (o.has("mu")) scheme = TimeSharing{o.mu};
    else bad("time sharing takes --mu or --delta");
  } else if (o.scheme == "tc") {
    if (o.has("delta")) scheme = figures::scheme_for_delta(TradeoffScheme::ThresholdChecking, config, o.delta);
    else if (o.has("tau")) scheme = ThresholdChecking{o.tau};
    else bad("threshold checking takes --tau or --delta");
  } else if (o.scheme == "wd") {
    if (o.has("delta")) scheme = figures::scheme_for_delta(TradeoffScheme::WeightedDifference, config, o.delta);
    else if (o.has("nu")) scheme = weighted_difference(o.nu);
    else bad("weighted difference takes --nu or --delta");
  } else if (o.scheme == "pareto") {
    const Metric metric = parse_metric(o.metric);
    if (o.has("zeta")) {
      scheme = pareto_optimal(o.zeta, metric);
    } else if (o.has("delta")) {
      const double energy = closedform::energy_from_delta(config, o.delta);
      const double zeta = o.delta >= 1.0
                              ? std::numeric_limits<double>::infinity()
                              : frontier::solve_zeta_for_energy(config, energy, metric);
      scheme = pareto_optimal(zeta, metric);
    } else {
      bad("pareto selection takes --zeta or --delta");
    }
  } else {
    bad("--scheme must be ts, tc, wd or pareto");
  }
  try {
    validate(scheme, config);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const DimensionError& e) {
    throw UsageError(e.what());
  }
  return scheme;
}

struct Output {
  Table table;
  std::string x_column;
  bool log_y = false;
};

void emit(const Options& o, const Output& result, std::ostream& out) {
  if (o.output.empty()) {
    if (o.gnuplot) throw UsageError("--gnuplot needs --output");
    write_csv(out, result.table);
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw UsageError("cannot write " + o.output);
  write_csv(file, result.table);
  if (o.gnuplot) {
    std::ofstream script(o.output + ".gp", std::ios::binary);
    if (!script) throw UsageError("cannot write " + o.output + ".gp");
    script << figures::gnuplot_script(result.table, o.output, result.x_column, result.log_y);
  }
}

// Figure defaults: preset name -> (command, config, grids).
struct Preset {
  std::string command;
  SystemConfig config;
  std::vector<double> deltas;
  std::string x_axis = "energy";
  bool outage_default_snr = false;
};

Preset preset_named(const std::string& name) {
  Preset p;
  p.config = SystemConfig{};
  if (name == "fig3") {
    p.command = "tradeoff-capacity";
    p.config.mean_snr = db_to_linear(20.0);
  } else if (name == "fig4") {
    p.command = "tradeoff-capacity";
    p.config.mean_snr = db_to_linear(10.0);
    p.x_axis = "delta";
  } else if (name == "fig5") {
    p.command = "tradeoff-outage";
    p.outage_default_snr = true;
  } else if (name == "fig6") {
    p.command = "capacity-vs-snr";
    p.deltas = {0.0, 0.25, 0.5, 0.75, 1.0};
  } else if (name == "fig7") {
    p.command = "outage-vs-snr";
    p.deltas = {0.0, 0.01, 0.5, 1.0};
  } else if (name == "fig8") {
    p.command = "outage-vs-snr";
    p.config.n_relays = 3;
    p.deltas = {0.0, 0.01, 0.5, 1.0};
  } else {
    throw UsageError("unknown preset '" + name + "' (fig3 ... fig8)");
  }
  return p;
}

Output run_command(const std::string& command, const Options& o, Preset preset) {
  std::optional<std::uint64_t> file_seed;
  bool file_has_snr = false;
  if (o.has("config")) file_has_snr = load_config(o.config_path).mean_snr.has_value();
  SystemConfig config = resolve_config(o, preset.config, file_seed);
  const std::uint64_t seed = o.has("seed") ? o.seed : file_seed.value_or(o.seed);

  if (command == "tradeoff-capacity") {
    const std::string axis = o.has("x-axis") ? o.x_axis : preset.x_axis;
    if (axis != "energy" && axis != "delta") throw UsageError("--x-axis must be energy or delta");
    if (!snr_given(o, file_has_snr) && preset.command.empty()) {
      config.mean_snr = db_to_linear(axis == "delta" ? 10.0 : 20.0);
    }
    std::optional<simulate::MonteCarloConfig> mc;
    if (o.with_mc) mc = mc_config(o, seed);
    return {figures::tradeoff_capacity(config, delta_grid(o), mc), axis, false};
  }
  if (command == "tradeoff-outage") {
    if (!snr_given(o, file_has_snr)) {
      config.mean_snr = 2.0 * config.outage_threshold / std::numbers::ln2;
    }
    return {figures::tradeoff_outage(config, delta_grid(o)), "delta", false};
  }
  if (command == "capacity-vs-snr") {
    const auto deltas = o.has("deltas") ? o.deltas
                        : preset.deltas.empty() ? std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}
                                                : preset.deltas;
    return {figures::capacity_vs_snr(config, db_grid(o), deltas), "snr_db", false};
  }
  if (command == "outage-vs-snr") {
    const auto deltas = o.has("deltas") ? o.deltas
                        : preset.deltas.empty() ? std::vector<double>{0.0, 0.01, 0.5, 1.0}
                                                : preset.deltas;
    return {figures::outage_vs_snr(config, db_grid(o), deltas), "ratio_db", true};
  }
  if (command == "montecarlo") {
    if (!snr_given(o, file_has_snr)) config.mean_snr = 10.0;
    const SchemeParam scheme = scheme_from_flags(o, config);
    return {figures::montecarlo(config, scheme, mc_config(o, seed)), "", false};
  }
  throw UsageError("unknown command " + command);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relay selection tradeoffs between information and wireless energy transfer"};
  app.require_subcommand(1);
  Options o;

  auto* capacity = app.add_subcommand("tradeoff-capacity", "capacity vs energy for every scheme");
  auto* outage = app.add_subcommand("tradeoff-outage", "no-outage probability vs energy");
  auto* cap_snr = app.add_subcommand("capacity-vs-snr", "capacity vs mean SNR per tradeoff factor");
  auto* out_snr = app.add_subcommand("outage-vs-snr", "outage vs mean SNR over threshold");
  auto* mc = app.add_subcommand("montecarlo", "one simulation, one CSV row");
  auto* figure = app.add_subcommand("figure", "reproduce a figure from its preset");

  for (auto* sub : {capacity, outage, cap_snr, out_snr, mc, figure}) add_config_flags(*sub, o);
  for (auto* sub : {capacity, outage, figure}) add_grid_flags(*sub, o);
  for (auto* sub : {cap_snr, out_snr}) {
    add_x_range_flags(*sub, o);
    o.given["deltas"] = sub->add_option("--deltas", o.deltas, "tradeoff factors")->delimiter(',');
  }
  add_x_range_flags(*figure, o);
  for (auto* sub : {capacity, mc, figure}) add_mc_flags(*sub, o);
  for (auto* sub : {capacity, figure}) {
    o.given["x-axis"] = sub->add_option("--x-axis", o.x_axis, "energy or delta");
    sub->add_flag("--with-mc", o.with_mc, "add Monte-Carlo columns");
  }
  figure->add_option("--preset", o.preset, "fig3 ... fig8")->required();

  mc->add_option("--scheme", o.scheme, "ts, tc, wd or pareto")->required();
  o.given["mu"] = mc->add_option("--mu", o.mu, "time-sharing probability");
  o.given["tau"] = mc->add_option("--tau", o.tau, "threshold-checking SNR threshold");
  o.given["nu"] = mc->add_option("--nu", o.nu, "weighted-difference weight (inf allowed)");
  o.given["zeta"] = mc->add_option("--zeta", o.zeta, "Pareto multiplier (inf allowed)");
  o.given["delta"] = mc->add_option("--delta", o.delta, "derive the parameter from a tradeoff factor");
  mc->add_option("--metric", o.metric, "Pareto metric: capacity or outage");

  // Subcommands share option storage; only the parsed one carries counts.
  std::map<std::string, std::vector<CLI::Option*>> all;
  auto collect = [&](CLI::App* sub) {
    for (auto* opt : sub->get_options()) all[opt->get_name()].push_back(opt);
  };
  for (auto* sub : {capacity, outage, cap_snr, out_snr, mc, figure}) collect(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  // Rebind `given` to whichever option of that name was actually parsed.
  for (auto& [name, opts] : all) {
    std::string key = name;
    while (!key.empty() && key.front() == '-') key.erase(0, 1);
    for (auto* opt : opts) {
      if (opt->count() > 0) o.given[key] = opt;
    }
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    Preset preset;
    std::string command = chosen->get_name();
    if (command == "figure") {
      preset = preset_named(o.preset);
      command = preset.command;
    }
    emit(o, run_command(command, o, preset), out);
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericFailure;
  }
}

}  // namespace swipt::cli
