#pragma once

#include <optional>
#include <vector>

#include "swipt/closedform.hpp"
#include "swipt/model.hpp"
#include "swipt/schemes.hpp"

// Pareto frontiers of the two-relay tradeoff. The capacity frontier has no
// closed form and is integrated numerically; the outage frontier is built
// from its closed forms.

namespace swipt::frontier {

enum class FrontierMethod { Quadrature, QuasiMonteCarlo };

/// A frontier point together with the multiplier that produced it and the
/// certified absolute error of both coordinates.
struct ParetoPoint {
  TradeoffPoint point;
  double zeta = 0.0;
  double error = 0.0;
  FrontierMethod method = FrontierMethod::Quadrature;
};

struct FrontierCurve {
  std::vector<TradeoffPoint> points;
  /// Multiplier of each point; +inf marks energy-only selection.
  std::vector<double> zetas;
  FrontierMethod method = FrontierMethod::Quadrature;
  double tolerance = 0.0;
};

/// Absolute accuracy every integrated point must certify.
inline constexpr double kPointTolerance = 1e-4;

/// (E[energy], E[capacity]) of the Pareto rule with multiplier zeta under the
/// capacity metric. zeta = +inf selects by energy only. Throws
/// ToleranceError when the integrator cannot certify kPointTolerance.
ParetoPoint pareto_capacity_point(const SystemConfig& config, double zeta,
                                  FrontierMethod method = FrontierMethod::Quadrature);

/// Multiplier whose average energy is within `tolerance` of `target`
/// (default 1e-4 mean_energy). Bisection over a bracket grown by doubling
/// from [0, 1]; a non-monotone energy map raises BracketError.
double solve_zeta_for_energy(const SystemConfig& config, double target,
                             Metric metric,
                             std::optional<double> tolerance = std::nullopt,
                             FrontierMethod method = FrontierMethod::Quadrature);

/// Capacity frontier at each tradeoff factor of `grid` (strictly
/// increasing, inside [0, 1]).
FrontierCurve capacity_frontier(const SystemConfig& config,
                                const std::vector<double>& grid,
                                FrontierMethod method = FrontierMethod::Quadrature);

/// No-outage probability frontier; every grid value must lie inside
/// delta_range_outage(config).
FrontierCurve outage_frontier(const SystemConfig& config,
                              const std::vector<double>& grid);

/// n >= 2 evenly spaced values from lo to hi, endpoints exact.
std::vector<double> uniform_grid(double lo, double hi, int n);

}  // namespace swipt::frontier
