#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "swipt/closedform.hpp"
#include "swipt/errors.hpp"
#include "swipt/frontier.hpp"
#include "swipt/simulate.hpp"
#include "toy_model.hpp"

using namespace swipt;
using namespace swipt::frontier;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("capacity point boundaries") {
  const auto c = SystemConfig::make(2, 100.0, 1.0, 1.0);
  const auto zero = pareto_capacity_point(c, 0.0);
  CHECK(zero.point.energy == 1.0);
  CHECK(zero.point.value == closedform::c_max(c));
  const auto all = pareto_capacity_point(c, kInf);
  CHECK(all.point.energy == 1.5);
  CHECK(all.point.value == closedform::c_min(c));
  CHECK_THROWS_AS(pareto_capacity_point(SystemConfig::make(3, 10, 1, 1), 1.0), DimensionError);
  CHECK_THROWS_AS(pareto_capacity_point(c, -1.0), DomainError);
}

TEST_CASE("quadrature and quasi-Monte-Carlo agree") {
  for (double snr : {1.0, 100.0, 1000.0}) {
    const auto c = SystemConfig::make(2, snr, 2.0, 1.0);
    for (double zeta : {0.001, 0.1, 3.0}) {
      const auto a = pareto_capacity_point(c, zeta);
      const auto b = pareto_capacity_point(c, zeta, FrontierMethod::QuasiMonteCarlo);
      CHECK(a.error < kPointTolerance);
      CHECK(b.error < kPointTolerance);
      CHECK(std::abs(a.point.energy - b.point.energy) < 2 * kPointTolerance * c.mean_energy);
      CHECK(std::abs(a.point.value - b.point.value) < 2 * kPointTolerance);
    }
  }
}

TEST_CASE("capacity point against plain Monte Carlo") {
  const auto c = SystemConfig::make(2, 100.0, 1.0, 1.0);
  const double zeta = c.mean_snr / (2.0 * c.mean_energy);
  const auto p = pareto_capacity_point(c, zeta);
  simulate::MonteCarloConfig mc;
  mc.n_frames = 10'000'000;
  mc.seed = 11;
  const auto r = simulate::run(c, pareto_optimal(zeta, Metric::Capacity), mc);
  CHECK(std::abs(p.point.value - r.capacity.mean) < std::max(3 * r.capacity.std_error, 1e-3));
  CHECK(std::abs(p.point.energy - r.energy.mean) < std::max(3 * r.energy.std_error, 1e-3));
}

TEST_CASE("energy is non-decreasing in zeta") {
  const auto c = SystemConfig::make(2, 100.0, 1.0, 1.0);
  double previous = 1.0;
  for (int i = 0; i < 30; ++i) {
    const double zeta = std::pow(10.0, -4.0 + 7.0 * i / 29.0);
    const double e = pareto_capacity_point(c, zeta).point.energy;
    CHECK(e >= previous - 1e-12);
    previous = e;
  }
}

TEST_CASE("solving for zeta") {
  const auto c = SystemConfig::make(2, 100.0, 1.0, 1.0);
  CHECK(solve_zeta_for_energy(c, 1.0, Metric::Capacity) == 0.0);
  const double zeta = solve_zeta_for_energy(c, 1.25, Metric::Capacity);
  CHECK(std::abs(pareto_capacity_point(c, zeta).point.energy - 1.25) < 1e-4);
  CHECK_THROWS_AS(solve_zeta_for_energy(c, 1.5, Metric::Capacity), DomainError);
  CHECK_THROWS_AS(solve_zeta_for_energy(c, 0.9, Metric::Capacity), DomainError);

  const auto o = SystemConfig::make(2, 2.0 / std::numbers::ln2, 1.0, 1.0);
  const double floor = closedform::pareto_outage_energy_min(o);
  const double small = solve_zeta_for_energy(o, floor + 1e-3, Metric::OutageIndicator);
  CHECK(small > 0.0);
  CHECK(small < 0.2);
  CHECK(closedform::delta_from_energy(o, floor + 1e-3) == doctest::Approx(0.5).epsilon(0.01));
  CHECK_THROWS_AS(solve_zeta_for_energy(o, floor - 0.01, Metric::OutageIndicator), DomainError);
}

TEST_CASE("frontier curves") {
  const auto c = SystemConfig::make(2, 100.0, 1.0, 1.0);
  const auto grid = uniform_grid(0.0, 1.0, 20);
  const auto curve = capacity_frontier(c, grid);
  REQUIRE(curve.points.size() == 20);
  CHECK(curve.points.front().energy == 1.0);
  CHECK(curve.points.front().value == closedform::c_max(c));
  CHECK(curve.points.back().energy == 1.5);
  CHECK(curve.points.back().value == closedform::c_min(c));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& p = curve.points[i];
    if (i) {
      CHECK(p.energy > curve.points[i - 1].energy);
      CHECK(p.value <= curve.points[i - 1].value);
    }
    CHECK(std::abs(p.delta - grid[i]) < 1e-8);
    const double e = closedform::energy_from_delta(c, grid[i]);
    CHECK(p.value >= closedform::c_wd(c, e) - 1e-3);
    CHECK(p.value >= closedform::c_tc(c, e) - 1e-3);
    CHECK(p.value >= closedform::c_ts(c, e) - 1e-3);
  }

  const auto o = SystemConfig::make(2, 2.0 / std::numbers::ln2, 1.0, 1.0);
  const auto og = uniform_grid(0.5, 1.0, 20);
  const auto ocurve = outage_frontier(o, og);
  const double q = 0.5;
  CHECK(ocurve.points.front().value == doctest::Approx(1.0 - q * q).epsilon(1e-12));
  CHECK(ocurve.points.back().value == doctest::Approx(0.5).epsilon(1e-12));
  for (std::size_t i = 0; i < og.size(); ++i) {
    const auto& p = ocurve.points[i];
    if (i) CHECK(p.value <= ocurve.points[i - 1].value + 1e-12);
    CHECK(p.value >= 1.0 - closedform::outage_wd(o, og[i]) - 1e-3);
    CHECK(p.value >= 1.0 - closedform::outage_tc(o, og[i]) - 1e-3);
    CHECK(p.value >= 1.0 - closedform::outage_ts(o, og[i]) - 1e-3);
  }
  CHECK_THROWS_AS(outage_frontier(o, {0.3, 0.6}), DomainError);
  CHECK_THROWS_AS(capacity_frontier(c, {0.5, 0.2}), DomainError);
}

TEST_CASE("per-state optimality on a toy model") {
  for (auto metric : {Metric::Capacity, Metric::OutageIndicator}) {
    for (int i = 0; i < 20; ++i) {
      const double zeta = std::pow(10.0, -3.0 + 5.0 * i / 19.0);
      const auto r = toy::check(metric, zeta, 1.5);
      CHECK(r.states == 256);
      CHECK(r.rule_mismatches == 0);
      CHECK(r.improving_deviations == 0);
    }
  }
}

TEST_CASE("grid helper") {
  const auto g = uniform_grid(0.0, 1.0, 21);
  CHECK(g.size() == 21);
  CHECK(g[10] == 0.5);
  CHECK(g.back() == 1.0);
  CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), DomainError);
}
