#include <doctest.h>

#include <cmath>
#include <limits>

#include "swipt/errors.hpp"
#include "swipt/rng.hpp"
#include "swipt/schemes.hpp"

using namespace swipt;

namespace {

ChannelFrame frame(std::vector<double> snr, std::vector<double> energy) {
  return ChannelFrame{std::move(snr), std::move(energy)};
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

// Relay numbers in comments are one-based; indices are zero-based.

TEST_CASE("time sharing") {
  const auto f = frame({1, 3}, {5, 2});
  CHECK(select_time_sharing(f, 0.5, 0.0) == 1);
  CHECK(select_time_sharing(f, 0.5, 0.9) == 0);
  for (double coin : {0.0, 0.3, 0.999999}) CHECK(select_time_sharing(f, 1.0, coin) == 1);
  for (double coin : {0.0, 0.3, 0.999999}) CHECK(select_time_sharing(f, 0.0, coin) == 0);
}

TEST_CASE("threshold checking") {
  const auto f = frame({1, 3}, {5, 2});
  CHECK(select_threshold(f, 2.0) == 1);
  CHECK(select_threshold(f, 4.0) == 0);
  CHECK(select_threshold(f, 0.0) == 1);
  CHECK(select_threshold(f, 3.0) == 1);
  CHECK(select_threshold(f, kInf) == 0);
}

TEST_CASE("weighted difference") {
  CHECK(select_weighted_difference(frame({3, 1}, {5, 2}), 0.0) == 0);
  CHECK(select_weighted_difference(frame({3, 1}, {5, 2}), 7.0) == 0);
  CHECK(select_weighted_difference(frame({1, 3}, {5, 2}), 0.0) == 1);
  CHECK(select_weighted_difference(frame({1, 3}, {5, 2}), 1.0) == 0);
  // Tie: -2 == 2/3 * (2 - 5).
  CHECK(select_weighted_difference(frame({1, 3}, {5, 2}), 2.0 / 3.0) == 0);
  CHECK_THROWS_AS(select_weighted_difference(frame({1, 2, 3}, {1, 2, 3}), 1.0), DimensionError);
}

TEST_CASE("pareto selection") {
  CHECK(select_pareto(frame({2, 3}, {1, 4}), 0.1, Metric::OutageIndicator, 1.0) == 1);
  CHECK(select_pareto(frame({2, 0.5}, {1, 4}), 0.1, Metric::OutageIndicator, 1.0) == 0);
  // Energy surplus above 1/zeta outweighs the outage of relay 1.
  CHECK(select_pareto(frame({2, 0.5}, {1, 40}), 0.1, Metric::OutageIndicator, 1.0) == 1);
  // Exact tie in both metrics goes to relay 1.
  CHECK(select_pareto(frame({2, 3}, {4, 4}), 0.1, Metric::OutageIndicator, 1.0) == 0);
  CHECK(select_pareto(frame({1, 3}, {5, 2}), 0.0, Metric::Capacity, 1.0) == 1);
  CHECK_THROWS_AS(select_pareto(frame({1}, {1}), 0.1, Metric::Capacity, 1.0), DimensionError);
  CHECK(pareto_metric(Metric::OutageIndicator, 1.0, 1.0) == 1.0);
  CHECK(pareto_metric(Metric::OutageIndicator, 0.99, 1.0) == 0.0);
}

TEST_CASE("argmax ties and single relay") {
  CHECK(argmax_snr(frame({1, 3, 2}, {0, 0, 0})) == 1);
  CHECK(argmax_energy(frame({0, 0}, {4, 4})) == 0);
  CHECK(argmax_snr(frame({7}, {1})) == 0);
}

TEST_CASE("validation") {
  const auto two = SystemConfig::make(2, 10, 1, 1);
  const auto three = SystemConfig::make(3, 10, 1, 1);
  CHECK_THROWS_AS(validate(TimeSharing{1.5}, two), DomainError);
  CHECK_THROWS_AS(validate(TimeSharing{-0.1}, two), DomainError);
  CHECK_THROWS_AS(validate(ThresholdChecking{-1}, two), DomainError);
  CHECK_NOTHROW(validate(ThresholdChecking{kInf}, two));
  CHECK_THROWS_AS(validate(WeightedDifference{1.0}, three), DimensionError);
  CHECK_THROWS_AS(validate(pareto_optimal(1.0, Metric::Capacity), three), DimensionError);
  CHECK_THROWS_AS(validate(WeightedDifference{-1.0}, two), DomainError);
  CHECK(weighted_difference(kInf).energy_only);
  CHECK(pareto_optimal(kInf, Metric::Capacity).energy_only);
  CHECK(scheme_parameter(weighted_difference(kInf)) == kInf);
  CHECK(scheme_name(TimeSharing{}) == "time-sharing");
}

TEST_CASE("policy invariants on random frames") {
  const auto config = SystemConfig::make(2, 10, 1, 1);
  const auto wide = SystemConfig::make(4, 10, 1, 1);
  ChannelFrame f, g;
  for (std::uint64_t k = 0; k < 20000; ++k) {
    FrameStream rng(5, k);
    sample_frame_into(config, rng, f);
    const auto kappa = argmax_snr(f);
    CHECK(select_weighted_difference(f, 0.0) == kappa);
    CHECK(select_pareto(f, 0.0, Metric::Capacity, 1.0) == kappa);

    ChannelFrame scaled = f;
    for (double& s : scaled.snr) s *= 3.7;
    CHECK(argmax_snr(scaled) == kappa);

    FrameStream rng2(6, k);
    sample_frame_into(wide, rng2, g);
    if (argmax_snr(g) == argmax_energy(g)) {
      const auto s = argmax_snr(g);
      CHECK(select_time_sharing(g, 0.3, 0.9) == s);
      CHECK(select_threshold(g, 1e9) == s);
    }
    if (kappa == argmax_energy(f)) {
      for (double p : {0.1, 1.0, 10.0}) {
        CHECK(select_weighted_difference(f, p) == kappa);
        CHECK(select_pareto(f, p, Metric::Capacity, 1.0) == kappa);
        CHECK(select_pareto(f, p, Metric::OutageIndicator, 1.0) == kappa);
      }
    }
  }
}

TEST_CASE("outage Pareto rule equals its case enumeration") {
  const auto config = SystemConfig::make(2, 3.0, 1.0, 1.0);
  const double th = config.outage_threshold;
  ChannelFrame f;
  long mismatches = 0;
  for (double zeta : {0.05, 0.5, 2.0}) {
    for (std::uint64_t k = 0; k < 1'000'000 / 3; ++k) {
      FrameStream rng(77, k);
      sample_frame_into(config, rng, f);
      const bool ok0 = f.snr[0] >= th;
      const bool ok1 = f.snr[1] >= th;
      std::size_t expected;
      if (ok0 && !ok1) expected = f.energy[1] < f.energy[0] + 1.0 / zeta ? 0 : 1;
      else if (ok1 && !ok0) expected = f.energy[0] < f.energy[1] + 1.0 / zeta ? 1 : 0;
      else expected = f.energy[1] > f.energy[0] ? 1 : 0;
      mismatches += select_pareto(f, zeta, Metric::OutageIndicator, th) != expected;
    }
  }
  CHECK(mismatches == 0);
}
