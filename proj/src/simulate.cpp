#include "swipt/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "swipt/errors.hpp"
#include "swipt/rng.hpp"

namespace swipt::simulate {
namespace {

constexpr std::uint64_t kBlockFrames = 1024;

struct Moment {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    n += 1.0;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }

  // Chan et al. pairwise combination.
  void merge(const Moment& o) {
    if (o.n == 0.0) return;
    if (n == 0.0) {
      *this = o;
      return;
    }
    const double total = n + o.n;
    const double d = o.mean - mean;
    mean += d * o.n / total;
    m2 += o.m2 + d * d * n * o.n / total;
    n = total;
  }

  Estimate estimate(std::uint64_t frames) const {
    Estimate e;
    e.mean = mean;
    e.n = frames;
    e.std_error = n > 1.0 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0;
    return e;
  }
};

struct Block {
  Moment capacity, energy, outage;
  std::vector<std::uint64_t> counts;
};

void simulate_block(const SystemConfig& config, const SchemeParam& scheme,
                    std::uint64_t seed, std::uint64_t first, std::uint64_t last,
                    Block& block) {
  const bool needs_coin = std::holds_alternative<TimeSharing>(scheme);
  block.counts.assign(static_cast<std::size_t>(config.n_relays), 0);
  ChannelFrame frame;
  for (std::uint64_t k = first; k < last; ++k) {
    FrameStream rng(seed, k);
    sample_frame_into(config, rng, frame);
    const double coin = needs_coin ? rng.uniform() : 0.0;
    const std::size_t s = select(scheme, frame, config.outage_threshold, coin);
    block.capacity.push(instantaneous_capacity(frame.snr[s]));
    block.energy.push(frame.energy[s]);
    block.outage.push(outage_indicator(frame.snr[s], config.outage_threshold));
    ++block.counts[s];
  }
}

}  // namespace

SimulationResult run(const SystemConfig& config, const SchemeParam& scheme,
                     const MonteCarloConfig& mc) {
  config.validate();
  validate(scheme, config);
  if (mc.n_frames < 1) throw DomainError("run: n_frames must be >= 1");
  const std::uint64_t batch =
      mc.batch_size == 0 ? std::min<std::uint64_t>(10'000, mc.n_frames) : mc.batch_size;
  if (batch > mc.n_frames) throw DomainError("run: batch_size exceeds n_frames");

  const std::uint64_t n_blocks = (mc.n_frames + kBlockFrames - 1) / kBlockFrames;
  const std::uint64_t blocks_per_batch = std::max<std::uint64_t>(1, batch / kBlockFrames);
  const std::uint64_t n_batches = (n_blocks + blocks_per_batch - 1) / blocks_per_batch;
  std::vector<Block> blocks(n_blocks);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    try {
      for (std::uint64_t b = next++; b < n_batches; b = next++) {
        const std::uint64_t first_block = b * blocks_per_batch;
        const std::uint64_t last_block = std::min(n_blocks, first_block + blocks_per_batch);
        for (std::uint64_t i = first_block; i < last_block; ++i) {
          simulate_block(config, scheme, mc.seed, i * kBlockFrames,
                         std::min(mc.n_frames, (i + 1) * kBlockFrames), blocks[i]);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n_batches;
    }
  };

  unsigned workers = mc.workers == 0 ? std::thread::hardware_concurrency() : mc.workers;
  workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(1, n_batches)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Moment capacity, energy, outage;
  SimulationResult result;
  result.selection_counts.assign(static_cast<std::size_t>(config.n_relays), 0);
  for (const Block& b : blocks) {
    capacity.merge(b.capacity);
    energy.merge(b.energy);
    outage.merge(b.outage);
    for (std::size_t i = 0; i < b.counts.size(); ++i) result.selection_counts[i] += b.counts[i];
  }
  result.capacity = capacity.estimate(mc.n_frames);
  result.energy = energy.estimate(mc.n_frames);
  result.outage = outage.estimate(mc.n_frames);
  result.outage_low_confidence = result.outage.mean * static_cast<double>(mc.n_frames) < 100.0;
  return result;
}

}  // namespace swipt::simulate
