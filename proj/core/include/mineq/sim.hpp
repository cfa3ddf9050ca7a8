#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mineq/normal.hpp"
#include "mineq/seed.hpp"

namespace mineq {

// Default master seed for bare invocations; fixed so they reproduce.
inline constexpr std::uint64_t kDefaultMasterSeed = 987654321;

// Governs all Monte Carlo determinism. Replicates are split into blocks of
// block_size; block i consumes the stream (master_seed, base + i), so results
// depend only on (reps, master_seed, block_size), never on scheduling.
// threads is an execution hint (0 = hardware concurrency); it cannot affect
// any estimate and is deliberately excluded from serialized report configs.
struct SimConfig {
  std::uint64_t reps = 100'000;
  std::uint64_t master_seed = kDefaultMasterSeed;
  std::uint32_t block_size = 16'384;
  unsigned threads = 0;

  void validate() const {
    if (reps == 0) throw std::invalid_argument("SimConfig: reps must be positive");
    if (block_size == 0) throw std::invalid_argument("SimConfig: block_size must be positive");
  }
};

// Runs body(block_index, first_rep, last_rep) for each block, distributing
// blocks over worker threads. Exceptions from body are rethrown to the caller.
void run_blocks(std::uint64_t total, std::uint32_t block_size, unsigned threads,
                const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body);

struct MeanEstimate {
  double mean = 0.0;
  double se = 0.0;
  std::uint64_t reps = 0;
};

namespace detail {

inline std::size_t block_count(std::uint64_t reps, std::uint32_t block_size) {
  return static_cast<std::size_t>((reps + block_size - 1) / block_size);
}

inline MeanEstimate merge_moments(std::span<const double> sums,
                                  std::span<const double> sqsums, std::uint64_t n) {
  double s = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    s += sums[i];
    s2 += sqsums[i];
  }
  const double mean = s / static_cast<double>(n);
  const double var = std::max(0.0, s2 / static_cast<double>(n) - mean * mean);
  return MeanEstimate{mean, std::sqrt(var / static_cast<double>(n)), n};
}

}  // namespace detail

// Mean and standard error of f(stream) over cfg.reps replicates.
template <class F>
MeanEstimate mc_mean(const SimConfig& cfg, StreamSeed base, F&& f) {
  cfg.validate();
  const std::size_t nblocks = detail::block_count(cfg.reps, cfg.block_size);
  std::vector<double> sums(nblocks, 0.0), sqsums(nblocks, 0.0);
  run_blocks(cfg.reps, cfg.block_size, cfg.threads,
             [&](std::size_t blk, std::uint64_t lo, std::uint64_t hi) {
               NormalStream stream(base.with_stream(base.stream_id + blk));
               double s = 0.0, s2 = 0.0;
               for (std::uint64_t r = lo; r < hi; ++r) {
                 const double v = f(stream);
                 s += v;
                 s2 += v * v;
               }
               sums[blk] = s;
               sqsums[blk] = s2;
             });
  return detail::merge_moments(sums, sqsums, cfg.reps);
}

// Per-replicate values of f(stream), in deterministic replicate order.
template <class F>
std::vector<double> mc_collect(const SimConfig& cfg, StreamSeed base, F&& f) {
  cfg.validate();
  std::vector<double> out(cfg.reps);
  run_blocks(cfg.reps, cfg.block_size, cfg.threads,
             [&](std::size_t blk, std::uint64_t lo, std::uint64_t hi) {
               NormalStream stream(base.with_stream(base.stream_id + blk));
               for (std::uint64_t r = lo; r < hi; ++r) out[r] = f(stream);
             });
  return out;
}

// Common-random-number variant: f fills `outputs` values per replicate from
// one shared draw, so the compared quantities see identical samples.
template <class F>
std::vector<MeanEstimate> mc_mean_multi(const SimConfig& cfg, StreamSeed base,
                                        std::size_t outputs, F&& f) {
  cfg.validate();
  const std::size_t nblocks = detail::block_count(cfg.reps, cfg.block_size);
  std::vector<std::vector<double>> sums(outputs, std::vector<double>(nblocks, 0.0));
  std::vector<std::vector<double>> sqsums(outputs, std::vector<double>(nblocks, 0.0));
  run_blocks(cfg.reps, cfg.block_size, cfg.threads,
             [&](std::size_t blk, std::uint64_t lo, std::uint64_t hi) {
               NormalStream stream(base.with_stream(base.stream_id + blk));
               std::vector<double> row(outputs);
               std::vector<double> s(outputs, 0.0), s2(outputs, 0.0);
               for (std::uint64_t r = lo; r < hi; ++r) {
                 f(stream, std::span<double>(row));
                 for (std::size_t j = 0; j < outputs; ++j) {
                   s[j] += row[j];
                   s2[j] += row[j] * row[j];
                 }
               }
               for (std::size_t j = 0; j < outputs; ++j) {
                 sums[j][blk] = s[j];
                 sqsums[j][blk] = s2[j];
               }
             });
  std::vector<MeanEstimate> result(outputs);
  for (std::size_t j = 0; j < outputs; ++j) {
    result[j] = detail::merge_moments(sums[j], sqsums[j], cfg.reps);
  }
  return result;
}

// Like mc_collect but f fills several values per replicate; result[j][r] is
// output j of replicate r.
template <class F>
std::vector<std::vector<double>> mc_collect_multi(const SimConfig& cfg, StreamSeed base,
                                                  std::size_t outputs, F&& f) {
  cfg.validate();
  std::vector<std::vector<double>> out(outputs, std::vector<double>(cfg.reps));
  run_blocks(cfg.reps, cfg.block_size, cfg.threads,
             [&](std::size_t blk, std::uint64_t lo, std::uint64_t hi) {
               NormalStream stream(base.with_stream(base.stream_id + blk));
               std::vector<double> row(outputs);
               for (std::uint64_t r = lo; r < hi; ++r) {
                 f(stream, std::span<double>(row));
                 for (std::size_t j = 0; j < outputs; ++j) out[j][r] = row[j];
               }
             });
  return out;
}

}  // namespace mineq
