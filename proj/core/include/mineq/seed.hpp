#pragma once

#include <cstdint>

namespace mineq {

// Names one reproducible random stream. Distinct (master, stream_id) pairs
// give statistically independent streams; the same pair always replays the
// identical draw sequence, on any platform and with any thread count.
struct StreamSeed {
  std::uint64_t master = 0;
  std::uint64_t stream_id = 0;

  [[nodiscard]] constexpr StreamSeed with_stream(std::uint64_t id) const {
    return StreamSeed{master, id};
  }

  friend constexpr bool operator==(const StreamSeed&, const StreamSeed&) = default;
};

// Every Monte Carlo entry point draws from its own stream-id domain so that
// nested computations sharing one master seed never consume the same stream.
// A domain reserves 2^32 consecutive ids; the block index is added to the
// base, and family sweeps additionally offset by member << 20.
namespace stream_domain {

inline constexpr std::uint64_t span = std::uint64_t{1} << 32;
inline constexpr std::uint64_t member_stride = std::uint64_t{1} << 20;

inline constexpr std::uint64_t user = 0;
inline constexpr std::uint64_t critical = 1 * span;
inline constexpr std::uint64_t power = 2 * span;
inline constexpr std::uint64_t ci_risk = 3 * span;
inline constexpr std::uint64_t bound_quantile = 4 * span;
inline constexpr std::uint64_t bound_power = 5 * span;
inline constexpr std::uint64_t family = 6 * span;
inline constexpr std::uint64_t loss_grid = 7 * span;

}  // namespace stream_domain

}  // namespace mineq
