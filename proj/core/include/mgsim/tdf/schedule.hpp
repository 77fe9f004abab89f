#ifndef MGSIM_TDF_SCHEDULE_HPP
#define MGSIM_TDF_SCHEDULE_HPP

#include <cstdint>
#include <vector>

#include "mgsim/tdf/graph.hpp"

namespace mgsim::tdf {

/// Static firing order for one cluster period (the LCM of all block
/// timesteps). Firings are grouped by the base-step instant they execute at;
/// within an instant they are ordered so that every read is satisfied either
/// by a sample produced earlier in the order or by port-delay history.
struct Schedule {
  double base_step = 0.0;
  std::uint64_t instants_per_period = 0;

  struct Firing {
    std::uint32_t block;
    std::uint64_t instant;  // base-step offset within the period
  };
  std::vector<Firing> firings;
  /// firings index range for instant i: [instant_begin[i], instant_begin[i+1])
  std::vector<std::size_t> instant_begin;
  /// per-block firings per period
  std::vector<std::uint64_t> repetitions;
  /// per-block timestep / base_step
  std::vector<std::uint64_t> strides;
  /// high-water token count per graph edge, used to size ring buffers
  std::vector<std::size_t> edge_capacity;
};

/// Validates rates, delays and timesteps and computes the static schedule.
/// Throws CyclicWithoutDelay for algebraic loops, InconsistentTimestep when a
/// block timestep is not an integer multiple of the base step, RateMismatch
/// when an edge produces and consumes different sample counts per period, and
/// GraphError for structural problems (unconnected input, empty graph).
Schedule build_schedule(const Graph& graph);

}  // namespace mgsim::tdf

#endif
