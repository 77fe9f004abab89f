#include "mgsim/tdf/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mgsim/errors.hpp"

namespace mgsim::tdf {
namespace {

std::uint64_t timestep_multiple(const Block& b, double base) {
  double ratio = b.timestep() / base;
  double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * ratio)
    throw InconsistentTimestep("block '" + b.name() + "': timestep " +
                               std::to_string(b.timestep()) +
                               " is not an integer multiple of the base step " +
                               std::to_string(base));
  return static_cast<std::uint64_t>(rounded);
}

}  // namespace

Schedule build_schedule(const Graph& graph) {
  const std::size_t nb = graph.block_count();
  if (nb == 0) throw GraphError("build_schedule: graph has no blocks");

  Schedule sched;
  double base = graph.block(0).timestep();
  for (std::size_t i = 1; i < nb; ++i)
    base = std::min(base, graph.block(i).timestep());
  sched.base_step = base;

  sched.strides.resize(nb);
  std::uint64_t period = 1;
  for (std::size_t i = 0; i < nb; ++i) {
    sched.strides[i] = timestep_multiple(graph.block(i), base);
    period = std::lcm(period, sched.strides[i]);
  }
  sched.instants_per_period = period;
  sched.repetitions.resize(nb);
  for (std::size_t i = 0; i < nb; ++i)
    sched.repetitions[i] = period / sched.strides[i];

  const auto& edges = graph.edges();

  // Every input port must have exactly one producer.
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t p = 0; p < graph.block(b).in_count(); ++p) {
      bool found = false;
      for (const auto& e : edges)
        if (e.dst_block == b && e.dst_port == p) found = true;
      if (!found)
        throw GraphError("block '" + graph.block(b).name() + "': input port " +
                         std::to_string(p) + " is unconnected");
    }
  }

  // Samples produced and consumed on an edge must balance over one period.
  for (const auto& e : edges) {
    const auto produced = sched.repetitions[e.src_block] *
                          graph.block(e.src_block).out_port(e.src_port).rate;
    const auto consumed = sched.repetitions[e.dst_block] *
                          graph.block(e.dst_block).in_port(e.dst_port).rate;
    if (produced != consumed) {
      std::ostringstream msg;
      msg << "edge " << graph.block(e.src_block).name() << " -> "
          << graph.block(e.dst_block).name() << ": " << produced
          << " samples produced vs " << consumed << " consumed per period";
      throw RateMismatch(msg.str());
    }
  }

  // Simulate token counts over one period, firing blocks as data allows.
  std::vector<std::size_t> tokens(edges.size());
  sched.edge_capacity.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    tokens[i] = graph.block(e.dst_block).in_port(e.dst_port).delay;
    sched.edge_capacity[i] = tokens[i];
  }

  std::vector<std::uint64_t> fired(nb, 0);
  sched.instant_begin.assign(period + 1, 0);

  auto can_fire = [&](std::size_t b) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (e.dst_block != b) continue;
      if (tokens[i] <
          std::size_t(graph.block(b).in_port(e.dst_port).rate))
        return false;
    }
    return true;
  };

  for (std::uint64_t instant = 0; instant < period; ++instant) {
    sched.instant_begin[instant] = sched.firings.size();
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (std::size_t b = 0; b < nb; ++b) {
        const std::uint64_t due = instant / sched.strides[b] + 1;
        if (fired[b] >= due || fired[b] >= sched.repetitions[b]) continue;
        if (!can_fire(b)) continue;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          const auto& e = edges[i];
          if (e.dst_block == b)
            tokens[i] -= graph.block(b).in_port(e.dst_port).rate;
          if (e.src_block == b) {
            tokens[i] += graph.block(b).out_port(e.src_port).rate;
            sched.edge_capacity[i] = std::max(sched.edge_capacity[i], tokens[i]);
          }
        }
        sched.firings.push_back(
            Schedule::Firing{static_cast<std::uint32_t>(b), instant});
        ++fired[b];
        progressed = true;
      }
    }
    // re-sort so firings of this instant keep block order of insertion; the
    // pass above already appends in a deterministic order.
  }
  sched.instant_begin[period] = sched.firings.size();

  for (std::size_t b = 0; b < nb; ++b) {
    if (fired[b] != sched.repetitions[b]) {
      std::ostringstream msg;
      msg << "algebraic loop: block '" << graph.block(b).name() << "' fired "
          << fired[b] << " of " << sched.repetitions[b]
          << " times per period; add a port delay on one edge of the cycle";
      throw CyclicWithoutDelay(msg.str());
    }
  }

  // A consistent schedule returns every buffer to its initial fill.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (tokens[i] !=
        std::size_t(graph.block(e.dst_block).in_port(e.dst_port).delay))
      throw GraphError("internal: token count not periodic on edge " +
                       graph.block(e.src_block).name() + " -> " +
                       graph.block(e.dst_block).name());
  }

  return sched;
}

}  // namespace mgsim::tdf
