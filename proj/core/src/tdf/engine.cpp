#include "mgsim/tdf/engine.hpp"

#include <chrono>
#include <cmath>

#include "mgsim/errors.hpp"

namespace mgsim::tdf {

void Engine::Fifo::push(double v) {
  ring[(head + size) % ring.size()] = v;
  ++size;
}

void Engine::Fifo::pop_into(std::size_t n, double* dst) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = ring[(head + i) % ring.size()];
  head = (head + n) % ring.size();
  size -= n;
}

Engine::Engine(Graph graph)
    : graph_(std::move(graph)), schedule_(build_schedule(graph_)) {
  const std::size_t nb = graph_.block_count();
  const auto& edges = graph_.edges();

  fifos_.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    fifos_[i].ring.assign(std::max<std::size_t>(schedule_.edge_capacity[i], 1),
                          0.0);
    const int delay =
        graph_.block(edges[i].dst_block).in_port(edges[i].dst_port).delay;
    for (int d = 0; d < delay; ++d) fifos_[i].push(0.0);
  }

  in_edge_.resize(nb);
  out_edges_.resize(nb);
  in_scratch_.resize(nb);
  out_scratch_.resize(nb);
  in_views_.resize(nb);
  out_views_.resize(nb);
  fire_count_.assign(nb, 0);
  for (std::size_t b = 0; b < nb; ++b) {
    const Block& blk = graph_.block(b);
    in_edge_[b].assign(blk.in_count(), 0);
    out_edges_[b].resize(blk.out_count());
    in_scratch_[b].resize(blk.in_count());
    out_scratch_[b].resize(blk.out_count());
    for (std::size_t p = 0; p < blk.in_count(); ++p)
      in_scratch_[b][p].assign(blk.in_port(p).rate, 0.0);
    for (std::size_t p = 0; p < blk.out_count(); ++p)
      out_scratch_[b][p].assign(blk.out_port(p).rate, 0.0);
    in_views_[b].resize(blk.in_count());
    out_views_[b].resize(blk.out_count());
    for (std::size_t p = 0; p < blk.in_count(); ++p)
      in_views_[b][p] = {in_scratch_[b][p].data(), in_scratch_[b][p].size()};
    for (std::size_t p = 0; p < blk.out_count(); ++p)
      out_views_[b][p] = {out_scratch_[b][p].data(), out_scratch_[b][p].size()};
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    in_edge_[edges[i].dst_block][edges[i].dst_port] = i;
    out_edges_[edges[i].src_block][edges[i].src_port].push_back(i);
  }
}

void Engine::fire(std::uint32_t b) {
  Block& blk = graph_.block(b);
  for (std::size_t p = 0; p < blk.in_count(); ++p)
    fifos_[in_edge_[b][p]].pop_into(blk.in_port(p).rate,
                                    in_scratch_[b][p].data());

  Block::Activation act;
  act.time_ = double(fire_count_[b]) * blk.timestep();
  act.ins_ = {in_views_[b].data(), in_views_[b].size()};
  act.outs_ = {out_views_[b].data(), out_views_[b].size()};
  blk.process(act);
  ++fire_count_[b];

  for (std::size_t p = 0; p < blk.out_count(); ++p)
    for (std::size_t e : out_edges_[b][p])
      for (double v : out_scratch_[b][p]) fifos_[e].push(v);
}

void Engine::step() {
  const std::uint64_t instant = instant_counter_ % schedule_.instants_per_period;
  const std::size_t begin = schedule_.instant_begin[instant];
  const std::size_t end = schedule_.instant_begin[instant + 1];
  for (std::size_t k = begin; k < end; ++k) fire(schedule_.firings[k].block);
  ++instant_counter_;
}

RunReport Engine::run(double duration) {
  if (duration <= 0.0) throw GraphError("run: duration must be positive");
  const double ratio = duration / schedule_.base_step;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, rounded))
    throw GraphError("run: duration is not a whole number of base steps");

  const auto instants = static_cast<std::uint64_t>(rounded) + 1;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t i = 0; i < instants; ++i) step();
  const auto t1 = std::chrono::steady_clock::now();

  RunReport report;
  report.instants = instants;
  report.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  return report;
}

}  // namespace mgsim::tdf
