#ifndef MGSIM_TDF_ENGINE_HPP
#define MGSIM_TDF_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "mgsim/tdf/graph.hpp"
#include "mgsim/tdf/schedule.hpp"

namespace mgsim::tdf {

struct RunReport {
  std::uint64_t instants = 0;
  double wall_seconds = 0.0;
};

/// Executes a scheduled cluster. Single-threaded; owns the graph and all port
/// buffers. Time is an integer instant counter times base_step, so long runs
/// do not accumulate floating-point drift.
class Engine {
 public:
  explicit Engine(Graph graph);

  const Schedule& schedule() const { return schedule_; }
  Graph& graph() { return graph_; }
  double base_step() const { return schedule_.base_step; }
  std::uint64_t instants_done() const { return instant_counter_; }
  double time() const { return double(instant_counter_) * schedule_.base_step; }

  /// Executes every firing of the current instant and advances the clock one
  /// base step.
  void step();

  /// Runs floor(duration/base_step)+1 sampling instants (t = 0 inclusive).
  /// duration must be a whole number of base steps.
  RunReport run(double duration);

 private:
  struct Fifo {
    std::vector<double> ring;
    std::size_t head = 0, size = 0;
    void push(double v);
    void pop_into(std::size_t n, double* dst);
  };

  void fire(std::uint32_t block_index);

  Graph graph_;
  Schedule schedule_;
  std::vector<Fifo> fifos_;                          // one per edge
  std::vector<std::vector<std::size_t>> in_edge_;    // [block][in port] -> edge
  std::vector<std::vector<std::vector<std::size_t>>> out_edges_;
  std::vector<std::uint64_t> fire_count_;
  std::vector<std::vector<std::vector<double>>> in_scratch_, out_scratch_;
  std::vector<std::vector<std::span<const double>>> in_views_;
  std::vector<std::vector<std::span<double>>> out_views_;
  std::uint64_t instant_counter_ = 0;
};

}  // namespace mgsim::tdf

#endif
