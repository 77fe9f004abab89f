#ifndef MGSIM_TDF_GRAPH_HPP
#define MGSIM_TDF_GRAPH_HPP

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "mgsim/tdf/block.hpp"

namespace mgsim::tdf {

/// Blocks plus directed port-to-port connections. A connected graph forms one
/// cluster with a single static schedule.
class Graph {
 public:
  struct Edge {
    std::size_t src_block, src_port;
    std::size_t dst_block, dst_port;
  };

  template <class B, class... Args>
  B& add(Args&&... args) {
    auto block = std::make_unique<B>(std::forward<Args>(args)...);
    B& ref = *block;
    blocks_.push_back(std::move(block));
    return ref;
  }

  /// Connect src output port to dst input port. An input port accepts exactly
  /// one incoming edge; an output port may fan out.
  void connect(const Block& src, std::size_t src_port, const Block& dst,
               std::size_t dst_port);

  std::size_t block_count() const { return blocks_.size(); }
  Block& block(std::size_t i) { return *blocks_[i]; }
  const Block& block(std::size_t i) const { return *blocks_[i]; }
  std::size_t index_of(const Block& b) const;
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::vector<std::unique_ptr<Block>> blocks_;
  std::vector<Edge> edges_;
};

}  // namespace mgsim::tdf

#endif
