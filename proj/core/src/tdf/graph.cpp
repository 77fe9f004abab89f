#include "mgsim/tdf/graph.hpp"

#include "mgsim/errors.hpp"

namespace mgsim::tdf {

Block::Block(std::string name, double timestep)
    : name_(std::move(name)), timestep_(timestep) {
  if (timestep <= 0.0)
    throw GraphError("block '" + name_ + "': timestep must be positive");
}

std::size_t Block::add_in(int rate, int delay) {
  if (rate < 1)
    throw GraphError("block '" + name_ + "': port rate must be >= 1");
  if (delay < 0)
    throw GraphError("block '" + name_ + "': port delay must be >= 0");
  ins_.push_back(InPort{rate, delay});
  return ins_.size() - 1;
}

std::size_t Block::add_out(int rate) {
  if (rate < 1)
    throw GraphError("block '" + name_ + "': port rate must be >= 1");
  outs_.push_back(OutPort{rate});
  return outs_.size() - 1;
}

std::size_t Graph::index_of(const Block& b) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].get() == &b) return i;
  throw GraphError("block '" + b.name() + "' is not part of this graph");
}

void Graph::connect(const Block& src, std::size_t src_port, const Block& dst,
                    std::size_t dst_port) {
  std::size_t si = index_of(src);
  std::size_t di = index_of(dst);
  if (src_port >= src.out_count())
    throw GraphError("connect: no output port " + std::to_string(src_port) +
                     " on '" + src.name() + "'");
  if (dst_port >= dst.in_count())
    throw GraphError("connect: no input port " + std::to_string(dst_port) +
                     " on '" + dst.name() + "'");
  for (const Edge& e : edges_)
    if (e.dst_block == di && e.dst_port == dst_port)
      throw GraphError("connect: input port " + std::to_string(dst_port) +
                       " on '" + dst.name() + "' is already connected");
  edges_.push_back(Edge{si, src_port, di, dst_port});
}

}  // namespace mgsim::tdf
