#ifndef MGSIM_TDF_BLOCK_HPP
#define MGSIM_TDF_BLOCK_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace mgsim::tdf {

class Engine;

/// One dataflow module with rate/delay-annotated ports and a fixed timestep.
///
/// A block reads `rate` samples from every input port and writes `rate`
/// samples to every output port each time it fires. `delay` on an input port
/// pre-loads that many zero samples into the port buffer, which is how
/// feedback loops are broken.
class Block {
 public:
  struct InPort {
    int rate = 1;
    int delay = 0;
  };
  struct OutPort {
    int rate = 1;
  };

  /// View of one firing: port sample windows plus the nominal firing time.
  class Activation {
   public:
    double time() const { return time_; }
    std::span<const double> in(std::size_t port) const { return ins_[port]; }
    std::span<double> out(std::size_t port) { return outs_[port]; }
    /// Newest sample on an input port (decimating read).
    double in_last(std::size_t port) const { return ins_[port].back(); }

   private:
    friend class Engine;
    double time_ = 0.0;
    std::span<std::span<const double>> ins_;
    std::span<std::span<double>> outs_;
  };

  Block(std::string name, double timestep);
  virtual ~Block() = default;
  Block(const Block&) = delete;
  Block& operator=(const Block&) = delete;

  const std::string& name() const { return name_; }
  double timestep() const { return timestep_; }
  std::size_t in_count() const { return ins_.size(); }
  std::size_t out_count() const { return outs_.size(); }
  const InPort& in_port(std::size_t i) const { return ins_[i]; }
  const OutPort& out_port(std::size_t i) const { return outs_[i]; }

  virtual void process(Activation& act) = 0;

 protected:
  std::size_t add_in(int rate = 1, int delay = 0);
  std::size_t add_out(int rate = 1);

 private:
  std::string name_;
  double timestep_;
  std::vector<InPort> ins_;
  std::vector<OutPort> outs_;
};

}  // namespace mgsim::tdf

#endif
