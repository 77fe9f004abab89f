#ifndef MGSIM_SIGNAL_SOURCES_HPP
#define MGSIM_SIGNAL_SOURCES_HPP

#include <cmath>
#include <numbers>
#include <string>

#include "mgsim/errors.hpp"
#include "mgsim/tdf/block.hpp"

namespace mgsim::signal {

inline double sine_source(double amplitude, double frequency_hz,
                          double phase_rad, double offset, double t) {
  if (frequency_hz < 0.0)
    throw InvalidParams("sine_source: frequency must be >= 0");
  return offset +
         amplitude *
             std::sin(2.0 * std::numbers::pi * frequency_hz * t + phase_rad);
}

/// Sine generator parametrized by amplitude, frequency, phase and offset.
class SineBlock final : public tdf::Block {
 public:
  SineBlock(std::string name, double timestep, double amplitude,
            double frequency_hz, double phase_rad = 0.0, double offset = 0.0)
      : Block(std::move(name), timestep),
        amplitude_(amplitude),
        frequency_hz_(frequency_hz),
        phase_rad_(phase_rad),
        offset_(offset) {
    out_ = add_out();
  }

  std::size_t out_value() const { return out_; }

  void process(Activation& act) override {
    act.out(out_)[0] = sine_source(amplitude_, frequency_hz_, phase_rad_,
                                   offset_, act.time());
  }

 private:
  double amplitude_, frequency_hz_, phase_rad_, offset_;
  std::size_t out_;
};

class ConstantBlock final : public tdf::Block {
 public:
  ConstantBlock(std::string name, double timestep, double value)
      : Block(std::move(name), timestep), value_(value) {
    out_ = add_out();
  }

  std::size_t out_value() const { return out_; }

  void process(Activation& act) override { act.out(out_)[0] = value_; }

 private:
  double value_;
  std::size_t out_;
};

}  // namespace mgsim::signal

#endif
