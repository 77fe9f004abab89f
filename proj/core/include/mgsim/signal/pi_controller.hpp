#ifndef MGSIM_SIGNAL_PI_CONTROLLER_HPP
#define MGSIM_SIGNAL_PI_CONTROLLER_HPP

#include "mgsim/errors.hpp"

namespace mgsim::signal {

/// Parallel discrete PI controller, Kp + Ki*Ts/(z-1), integral path advanced
/// by forward Euler before the output is formed.
class PiController {
 public:
  PiController(double kp, double ki, double sample_period)
      : kp_(kp), ki_(ki), ts_(sample_period) {
    if (ts_ <= 0.0) throw InvalidParams("PI controller: Ts must be > 0");
  }

  double step(double error) {
    acc_ += ki_ * ts_ * error;
    return kp_ * error + acc_;
  }

  void reset() { acc_ = 0.0; }
  double accumulator() const { return acc_; }
  double kp() const { return kp_; }
  double ki() const { return ki_; }

 private:
  double kp_, ki_, ts_;
  double acc_ = 0.0;
};

}  // namespace mgsim::signal

#endif
