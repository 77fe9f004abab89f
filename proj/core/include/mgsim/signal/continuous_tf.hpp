#ifndef MGSIM_SIGNAL_CONTINUOUS_TF_HPP
#define MGSIM_SIGNAL_CONTINUOUS_TF_HPP

#include <vector>

namespace mgsim::signal {

/// s-domain transfer function num(s)/den(s), coefficients highest power
/// first, realized in controllable-canonical state space and advanced with
/// the trapezoidal rule (input averaged across the step). den order must be
/// >= num order; 1/s is den {1, 0}.
class ContinuousTransferFunction {
 public:
  ContinuousTransferFunction(std::vector<double> num, std::vector<double> den,
                             double dt);

  double step(double u);
  void reset();
  double dt() const { return dt_; }

 private:
  std::size_t n_;
  double dt_;
  double d_;                      // direct feedthrough
  std::vector<double> ad_, bd_;   // discretized update, row-major n x n and n
  std::vector<double> c_;
  std::vector<double> x_;
  double u_prev_ = 0.0;
  bool primed_ = false;
};

}  // namespace mgsim::signal

#endif
