#ifndef MGSIM_SIGNAL_DISCRETE_TF_HPP
#define MGSIM_SIGNAL_DISCRETE_TF_HPP

#include <vector>

namespace mgsim::signal {

/// z-domain transfer function run as a difference equation:
///
///   y[n] = b0 x[n] - sum_{k=1..N} a[k] y[n-k] + sum_{k=1..M} b[k] x[n-k]
///
/// a holds the denominator coefficients a_1..a_N, b the numerator b_1..b_M.
/// b0 defaults to 0, which is the strictly-causal form; a nonzero b0 adds
/// direct feedthrough. Histories are zero-initialized.
class DiscreteTransferFunction {
 public:
  DiscreteTransferFunction(std::vector<double> a, std::vector<double> b,
                           double sample_period, double b0 = 0.0);

  double step(double x);
  void reset();

  double sample_period() const { return ts_; }
  /// b0 + sum(b) over 1 + sum(a); the steady output for unit input.
  double dc_gain() const;

 private:
  std::vector<double> a_, b_;
  double b0_;
  double ts_;
  std::vector<double> x_hist_, y_hist_;  // newest first
};

}  // namespace mgsim::signal

#endif
