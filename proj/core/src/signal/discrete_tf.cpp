#include "mgsim/signal/discrete_tf.hpp"

#include <algorithm>

#include "mgsim/errors.hpp"

namespace mgsim::signal {

DiscreteTransferFunction::DiscreteTransferFunction(std::vector<double> a,
                                                   std::vector<double> b,
                                                   double sample_period,
                                                   double b0)
    : a_(std::move(a)), b_(std::move(b)), b0_(b0), ts_(sample_period) {
  if (a_.empty() && b_.empty())
    throw InvalidParams("discrete transfer function needs coefficients");
  if (ts_ <= 0.0) throw InvalidParams("sample period must be > 0");
  const std::size_t depth = std::max(a_.size(), b_.size());
  x_hist_.assign(depth, 0.0);
  y_hist_.assign(depth, 0.0);
}

double DiscreteTransferFunction::step(double x) {
  double y = b0_ * x;
  for (std::size_t k = 0; k < a_.size(); ++k) y -= a_[k] * y_hist_[k];
  for (std::size_t k = 0; k < b_.size(); ++k) y += b_[k] * x_hist_[k];

  for (std::size_t k = x_hist_.size(); k-- > 1;) {
    x_hist_[k] = x_hist_[k - 1];
    y_hist_[k] = y_hist_[k - 1];
  }
  x_hist_[0] = x;
  y_hist_[0] = y;
  return y;
}

void DiscreteTransferFunction::reset() {
  std::fill(x_hist_.begin(), x_hist_.end(), 0.0);
  std::fill(y_hist_.begin(), y_hist_.end(), 0.0);
}

double DiscreteTransferFunction::dc_gain() const {
  double num = b0_, den = 1.0;
  for (double v : b_) num += v;
  for (double v : a_) den += v;
  return num / den;
}

}  // namespace mgsim::signal
