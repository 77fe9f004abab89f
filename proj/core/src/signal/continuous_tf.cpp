#include "mgsim/signal/continuous_tf.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "mgsim/errors.hpp"

namespace mgsim::signal {

ContinuousTransferFunction::ContinuousTransferFunction(std::vector<double> num,
                                                       std::vector<double> den,
                                                       double dt)
    : dt_(dt) {
  if (dt <= 0.0) throw InvalidParams("continuous transfer function: dt > 0");
  while (!den.empty() && den.front() == 0.0) den.erase(den.begin());
  while (!num.empty() && num.front() == 0.0) num.erase(num.begin());
  if (den.empty())
    throw ImproperTransferFunction("denominator must be nonzero");
  if (num.size() > den.size())
    throw ImproperTransferFunction(
        "numerator order exceeds denominator order");

  n_ = den.size() - 1;
  const double lead = den.front();
  std::vector<double> a(n_);  // monic denominator a_1..a_n
  for (std::size_t k = 0; k < n_; ++k) a[k] = den[k + 1] / lead;
  std::vector<double> beta(n_ + 1, 0.0);  // numerator padded to order n
  for (std::size_t k = 0; k < num.size(); ++k)
    beta[n_ + 1 - num.size() + k] = num[k] / lead;

  d_ = beta[0];
  c_.assign(n_, 0.0);
  for (std::size_t k = 1; k <= n_; ++k)
    c_[n_ - k] = beta[k] - d_ * a[k - 1];  // state x1 carries s^0

  if (n_ == 0) {
    x_.clear();
    return;
  }

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n_, n_);
  for (std::size_t r = 0; r + 1 < n_; ++r) A(r, r + 1) = 1.0;
  for (std::size_t k = 0; k < n_; ++k) A(n_ - 1, k) = -a[n_ - 1 - k];
  Eigen::VectorXd B = Eigen::VectorXd::Zero(n_);
  B(n_ - 1) = 1.0;

  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n_, n_);
  Eigen::MatrixXd M = I - (dt_ / 2.0) * A;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  if (!lu.isInvertible())
    throw ImproperTransferFunction("trapezoidal step matrix is singular");
  Eigen::MatrixXd Ad = lu.solve(I + (dt_ / 2.0) * A);
  Eigen::VectorXd Bd = lu.solve((dt_ / 2.0) * B);

  ad_.resize(n_ * n_);
  bd_.resize(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    bd_[r] = Bd(r);
    for (std::size_t cidx = 0; cidx < n_; ++cidx) ad_[r * n_ + cidx] = Ad(r, cidx);
  }
  x_.assign(n_, 0.0);
}

double ContinuousTransferFunction::step(double u) {
  if (n_ == 0) {
    u_prev_ = u;
    return d_ * u;
  }
  // The first sample defines the input at t = 0; integration starts with the
  // second sample.
  if (!primed_) {
    primed_ = true;
    u_prev_ = u;
    double y = d_ * u;
    for (std::size_t k = 0; k < n_; ++k) y += c_[k] * x_[k];
    return y;
  }
  std::vector<double> next(n_, 0.0);
  const double usum = u_prev_ + u;
  for (std::size_t r = 0; r < n_; ++r) {
    double acc = bd_[r] * usum;
    for (std::size_t k = 0; k < n_; ++k) acc += ad_[r * n_ + k] * x_[k];
    next[r] = acc;
  }
  x_ = std::move(next);
  u_prev_ = u;

  double y = d_ * u;
  for (std::size_t k = 0; k < n_; ++k) y += c_[k] * x_[k];
  return y;
}

void ContinuousTransferFunction::reset() {
  std::fill(x_.begin(), x_.end(), 0.0);
  u_prev_ = 0.0;
  primed_ = false;
}

}  // namespace mgsim::signal
