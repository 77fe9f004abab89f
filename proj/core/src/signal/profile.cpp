#include "mgsim/signal/profile.hpp"

#include "mgsim/errors.hpp"

namespace mgsim::signal {

ReferenceProfile::ReferenceProfile(
    ProfileKind kind, std::vector<std::pair<double, double>> breakpoints)
    : kind_(kind), points_(std::move(breakpoints)) {
  if (points_.empty())
    throw InvalidParams("profile needs at least one breakpoint");
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (points_[i].first <= points_[i - 1].first)
      throw InvalidParams("profile breakpoint times must be strictly increasing");
}

double ReferenceProfile::eval(double t) const {
  if (t <= points_.front().first) return points_.front().second;
  if (t >= points_.back().first) return points_.back().second;

  std::size_t i = 1;
  while (points_[i].first <= t) ++i;
  const auto& [t0, v0] = points_[i - 1];
  const auto& [t1, v1] = points_[i];

  if (kind_ == ProfileKind::Step) return v0;
  return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
}

}  // namespace mgsim::signal
