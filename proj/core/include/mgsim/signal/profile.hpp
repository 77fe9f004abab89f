#ifndef MGSIM_SIGNAL_PROFILE_HPP
#define MGSIM_SIGNAL_PROFILE_HPP

#include <utility>
#include <vector>

namespace mgsim::signal {

enum class ProfileKind { Step, Ramp };

/// Piecewise reference signal over (time, value) breakpoints. Step profiles
/// hold each value with a right-continuous jump at the breakpoint; ramp
/// profiles interpolate linearly between breakpoints. Evaluation before the
/// first breakpoint returns the first value, after the last the last value.
class ReferenceProfile {
 public:
  ReferenceProfile() = default;
  ReferenceProfile(ProfileKind kind,
                   std::vector<std::pair<double, double>> breakpoints);

  double eval(double t) const;
  ProfileKind kind() const { return kind_; }
  const std::vector<std::pair<double, double>>& breakpoints() const {
    return points_;
  }

  static ReferenceProfile constant(double value) {
    return ReferenceProfile(ProfileKind::Step, {{0.0, value}});
  }

 private:
  ProfileKind kind_ = ProfileKind::Step;
  std::vector<std::pair<double, double>> points_{{0.0, 0.0}};
};

}  // namespace mgsim::signal

#endif
