#ifndef MGSIM_SIGNAL_PARK_HPP
#define MGSIM_SIGNAL_PARK_HPP

#include <cmath>
#include <numbers>
#include <string>

#include "mgsim/tdf/block.hpp"

namespace mgsim::signal {

struct ThreePhase {
  double a = 0.0, b = 0.0, c = 0.0;
};

struct Dq0Frame {
  double d = 0.0, q = 0.0, z = 0.0;
};

inline constexpr double two_thirds_pi = 2.0 * std::numbers::pi / 3.0;

/// Amplitude-invariant Park transform; theta is the rotating-frame angle.
inline Dq0Frame abc_to_dq0(const ThreePhase& abc, double theta) {
  Dq0Frame out;
  out.d = (2.0 / 3.0) * (abc.a * std::sin(theta) +
                         abc.b * std::sin(theta - two_thirds_pi) +
                         abc.c * std::sin(theta + two_thirds_pi));
  out.q = (2.0 / 3.0) * (abc.a * std::cos(theta) +
                         abc.b * std::cos(theta - two_thirds_pi) +
                         abc.c * std::cos(theta + two_thirds_pi));
  out.z = (abc.a + abc.b + abc.c) / 3.0;
  return out;
}

/// Exact inverse of abc_to_dq0 at the same theta.
inline ThreePhase dq0_to_abc(const Dq0Frame& dq0, double theta) {
  ThreePhase out;
  out.a = dq0.d * std::sin(theta) + dq0.q * std::cos(theta) + dq0.z;
  out.b = dq0.d * std::sin(theta - two_thirds_pi) +
          dq0.q * std::cos(theta - two_thirds_pi) + dq0.z;
  out.c = dq0.d * std::sin(theta + two_thirds_pi) +
          dq0.q * std::cos(theta + two_thirds_pi) + dq0.z;
  return out;
}

/// abc -> dq0 dataflow block; theta is supplied per sample on a port.
class AbcToDq0Block final : public tdf::Block {
 public:
  AbcToDq0Block(std::string name, double timestep, int delay_abc = 0)
      : Block(std::move(name), timestep) {
    in_a_ = add_in(1, delay_abc);
    in_b_ = add_in(1, delay_abc);
    in_c_ = add_in(1, delay_abc);
    in_theta_ = add_in();
    out_d_ = add_out();
    out_q_ = add_out();
    out_z_ = add_out();
  }

  std::size_t in_a() const { return in_a_; }
  std::size_t in_b() const { return in_b_; }
  std::size_t in_c() const { return in_c_; }
  std::size_t in_theta() const { return in_theta_; }
  std::size_t out_d() const { return out_d_; }
  std::size_t out_q() const { return out_q_; }
  std::size_t out_z() const { return out_z_; }

  void process(Activation& act) override {
    const ThreePhase abc{act.in_last(in_a_), act.in_last(in_b_),
                         act.in_last(in_c_)};
    const Dq0Frame dq0 = abc_to_dq0(abc, act.in_last(in_theta_));
    act.out(out_d_)[0] = dq0.d;
    act.out(out_q_)[0] = dq0.q;
    act.out(out_z_)[0] = dq0.z;
  }

 private:
  std::size_t in_a_, in_b_, in_c_, in_theta_;
  std::size_t out_d_, out_q_, out_z_;
};

/// dq0 -> abc dataflow block.
class Dq0ToAbcBlock final : public tdf::Block {
 public:
  Dq0ToAbcBlock(std::string name, double timestep)
      : Block(std::move(name), timestep) {
    in_d_ = add_in();
    in_q_ = add_in();
    in_z_ = add_in();
    in_theta_ = add_in();
    out_a_ = add_out();
    out_b_ = add_out();
    out_c_ = add_out();
  }

  std::size_t in_d() const { return in_d_; }
  std::size_t in_q() const { return in_q_; }
  std::size_t in_z() const { return in_z_; }
  std::size_t in_theta() const { return in_theta_; }
  std::size_t out_a() const { return out_a_; }
  std::size_t out_b() const { return out_b_; }
  std::size_t out_c() const { return out_c_; }

  void process(Activation& act) override {
    const Dq0Frame dq0{act.in_last(in_d_), act.in_last(in_q_),
                       act.in_last(in_z_)};
    const ThreePhase abc = dq0_to_abc(dq0, act.in_last(in_theta_));
    act.out(out_a_)[0] = abc.a;
    act.out(out_b_)[0] = abc.b;
    act.out(out_c_)[0] = abc.c;
  }

 private:
  std::size_t in_d_, in_q_, in_z_, in_theta_;
  std::size_t out_a_, out_b_, out_c_;
};

}  // namespace mgsim::signal

#endif
