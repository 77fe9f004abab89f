#ifndef MGSIM_ELN_MNA_HPP
#define MGSIM_ELN_MNA_HPP

#include <memory>
#include <vector>

#include "mgsim/eln/network.hpp"

namespace mgsim::eln {

/// Trapezoidal companion model of one element: an equivalent conductance, plus
/// a history current source for the reactive kinds.
struct CompanionStamp {
  double conductance = 0.0;
  bool has_history = false;
};

/// Companion model for a fixed step size. Resistor -> 1/R; capacitor -> 2C/dt
/// with history; inductor -> dt/(2L) with history.
CompanionStamp discretize(const Element& element, double dt);

/// Modified-nodal-analysis system for one network at a fixed step size.
///
/// Unknowns are the non-ground node voltages followed by the branch currents
/// of voltage sources, current sinks and inductors. The system matrix is
/// constant for a fixed topology and dt; it is factorized once at assembly and
/// only the right-hand side changes per step.
class MnaSystem {
 public:
  MnaSystem(const Network& network, double dt);
  ~MnaSystem();
  MnaSystem(MnaSystem&&) noexcept;
  MnaSystem& operator=(MnaSystem&&) noexcept;

  double dt() const { return dt_; }
  std::size_t dimension() const;

  /// Instantaneous value for a driven source, applied at the next solve.
  void set_drive(ElementId id, double value);

  /// Seed a capacitor voltage or inductor current before the first step.
  void set_initial_voltage(ElementId id, double volts);
  void set_initial_current(ElementId id, double amps);

  /// Solves G x = b(t) with the current drives and updates companion
  /// histories. Throws NonFiniteSolution if the solve produces NaN/inf.
  void step();

  double node_voltage(NodeId node) const;
  /// Voltage sinks report v(p) - v(n); current sinks report branch current.
  double sink_value(ElementId id) const;
  /// Instantaneous current through any element, positive from p to n.
  double element_current(ElementId id) const;

  /// Dense copy of the stamped system matrix (row-major), for inspection.
  std::vector<double> system_matrix() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  double dt_;
};

}  // namespace mgsim::eln

#endif
