#ifndef MGSIM_ELN_NETWORK_HPP
#define MGSIM_ELN_NETWORK_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace mgsim::eln {

enum class ElementKind {
  Resistor,
  Capacitor,
  Inductor,
  VoltageSource,  // driven from a dataflow input each step
  CurrentSource,  // driven from a dataflow input each step
  VoltageSink,    // ideal voltmeter
  CurrentSink,    // ideal ammeter (0 V series branch)
};

using NodeId = int;
using ElementId = std::size_t;

struct Element {
  ElementKind kind;
  NodeId p = 0;
  NodeId n = 0;
  double value = 0.0;  // R [ohm], C [F], L [H]; unused for sources/sinks
  std::string label;
};

/// Conservative network description. Node 0 is ground (0 V) and exists from
/// construction; every network must keep at least one element path to it.
class Network {
 public:
  static constexpr NodeId ground = 0;

  NodeId add_node();
  std::size_t node_count() const { return node_count_; }

  ElementId add_resistor(NodeId p, NodeId n, double ohms, std::string label = "");
  ElementId add_capacitor(NodeId p, NodeId n, double farads, std::string label = "");
  ElementId add_inductor(NodeId p, NodeId n, double henries, std::string label = "");
  ElementId add_voltage_source(NodeId p, NodeId n, std::string label = "");
  ElementId add_current_source(NodeId p, NodeId n, std::string label = "");
  ElementId add_voltage_sink(NodeId p, NodeId n, std::string label = "");
  ElementId add_current_sink(NodeId p, NodeId n, std::string label = "");

  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(ElementId id) const { return elements_[id]; }

  /// Debug netlist, one element per line: `kind node_p node_n value`.
  void dump(std::ostream& os) const;

 private:
  ElementId add(ElementKind kind, NodeId p, NodeId n, double value,
                std::string label);
  void check_node(NodeId id) const;

  std::size_t node_count_ = 1;  // ground
  std::vector<Element> elements_;
};

}  // namespace mgsim::eln

#endif
