#include "mgsim/eln/network.hpp"

#include <cstdio>
#include <ostream>

#include "mgsim/errors.hpp"

namespace mgsim::eln {
namespace {

const char* kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::Resistor: return "resistor";
    case ElementKind::Capacitor: return "capacitor";
    case ElementKind::Inductor: return "inductor";
    case ElementKind::VoltageSource: return "voltage_source";
    case ElementKind::CurrentSource: return "current_source";
    case ElementKind::VoltageSink: return "voltage_sink";
    case ElementKind::CurrentSink: return "current_sink";
  }
  return "?";
}

}  // namespace

NodeId Network::add_node() { return static_cast<NodeId>(node_count_++); }

void Network::check_node(NodeId id) const {
  if (id < 0 || std::size_t(id) >= node_count_)
    throw InvalidParams("element references unknown node " + std::to_string(id));
}

ElementId Network::add(ElementKind kind, NodeId p, NodeId n, double value,
                       std::string label) {
  check_node(p);
  check_node(n);
  if (p == n) throw InvalidParams("element terminals must differ");
  elements_.push_back(Element{kind, p, n, value, std::move(label)});
  return elements_.size() - 1;
}

ElementId Network::add_resistor(NodeId p, NodeId n, double ohms, std::string label) {
  if (ohms <= 0.0) throw NonPositiveParameter("resistor value must be > 0");
  return add(ElementKind::Resistor, p, n, ohms, std::move(label));
}

ElementId Network::add_capacitor(NodeId p, NodeId n, double farads, std::string label) {
  if (farads <= 0.0) throw NonPositiveParameter("capacitor value must be > 0");
  return add(ElementKind::Capacitor, p, n, farads, std::move(label));
}

ElementId Network::add_inductor(NodeId p, NodeId n, double henries, std::string label) {
  if (henries <= 0.0) throw NonPositiveParameter("inductor value must be > 0");
  return add(ElementKind::Inductor, p, n, henries, std::move(label));
}

ElementId Network::add_voltage_source(NodeId p, NodeId n, std::string label) {
  return add(ElementKind::VoltageSource, p, n, 0.0, std::move(label));
}

ElementId Network::add_current_source(NodeId p, NodeId n, std::string label) {
  return add(ElementKind::CurrentSource, p, n, 0.0, std::move(label));
}

ElementId Network::add_voltage_sink(NodeId p, NodeId n, std::string label) {
  return add(ElementKind::VoltageSink, p, n, 0.0, std::move(label));
}

ElementId Network::add_current_sink(NodeId p, NodeId n, std::string label) {
  return add(ElementKind::CurrentSink, p, n, 0.0, std::move(label));
}

void Network::dump(std::ostream& os) const {
  char line[128];
  for (const Element& e : elements_) {
    std::snprintf(line, sizeof(line), "%s %d %d %.17g\n", kind_name(e.kind),
                  e.p, e.n, e.value);
    os << line;
  }
}

}  // namespace mgsim::eln
