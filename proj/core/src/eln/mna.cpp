#include "mgsim/eln/mna.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "mgsim/errors.hpp"

namespace mgsim::eln {

CompanionStamp discretize(const Element& element, double dt) {
  if (dt <= 0.0) throw NonPositiveParameter("discretize: dt must be > 0");
  switch (element.kind) {
    case ElementKind::Resistor:
      if (element.value <= 0.0)
        throw NonPositiveParameter("resistor value must be > 0");
      return {1.0 / element.value, false};
    case ElementKind::Capacitor:
      if (element.value <= 0.0)
        throw NonPositiveParameter("capacitor value must be > 0");
      return {2.0 * element.value / dt, true};
    case ElementKind::Inductor:
      if (element.value <= 0.0)
        throw NonPositiveParameter("inductor value must be > 0");
      return {dt / (2.0 * element.value), true};
    default:
      return {0.0, false};
  }
}

namespace {

bool has_branch(ElementKind kind) {
  return kind == ElementKind::VoltageSource ||
         kind == ElementKind::CurrentSink || kind == ElementKind::Inductor;
}

}  // namespace

struct MnaSystem::Impl {
  const Network* network;
  double dt;
  std::size_t n_nodes;  // including ground
  std::size_t n_unknowns;

  std::vector<int> branch_index;   // per element, -1 if none
  std::vector<double> conductance; // per element (companion where reactive)
  std::vector<double> drive;       // per element
  std::vector<double> hist;        // history current, reactive elements
  std::vector<double> prev_v;      // last branch voltage, reactive elements
  std::vector<double> prev_i;      // last element current (p->n), all elements

  Eigen::MatrixXd G;
  Eigen::FullPivLU<Eigen::MatrixXd> lu;
  Eigen::VectorXd b, x;

  int vrow(NodeId node) const { return node - 1; }  // ground dropped

  void add_g(NodeId p, NodeId n, double g) {
    if (p != Network::ground) G(vrow(p), vrow(p)) += g;
    if (n != Network::ground) G(vrow(n), vrow(n)) += g;
    if (p != Network::ground && n != Network::ground) {
      G(vrow(p), vrow(n)) -= g;
      G(vrow(n), vrow(p)) -= g;
    }
  }

  void assemble() {
    const auto& elems = network->elements();
    branch_index.assign(elems.size(), -1);
    conductance.assign(elems.size(), 0.0);
    drive.assign(elems.size(), 0.0);
    hist.assign(elems.size(), 0.0);
    prev_v.assign(elems.size(), 0.0);
    prev_i.assign(elems.size(), 0.0);

    int next_branch = static_cast<int>(n_nodes) - 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (has_branch(elems[i].kind)) branch_index[i] = next_branch++;
    n_unknowns = static_cast<std::size_t>(next_branch);

    G = Eigen::MatrixXd::Zero(n_unknowns, n_unknowns);
    b = Eigen::VectorXd::Zero(n_unknowns);
    x = Eigen::VectorXd::Zero(n_unknowns);

    for (std::size_t i = 0; i < elems.size(); ++i) {
      const Element& e = elems[i];
      switch (e.kind) {
        case ElementKind::Resistor:
        case ElementKind::Capacitor:
          conductance[i] = discretize(e, dt).conductance;
          add_g(e.p, e.n, conductance[i]);
          break;
        case ElementKind::Inductor: {
          conductance[i] = discretize(e, dt).conductance;
          const int col = branch_index[i];
          if (e.p != Network::ground) {
            G(vrow(e.p), col) += 1.0;
            G(col, vrow(e.p)) -= conductance[i];
          }
          if (e.n != Network::ground) {
            G(vrow(e.n), col) -= 1.0;
            G(col, vrow(e.n)) += conductance[i];
          }
          G(col, col) += 1.0;
          break;
        }
        case ElementKind::VoltageSource:
        case ElementKind::CurrentSink: {
          const int col = branch_index[i];
          if (e.p != Network::ground) {
            G(vrow(e.p), col) += 1.0;
            G(col, vrow(e.p)) += 1.0;
          }
          if (e.n != Network::ground) {
            G(vrow(e.n), col) -= 1.0;
            G(col, vrow(e.n)) -= 1.0;
          }
          break;
        }
        case ElementKind::CurrentSource:
        case ElementKind::VoltageSink:
          break;
      }
    }

    lu.compute(G);
    if (!lu.isInvertible())
      throw SingularMatrix(
          "MNA matrix is singular: floating subnetwork, missing ground path, "
          "or inconsistent source loop");
  }

  double branch_voltage(const Element& e) const {
    double v = 0.0;
    if (e.p != Network::ground) v += x(vrow(e.p));
    if (e.n != Network::ground) v -= x(vrow(e.n));
    return v;
  }

  void step() {
    const auto& elems = network->elements();
    b.setZero();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const Element& e = elems[i];
      switch (e.kind) {
        case ElementKind::Capacitor: {
          const double ih = conductance[i] * prev_v[i] + prev_i[i];
          hist[i] = ih;
          if (e.p != Network::ground) b(vrow(e.p)) += ih;
          if (e.n != Network::ground) b(vrow(e.n)) -= ih;
          break;
        }
        case ElementKind::Inductor: {
          const double ih = prev_i[i] + conductance[i] * prev_v[i];
          hist[i] = ih;
          b(branch_index[i]) += ih;
          break;
        }
        case ElementKind::VoltageSource:
          b(branch_index[i]) += drive[i];
          break;
        case ElementKind::CurrentSource:
          // drive > 0 pushes current out of n into p
          if (e.p != Network::ground) b(vrow(e.p)) += drive[i];
          if (e.n != Network::ground) b(vrow(e.n)) -= drive[i];
          break;
        default:
          break;
      }
    }

    x = lu.solve(b);
    if (!x.allFinite())
      throw NonFiniteSolution("MNA solve produced a non-finite value");

    for (std::size_t i = 0; i < elems.size(); ++i) {
      const Element& e = elems[i];
      const double v = branch_voltage(e);
      switch (e.kind) {
        case ElementKind::Resistor:
          prev_i[i] = conductance[i] * v;
          break;
        case ElementKind::Capacitor:
          prev_i[i] = conductance[i] * v - hist[i];
          prev_v[i] = v;
          break;
        case ElementKind::Inductor:
          prev_i[i] = x(branch_index[i]);
          prev_v[i] = v;
          break;
        case ElementKind::VoltageSource:
        case ElementKind::CurrentSink:
          prev_i[i] = x(branch_index[i]);
          break;
        case ElementKind::CurrentSource:
          prev_i[i] = -drive[i];
          break;
        case ElementKind::VoltageSink:
          prev_i[i] = 0.0;
          break;
      }
    }
  }
};

MnaSystem::MnaSystem(const Network& network, double dt)
    : impl_(std::make_unique<Impl>()), dt_(dt) {
  if (dt <= 0.0) throw NonPositiveParameter("MnaSystem: dt must be > 0");
  impl_->network = &network;
  impl_->dt = dt;
  impl_->n_nodes = network.node_count();
  impl_->assemble();
}

MnaSystem::~MnaSystem() = default;
MnaSystem::MnaSystem(MnaSystem&&) noexcept = default;
MnaSystem& MnaSystem::operator=(MnaSystem&&) noexcept = default;

std::size_t MnaSystem::dimension() const { return impl_->n_unknowns; }

void MnaSystem::set_drive(ElementId id, double value) {
  const Element& e = impl_->network->element(id);
  if (e.kind != ElementKind::VoltageSource && e.kind != ElementKind::CurrentSource)
    throw InvalidParams("set_drive: element is not a driven source");
  if (!std::isfinite(value))
    throw NonFiniteSolution("set_drive: drive value must be finite");
  impl_->drive[id] = value;
}

void MnaSystem::set_initial_voltage(ElementId id, double volts) {
  if (impl_->network->element(id).kind != ElementKind::Capacitor)
    throw InvalidParams("set_initial_voltage: element is not a capacitor");
  impl_->prev_v[id] = volts;
}

void MnaSystem::set_initial_current(ElementId id, double amps) {
  if (impl_->network->element(id).kind != ElementKind::Inductor)
    throw InvalidParams("set_initial_current: element is not an inductor");
  impl_->prev_i[id] = amps;
}

void MnaSystem::step() { impl_->step(); }

double MnaSystem::node_voltage(NodeId node) const {
  if (node == Network::ground) return 0.0;
  return impl_->x(impl_->vrow(node));
}

double MnaSystem::sink_value(ElementId id) const {
  const Element& e = impl_->network->element(id);
  if (e.kind == ElementKind::VoltageSink) return impl_->branch_voltage(e);
  if (e.kind == ElementKind::CurrentSink) return impl_->x(impl_->branch_index[id]);
  throw InvalidParams("sink_value: element is not a sink");
}

double MnaSystem::element_current(ElementId id) const {
  return impl_->prev_i[id];
}

std::vector<double> MnaSystem::system_matrix() const {
  std::vector<double> out(impl_->n_unknowns * impl_->n_unknowns);
  for (std::size_t r = 0; r < impl_->n_unknowns; ++r)
    for (std::size_t c = 0; c < impl_->n_unknowns; ++c)
      out[r * impl_->n_unknowns + c] = impl_->G(r, c);
  return out;
}

}  // namespace mgsim::eln
