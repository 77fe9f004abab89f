#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "mgsim/eln/mna.hpp"
#include "mgsim/eln/network.hpp"
#include "mgsim/errors.hpp"

using namespace mgsim;
using namespace mgsim::eln;

TEST_CASE("companion models") {
  CHECK(discretize(Element{ElementKind::Resistor, 1, 0, 5.0, ""}, 50e-6)
            .conductance == doctest::Approx(0.2));
  CHECK(discretize(Element{ElementKind::Capacitor, 1, 0, 80e-6, ""}, 50e-6)
            .conductance == doctest::Approx(3.2));
  CHECK(discretize(Element{ElementKind::Inductor, 1, 0, 1e-4, ""}, 50e-6)
            .conductance == doctest::Approx(0.25));
  CHECK_FALSE(
      discretize(Element{ElementKind::Resistor, 1, 0, 5.0, ""}, 1e-3).has_history);
  CHECK_THROWS_AS(
      discretize(Element{ElementKind::Capacitor, 1, 0, -1.0, ""}, 1e-3),
      NonPositiveParameter);
  CHECK_THROWS_AS(discretize(Element{ElementKind::Resistor, 1, 0, 1.0, ""}, 0.0),
                  NonPositiveParameter);
}

TEST_CASE("driven source with one resistor gives a 2x2 system") {
  Network net;
  NodeId n1 = net.add_node();
  net.add_voltage_source(n1, Network::ground, "vs");
  net.add_resistor(n1, Network::ground, 10.0, "r");
  MnaSystem mna(net, 1e-3);
  CHECK(mna.dimension() == 2);
}

TEST_CASE("network with no ground path is singular") {
  Network net;
  NodeId n1 = net.add_node();
  NodeId n2 = net.add_node();
  net.add_resistor(n1, n2, 10.0);
  net.add_voltage_source(n1, n2);
  CHECK_THROWS_AS(MnaSystem(net, 1e-3), SingularMatrix);
}

TEST_CASE("resistive divider splits the source evenly") {
  Network net;
  NodeId top = net.add_node();
  NodeId mid = net.add_node();
  ElementId vs = net.add_voltage_source(top, Network::ground);
  net.add_resistor(top, mid, 5.0);
  net.add_resistor(mid, Network::ground, 5.0);
  ElementId vm = net.add_voltage_sink(mid, Network::ground);

  MnaSystem mna(net, 1e-3);
  mna.set_drive(vs, 10.0);
  mna.step();
  CHECK(mna.node_voltage(mid) == doctest::Approx(5.0));
  CHECK(mna.sink_value(vm) == doctest::Approx(5.0));
}

TEST_CASE("system matrix is constant across steps") {
  Network net;
  NodeId n1 = net.add_node();
  NodeId n2 = net.add_node();
  ElementId vs = net.add_voltage_source(n1, Network::ground);
  net.add_resistor(n1, n2, 1.0);
  net.add_capacitor(n2, Network::ground, 1.0);
  MnaSystem mna(net, 1e-3);
  mna.set_drive(vs, 1.0);
  mna.step();
  auto g1 = mna.system_matrix();
  mna.step();
  auto g2 = mna.system_matrix();
  CHECK(g1 == g2);
}

TEST_CASE("RC step response matches the analytic solution") {
  // R = 1 ohm, C = 1 F, 1 V step: v_C(t) = 1 - exp(-t)
  Network net;
  NodeId n1 = net.add_node();
  NodeId n2 = net.add_node();
  ElementId vs = net.add_voltage_source(n1, Network::ground);
  net.add_resistor(n1, n2, 1.0);
  net.add_capacitor(n2, Network::ground, 1.0);
  MnaSystem mna(net, 1e-3);
  mna.set_drive(vs, 1.0);
  const int steps = 1000;  // 1 s
  for (int k = 0; k < steps; ++k) mna.step();
  CHECK(mna.node_voltage(n2) == doctest::Approx(0.63212).epsilon(1e-4 / 0.63212));
}

TEST_CASE("RL step response matches the analytic solution") {
  // R = 1 ohm, L = 1 H, 1 V step: i(t) = 1 - exp(-t)
  Network net;
  NodeId n1 = net.add_node();
  NodeId n2 = net.add_node();
  ElementId vs = net.add_voltage_source(n1, Network::ground);
  net.add_resistor(n1, n2, 1.0);
  ElementId ind = net.add_inductor(n2, Network::ground, 1.0);
  MnaSystem mna(net, 1e-3);
  mna.set_drive(vs, 1.0);
  for (int k = 0; k < 1000; ++k) mna.step();
  CHECK(mna.element_current(ind) == doctest::Approx(0.63212).epsilon(2e-4));
}

TEST_CASE("KCL holds at every non-ground node each step") {
  Network net;
  NodeId a = net.add_node();
  NodeId b = net.add_node();
  NodeId c = net.add_node();
  ElementId vs = net.add_voltage_source(a, Network::ground);
  std::vector<ElementId> elems;
  elems.push_back(net.add_resistor(a, b, 2.0));
  elems.push_back(net.add_inductor(b, c, 0.1));
  elems.push_back(net.add_capacitor(c, Network::ground, 1e-3));
  elems.push_back(net.add_resistor(c, Network::ground, 50.0));
  ElementId isrc = net.add_current_source(c, Network::ground);
  MnaSystem mna(net, 1e-4);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int k = 0; k < 200; ++k) {
    mna.set_drive(vs, u(rng));
    mna.set_drive(isrc, 0.1 * u(rng));
    mna.step();
    // node b: current in from R(a->b) equals current into L(b->c)
    const double i_r = mna.element_current(elems[0]);
    const double i_l = mna.element_current(elems[1]);
    CHECK(std::abs(i_r - i_l) < 1e-9 * std::max(1.0, std::abs(i_r)));
    // node c: L in = C + R + (-source p->n current)
    const double i_c = mna.element_current(elems[2]);
    const double i_rc = mna.element_current(elems[3]);
    const double i_s = mna.element_current(isrc);
    CHECK(std::abs(i_l - i_c - i_rc - i_s) <
          1e-9 * std::max(1.0, std::abs(i_l)));
  }
}

TEST_CASE("doubling all drives doubles all node voltages") {
  Network net;
  NodeId a = net.add_node();
  NodeId b = net.add_node();
  ElementId vs = net.add_voltage_source(a, Network::ground);
  net.add_resistor(a, b, 3.0);
  net.add_capacitor(b, Network::ground, 1e-4);
  ElementId is = net.add_current_source(b, Network::ground);

  auto run_once = [&](double scale) {
    MnaSystem mna(net, 1e-4);
    std::vector<double> vb;
    for (int k = 0; k < 50; ++k) {
      mna.set_drive(vs, scale * std::sin(0.1 * k));
      mna.set_drive(is, scale * 0.2 * std::cos(0.05 * k));
      mna.step();
      vb.push_back(mna.node_voltage(b));
    }
    return vb;
  };
  auto v1 = run_once(1.0);
  auto v2 = run_once(2.0);
  for (std::size_t k = 0; k < v1.size(); ++k)
    CHECK(v2[k] == doctest::Approx(2.0 * v1[k]).epsilon(1e-12));
}

TEST_CASE("source-free RC network never gains energy") {
  Network net;
  NodeId a = net.add_node();
  ElementId cap = net.add_capacitor(a, Network::ground, 1e-3);
  net.add_resistor(a, Network::ground, 10.0);
  MnaSystem mna(net, 1e-4);
  mna.set_initial_voltage(cap, 5.0);

  double prev = 0.5 * 1e-3 * 5.0 * 5.0;
  for (int k = 0; k < 2000; ++k) {
    mna.step();
    const double v = mna.node_voltage(a);
    const double e = 0.5 * 1e-3 * v * v;
    CHECK(e <= prev * (1.0 + 1e-12));
    prev = e;
  }
  CHECK(prev < 0.5 * 1e-3 * 25.0 * 0.2);
}

TEST_CASE("random first-order RC networks track the analytic pole") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> ur(1.0, 100.0);
  std::uniform_real_distribution<double> uc(1e-6, 1e-3);
  for (int trial = 0; trial < 25; ++trial) {
    const double r1 = ur(rng), r2 = ur(rng), c = uc(rng);
    // v_src -> R1 -> node(C, R2): tau = (R1 || R2) C, final = R2/(R1+R2)
    Network net;
    NodeId a = net.add_node();
    NodeId b = net.add_node();
    ElementId vs = net.add_voltage_source(a, Network::ground);
    net.add_resistor(a, b, r1);
    net.add_resistor(b, Network::ground, r2);
    net.add_capacitor(b, Network::ground, c);

    const double tau = (r1 * r2 / (r1 + r2)) * c;
    const double vf = r2 / (r1 + r2);
    const double dt = tau / 100.0;
    MnaSystem mna(net, dt);
    mna.set_drive(vs, 1.0);
    double t = 0.0;
    for (int k = 0; k < 300; ++k) {
      mna.step();
      t += dt;
      const double expected = vf * (1.0 - std::exp(-t / tau));
      CHECK(std::abs(mna.node_voltage(b) - expected) <= 1e-3 * vf);
    }
  }
}

TEST_CASE("current sink reads branch current without disturbing the network") {
  Network net;
  NodeId a = net.add_node();
  NodeId b = net.add_node();
  ElementId vs = net.add_voltage_source(a, Network::ground);
  ElementId am = net.add_current_sink(a, b);
  net.add_resistor(b, Network::ground, 2.0);
  MnaSystem mna(net, 1e-3);
  mna.set_drive(vs, 10.0);
  mna.step();
  CHECK(mna.sink_value(am) == doctest::Approx(5.0));
  CHECK(mna.node_voltage(b) == doctest::Approx(10.0));
}

TEST_CASE("netlist dump format") {
  Network net;
  NodeId a = net.add_node();
  net.add_resistor(a, Network::ground, 1000.0, "load");
  std::ostringstream os;
  net.dump(os);
  CHECK(os.str() == "resistor 1 0 1000\n");
}

TEST_CASE("non-finite drive is rejected") {
  Network net;
  NodeId a = net.add_node();
  ElementId vs = net.add_voltage_source(a, Network::ground);
  net.add_resistor(a, Network::ground, 1.0);
  MnaSystem mna(net, 1e-3);
  CHECK_THROWS_AS(mna.set_drive(vs, std::nan("")), NonFiniteSolution);
}
