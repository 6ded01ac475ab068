#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cbox/blackbox.hpp"
#include "cbox/circuit.hpp"
#include "cbox/dirichlet.hpp"
#include "cbox/errors.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace cbox;
using namespace cbox::testing;

namespace {

Circuit resistor(const NodeId& a, const NodeId& b, long r) {
  return Circuit(LabelledGraph{{a, b}, {{a, b, impedance(ComponentKind::Resistor, r)}}}, {a}, {b});
}

std::size_t edge_count(const Circuit& g) { return g.edges().size(); }

}  // namespace

TEST_CASE("validation") {
  CHECK_THROWS_AS(Circuit(LabelledGraph{{"a", "a"}, {}}, {}, {}), InvalidCircuit);
  CHECK_THROWS_AS(Circuit(LabelledGraph{{"a b"}, {}}, {}, {}), InvalidCircuit);
  CHECK_THROWS_AS(Circuit(LabelledGraph{{""}, {}}, {}, {}), InvalidCircuit);
  CHECK_THROWS_AS(Circuit(LabelledGraph{{"a"}, {{"a", "b", RatFunc(1)}}}, {}, {}), UnknownNode);
  CHECK_THROWS_AS(Circuit(LabelledGraph{{"a"}, {}}, {"z"}, {}), UnknownNode);
  CHECK_THROWS_AS(Circuit(LabelledGraph{{"a", "b"}, {{"a", "b", RatFunc()}}}, {}, {}), NonPositiveImpedance);
  // repeated and missing ports are fine
  const Circuit g(LabelledGraph{{"b", "a", "c"}, {}}, {"a", "a"}, {});
  CHECK(g.nodes() == std::vector<NodeId>{"a", "b", "c"});
  CHECK(g.terminals() == std::vector<NodeId>{"a"});
}

TEST_CASE("series composition of two resistors") {
  const Circuit g = compose_circuits(resistor("A", "B", 1), resistor("B", "C", 1));
  CHECK(g.nodes() == std::vector<NodeId>{"A", "B", "C"});
  CHECK(g.inputs() == std::vector<NodeId>{"A"});
  CHECK(g.outputs() == std::vector<NodeId>{"C"});
  const Circuit expected(LabelledGraph{{"A", "B", "C"}, {{"A", "B", RatFunc(1)}, {"B", "C", RatFunc(1)}}}, {"A"}, {"C"});
  CHECK(g == expected);
}

TEST_CASE("clashing labels on the right are primed, merged classes take the least label") {
  const Circuit g = compose_circuits(resistor("a", "b", 1), resistor("a", "b", 2));
  // right a becomes a' and is glued to left b; the class {a', b} is named a'
  CHECK(g.nodes() == std::vector<NodeId>{"a", "a'", "b'"});
  CHECK(g.outputs() == std::vector<NodeId>{"b'"});
  CHECK(edge_count(g) == 2);
}

TEST_CASE("composing two forks merges the duplicated terminal") {
  // fork: inputs {p, p}, one output p; glue twice
  const Circuit fork(LabelledGraph{{"p", "q"}, {{"p", "q", RatFunc(1)}}}, {"p", "p"}, {"q", "q"});
  const Circuit g = compose_circuits(fork, fork);
  // q on the left is glued to p' on the right through both output ports
  CHECK(g.nodes().size() == 3);
  CHECK(g.inputs() == std::vector<NodeId>{"p", "p"});
  CHECK(g.outputs().size() == 2);
  CHECK(g.outputs()[0] == g.outputs()[1]);
  CHECK(glued_component_count(fork.nodes(), fork.outputs(), fork.nodes(), fork.inputs()) == 3);
}

TEST_CASE("compose rejects mismatched port counts") {
  const Circuit a(LabelledGraph{{"a"}, {}}, {}, {"a", "a"});
  CHECK_THROWS_AS(compose_circuits(a, resistor("x", "y", 1)), PortCountMismatch);
}

TEST_CASE("pushout node count matches a search-based component count") {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const Circuit g1 = random_circuit(rng, {}, "n");
    const Circuit g2 = random_successor(rng, g1, {}, (t % 2) ? "n" : "m");
    const Circuit g = compose_circuits(g1, g2);
    CHECK(g.nodes().size() == glued_component_count(g1.nodes(), g1.outputs(), g2.nodes(), g2.inputs()));
    CHECK(edge_count(g) == edge_count(g1) + edge_count(g2));
  }
}

TEST_CASE("tensor") {
  const Circuit g = tensor_circuits(resistor("a", "b", 1), resistor("a", "b", 3));
  CHECK(g.nodes() == std::vector<NodeId>{"a", "a'", "b", "b'"});
  CHECK(g.inputs() == std::vector<NodeId>{"a", "a'"});
  CHECK(g.outputs() == std::vector<NodeId>{"b", "b'"});
  CHECK(edge_count(g) == 2);
  const Circuit r = resistor("a", "b", 1);
  CHECK(tensor_circuits(r, empty_circuit()) == r);
  CHECK(tensor_circuits(empty_circuit(), r) == r);
}

TEST_CASE("dagger") {
  const Circuit r = resistor("A", "B", 4);
  const Circuit d = dagger_circuit(r);
  CHECK(d.inputs() == std::vector<NodeId>{"B"});
  CHECK(d.outputs() == std::vector<NodeId>{"A"});
  CHECK(d.edges() == r.edges());
  Rng rng(22);
  for (int t = 0; t < 50; ++t) {
    const Circuit g = random_circuit(rng);
    CHECK(dagger_circuit(dagger_circuit(g)) == g);
  }
}

TEST_CASE("identity circuits") {
  CHECK(identity_circuit({}) == empty_circuit());
  const Circuit id = identity_circuit({"a", "b"});
  CHECK(id.nodes() == std::vector<NodeId>{"a", "b"});
  CHECK(id.inputs() == id.outputs());
  CHECK(id.edges().empty());
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const Circuit g = random_circuit(rng);
    const Circuit left = compose_circuits(identity_circuit(labels("i", g.inputs().size())), g);
    CHECK(blackbox(left) == blackbox(g));
  }
}

TEST_CASE("merging parallel edges") {
  const LabelledGraph twin{{"m", "n"}, {{"m", "n", RatFunc(2)}, {"m", "n", RatFunc(2)}}};
  const auto merged = merge_parallel_edges(twin);
  REQUIRE(merged.edges.size() == 1);
  CHECK(merged.edges[0].impedance == RatFunc(1));

  const LabelledGraph loop{{"m"}, {{"m", "m", RatFunc(5)}}};
  CHECK(merge_parallel_edges(loop).edges.empty());

  const LabelledGraph opposite{{"m", "n"}, {{"m", "n", RatFunc(1)}, {"n", "m", RatFunc(1)}}};
  const auto o = merge_parallel_edges(opposite);
  REQUIRE(o.edges.size() == 1);
  CHECK(o.edges[0].impedance == RatFunc(1) / RatFunc(2));
  CHECK(extended_power_functional(Circuit(opposite, {}, {})) ==
        extended_power_functional(Circuit(o, {}, {})));
}

TEST_CASE("merging parallel edges never changes the extended power functional") {
  Rng rng(24);
  for (int t = 0; t < 100; ++t) {
    const Circuit g = random_circuit(rng, {1, 5, 8});
    const Circuit m(merge_parallel_edges(g.graph()), g.inputs(), g.outputs());
    CHECK(extended_power_functional(m) == extended_power_functional(g));
    CHECK(blackbox(m) == blackbox(g));
  }
}

TEST_CASE("glue and relabel") {
  const Circuit g(LabelledGraph{{"a", "b", "c"}, {{"a", "c", RatFunc(1)}}}, {"a"}, {"c"});
  const Circuit glued = glue_nodes(g, {{"c", "b"}});
  CHECK(glued.nodes() == std::vector<NodeId>{"a", "b"});
  CHECK(glued.outputs() == std::vector<NodeId>{"b"});
  CHECK(glued.edges()[0].tgt == "b");
  CHECK_THROWS_AS(glue_nodes(g, {{"a", "z"}}), UnknownNode);
  const Circuit r = relabel(g, {{"a", "x"}, {"b", "y"}, {"c", "z"}});
  CHECK(r.nodes() == std::vector<NodeId>{"x", "y", "z"});
  CHECK(blackbox(r) == blackbox(g));
}
