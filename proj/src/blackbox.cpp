#include "cbox/blackbox.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "cbox/corel.hpp"
#include "cbox/errors.hpp"

namespace cbox {

namespace {

std::atomic<std::size_t> checks{0};

std::size_t index_in(const std::vector<NodeId>& sorted, const NodeId& n) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), n);
  if (it == sorted.end() || *it != n) throw UnknownNode("node '" + n + "' is not in the apex");
  return static_cast<std::size_t>(it - sorted.begin());
}

// (S^t X + S Y) ∘ S[i,o]^† ∘ l, where l is a relation {0} -> V_apex.
Behavior assemble(const std::vector<NodeId>& apex, const std::vector<NodeId>& inputs,
                  const std::vector<NodeId>& outputs, const LagrangianRelation& l) {
  std::vector<std::size_t> f;
  f.reserve(inputs.size() + outputs.size());
  for (const auto& n : inputs) f.push_back(index_in(apex, n));
  for (const auto& n : outputs) f.push_back(index_in(apex, n));
  const auto vx = SymplecticSpace::generated_by(inputs);
  const auto vy = SymplecticSpace::generated_by(outputs);
  const auto split = symplectify(dagger_corelation(corel_from_function(f, apex.size())), l.target(), vx + vy);
  const auto boundary = compose_relations(l, split);
  const auto twisted = compose_relations(boundary, tensor_relations(twist(vx), identity_relation(vy)));
  return Behavior(relation_from_name(twisted.target(), twisted.space(), inputs.size()));
}

}  // namespace

Behavior::Behavior(LagrangianRelation relation) : relation_(std::move(relation)) {
  ++checks;
  if (!is_lagrangian(relation_)) throw NotLagrangian("behavior subspace is not Lagrangian");
}

std::size_t lagrangian_checks_performed() { return checks.load(); }

Behavior blackbox(const Circuit& g) {
  return assemble(g.nodes(), g.inputs(), g.outputs(), graph_of_differential(extended_power_functional(g)));
}

Behavior blackbox_fast(const Circuit& g) {
  const auto boundary = g.terminals();
  const auto q = power_functional(extended_power_functional(g), boundary);
  return assemble(boundary, g.inputs(), g.outputs(), graph_of_differential(q));
}

Behavior oracle_behavior(const Circuit& g) {
  const auto& nodes = g.nodes();
  const auto& edges = g.edges();
  const std::size_t n = nodes.size(), m = edges.size();
  const std::size_t nx = g.inputs().size(), ny = g.outputs().size();
  // unknowns: phi (n), edge currents (m), port currents (nx + ny)
  const std::size_t cols = n + m + nx + ny;
  Matrix eqs;
  for (std::size_t e = 0; e < m; ++e) {
    Row r(cols);
    r[n + e] = edges[e].impedance;
    r[index_in(nodes, edges[e].tgt)] -= RatFunc(1);
    r[index_in(nodes, edges[e].src)] += RatFunc(1);
    eqs.push_back(std::move(r));
  }
  std::vector<Row> kcl(n, Row(cols));
  for (std::size_t e = 0; e < m; ++e) {
    kcl[index_in(nodes, edges[e].tgt)][n + e] += RatFunc(1);
    kcl[index_in(nodes, edges[e].src)][n + e] -= RatFunc(1);
  }
  std::vector<std::size_t> port_node;
  for (const auto& p : g.inputs()) port_node.push_back(index_in(nodes, p));
  for (const auto& p : g.outputs()) port_node.push_back(index_in(nodes, p));
  for (std::size_t p = 0; p < port_node.size(); ++p) kcl[port_node[p]][n + m + p] -= RatFunc(1);
  for (auto& r : kcl) eqs.push_back(std::move(r));

  const std::size_t ports = nx + ny;
  Matrix image;
  for (const auto& v : nullspace(eqs, cols)) {
    Row w(2 * ports);
    for (std::size_t k = 0; k < nx; ++k) {
      w[k] = v[port_node[k]];
      w[nx + k] = -v[n + m + k];
    }
    for (std::size_t k = 0; k < ny; ++k) {
      w[2 * nx + k] = v[port_node[nx + k]];
      w[2 * nx + ny + k] = v[n + m + nx + k];
    }
    image.push_back(std::move(w));
  }
  return Behavior(LagrangianRelation(SymplecticSpace::generated_by(g.inputs()),
                                     SymplecticSpace::generated_by(g.outputs()),
                                     Subspace(2 * ports, std::move(image))));
}

Behavior compose_behaviors(const Behavior& a, const Behavior& b) {
  return Behavior(compose_relations(a.relation(), b.relation()));
}

Behavior tensor_behaviors(const Behavior& a, const Behavior& b) {
  return Behavior(tensor_relations(a.relation(), b.relation()));
}

Behavior dagger_behavior(const Behavior& a) { return Behavior(dagger_relation(a.relation())); }

Behavior reverse_behavior(const Behavior& a) { return Behavior(reverse_relation(a.relation())); }

Behavior identity_behavior(std::size_t n) { return Behavior(identity_relation(SymplecticSpace::numbered(n, "x"))); }

DirichletCospan to_dirichlet_cospan(const Circuit& g) {
  return {Cospan{g.nodes(), g.inputs(), g.outputs()}, extended_power_functional(g)};
}

LagrangianCospan to_lagr_cospan(const DirichletCospan& dc) {
  return {dc.cospan, graph_of_differential(dc.form)};
}

Behavior cospan_relation(const LagrangianCospan& lc) {
  return assemble(lc.cospan.apex, lc.cospan.inputs, lc.cospan.outputs, lc.decoration);
}

namespace {

std::vector<NodeId> map_all(const std::vector<NodeId>& v, const std::map<NodeId, NodeId>& f) {
  std::vector<NodeId> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(f.at(x));
  return out;
}

}  // namespace

DirichletCospan compose_dirichlet_cospans(const DirichletCospan& a, const DirichletCospan& b) {
  const auto p = pushout(a.cospan.apex, a.cospan.outputs, b.cospan.apex, b.cospan.inputs);
  DirichletForm sum = pushforward_form(p.left, a.form, p.nodes);
  const DirichletForm right = pushforward_form(p.right, b.form, p.nodes);
  for (const auto& [pair, c] : right.coeffs()) sum.add(pair.first, pair.second, c);
  return {Cospan{p.nodes, map_all(a.cospan.inputs, p.left), map_all(b.cospan.outputs, p.right)}, sum};
}

LagrangianCospan compose_lagr_cospans(const LagrangianCospan& a, const LagrangianCospan& b) {
  const auto p = pushout(a.cospan.apex, a.cospan.outputs, b.cospan.apex, b.cospan.inputs);
  std::vector<std::size_t> f;
  for (const auto& n : a.cospan.apex) f.push_back(index_in(p.nodes, p.left.at(n)));
  for (const auto& n : b.cospan.apex) f.push_back(index_in(p.nodes, p.right.at(n)));
  const auto both = tensor_relations(a.decoration, b.decoration);
  return {Cospan{p.nodes, map_all(a.cospan.inputs, p.left), map_all(b.cospan.outputs, p.right)},
          pushforward_lagrangian(f, both, SymplecticSpace::generated_by(p.nodes))};
}

LagrangianCospan dagger_lagr_cospan(const LagrangianCospan& a) {
  return {Cospan{a.cospan.apex, a.cospan.outputs, a.cospan.inputs}, a.decoration};
}

RatFunc as_impedance(const Behavior& b) {
  if (b.inputs() != 1 || b.outputs() != 1) throw NotAGraph("impedance needs exactly one input and one output");
  // The canonical basis of {(psi, i, psi + Z i, i)} is (1,0,1,0), (0,1,Z,1).
  const auto& s = b.relation().space();
  if (s.pivots() != std::vector<std::size_t>{0, 1}) throw NotAGraph("behavior is not a graph over the potentials");
  const auto& r0 = s.basis()[0];
  const auto& r1 = s.basis()[1];
  const RatFunc& z = r1[2];
  if (!r0[2].is_one() || !r0[3].is_zero() || !r1[3].is_one() || z.is_zero()) {
    throw NotAGraph("behavior is not Ohm's law for a single impedance");
  }
  return z;
}

}  // namespace cbox
