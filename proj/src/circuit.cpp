#include "cbox/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

#include "cbox/errors.hpp"
#include "cbox/union_find.hpp"

namespace cbox {

bool is_valid_label(const std::string& label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(),
                      [](unsigned char c) { return std::isspace(c) != 0 || c == '#'; });
}

Circuit::Circuit(LabelledGraph graph, std::vector<NodeId> inputs, std::vector<NodeId> outputs)
    : graph_(std::move(graph)), inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  auto& nodes = graph_.nodes;
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw InvalidCircuit("duplicate node label");
  }
  for (const auto& n : nodes) {
    if (!is_valid_label(n)) throw InvalidCircuit("invalid node label '" + n + "'");
  }
  for (const auto& e : graph_.edges) {
    if (!has_node(e.src)) throw UnknownNode("edge endpoint '" + e.src + "' is not a node");
    if (!has_node(e.tgt)) throw UnknownNode("edge endpoint '" + e.tgt + "' is not a node");
    if (e.impedance.is_zero()) throw NonPositiveImpedance("edge " + e.src + "-" + e.tgt + " has zero impedance");
  }
  for (const auto* ports : {&inputs_, &outputs_}) {
    for (const auto& p : *ports) {
      if (!has_node(p)) throw UnknownNode("port refers to unknown node '" + p + "'");
    }
  }
}

bool Circuit::has_node(const NodeId& n) const {
  return std::binary_search(graph_.nodes.begin(), graph_.nodes.end(), n);
}

std::vector<NodeId> Circuit::terminals() const {
  std::set<NodeId> t(inputs_.begin(), inputs_.end());
  t.insert(outputs_.begin(), outputs_.end());
  return {t.begin(), t.end()};
}

namespace {

std::vector<std::tuple<NodeId, NodeId, std::string>> edge_keys(const std::vector<Edge>& edges) {
  std::vector<std::tuple<NodeId, NodeId, std::string>> keys;
  keys.reserve(edges.size());
  for (const auto& e : edges) keys.emplace_back(e.src, e.tgt, e.impedance.to_string());
  std::sort(keys.begin(), keys.end());
  return keys;
}

const NodeId& lookup(const std::map<NodeId, NodeId>& f, const NodeId& n) {
  auto it = f.find(n);
  if (it == f.end()) throw UnknownNode("no image for node '" + n + "'");
  return it->second;
}

}  // namespace

bool operator==(const Circuit& a, const Circuit& b) {
  return a.nodes() == b.nodes() && a.inputs_ == b.inputs_ && a.outputs_ == b.outputs_ &&
         edge_keys(a.edges()) == edge_keys(b.edges());
}

std::map<NodeId, NodeId> disjoint_renaming(const std::vector<NodeId>& left_nodes,
                                           const std::vector<NodeId>& right_nodes) {
  const std::set<NodeId> left(left_nodes.begin(), left_nodes.end());
  std::set<NodeId> taken = left;
  taken.insert(right_nodes.begin(), right_nodes.end());
  std::map<NodeId, NodeId> rename;
  for (const auto& r : right_nodes) {
    if (!left.contains(r)) {
      rename[r] = r;
      continue;
    }
    NodeId cand = r + "'";
    while (taken.contains(cand)) cand += "'";
    taken.insert(cand);
    rename[r] = cand;
  }
  return rename;
}

Pushout pushout(const std::vector<NodeId>& left_nodes, const std::vector<NodeId>& left_feet,
                const std::vector<NodeId>& right_nodes, const std::vector<NodeId>& right_feet) {
  if (left_feet.size() != right_feet.size()) {
    throw PortCountMismatch("cannot glue " + std::to_string(left_feet.size()) + " outputs to " +
                            std::to_string(right_feet.size()) + " inputs");
  }
  const auto rename = disjoint_renaming(left_nodes, right_nodes);
  std::vector<NodeId> labels = left_nodes;
  for (const auto& r : right_nodes) labels.push_back(rename.at(r));
  std::map<NodeId, std::size_t> index;
  for (std::size_t k = 0; k < labels.size(); ++k) index[labels[k]] = k;

  UnionFind uf(labels.size());
  for (std::size_t k = 0; k < left_feet.size(); ++k) {
    auto l = index.find(left_feet[k]);
    auto r = rename.find(right_feet[k]);
    if (l == index.end() || r == rename.end()) throw UnknownNode("foot outside its apex");
    uf.unite(l->second, index.at(r->second));
  }
  std::map<std::size_t, NodeId> rep;  // root -> smallest label
  for (std::size_t k = 0; k < labels.size(); ++k) {
    auto [it, fresh] = rep.emplace(uf.find(k), labels[k]);
    if (!fresh && labels[k] < it->second) it->second = labels[k];
  }
  Pushout out;
  for (const auto& [root, name] : rep) out.nodes.push_back(name);
  std::sort(out.nodes.begin(), out.nodes.end());
  for (std::size_t k = 0; k < left_nodes.size(); ++k) out.left[left_nodes[k]] = rep.at(uf.find(k));
  for (const auto& r : right_nodes) out.right[r] = rep.at(uf.find(index.at(rename.at(r))));
  return out;
}

namespace {

std::vector<Edge> map_edges(const std::vector<Edge>& edges, const std::map<NodeId, NodeId>& f) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back({lookup(f, e.src), lookup(f, e.tgt), e.impedance});
  return out;
}

std::vector<NodeId> map_ports(const std::vector<NodeId>& ports, const std::map<NodeId, NodeId>& f) {
  std::vector<NodeId> out;
  out.reserve(ports.size());
  for (const auto& p : ports) out.push_back(lookup(f, p));
  return out;
}

}  // namespace

Circuit compose_circuits(const Circuit& g1, const Circuit& g2) {
  const Pushout p = pushout(g1.nodes(), g1.outputs(), g2.nodes(), g2.inputs());
  LabelledGraph graph{p.nodes, map_edges(g1.edges(), p.left)};
  for (auto& e : map_edges(g2.edges(), p.right)) graph.edges.push_back(std::move(e));
  return Circuit(std::move(graph), map_ports(g1.inputs(), p.left), map_ports(g2.outputs(), p.right));
}

Circuit tensor_circuits(const Circuit& g1, const Circuit& g2) {
  const auto rename = disjoint_renaming(g1.nodes(), g2.nodes());
  LabelledGraph graph{g1.nodes(), g1.edges()};
  for (const auto& n : g2.nodes()) graph.nodes.push_back(rename.at(n));
  for (auto& e : map_edges(g2.edges(), rename)) graph.edges.push_back(std::move(e));
  auto inputs = g1.inputs();
  for (auto& p : map_ports(g2.inputs(), rename)) inputs.push_back(std::move(p));
  auto outputs = g1.outputs();
  for (auto& p : map_ports(g2.outputs(), rename)) outputs.push_back(std::move(p));
  return Circuit(std::move(graph), std::move(inputs), std::move(outputs));
}

Circuit dagger_circuit(const Circuit& g) { return Circuit(g.graph(), g.outputs(), g.inputs()); }

Circuit identity_circuit(const std::vector<NodeId>& ports) {
  return Circuit(LabelledGraph{ports, {}}, ports, ports);
}

Circuit empty_circuit() { return Circuit(LabelledGraph{}, {}, {}); }

Circuit relabel(const Circuit& g, const std::map<NodeId, NodeId>& f) {
  std::set<NodeId> image;
  for (const auto& n : g.nodes()) image.insert(lookup(f, n));
  LabelledGraph graph{{image.begin(), image.end()}, map_edges(g.edges(), f)};
  return Circuit(std::move(graph), map_ports(g.inputs(), f), map_ports(g.outputs(), f));
}

Circuit glue_nodes(const Circuit& g, const std::vector<std::pair<NodeId, NodeId>>& wires) {
  const auto& nodes = g.nodes();
  auto idx = [&](const NodeId& n) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
    if (it == nodes.end() || *it != n) throw UnknownNode("wire endpoint '" + n + "' is not a node");
    return static_cast<std::size_t>(it - nodes.begin());
  };
  UnionFind uf(nodes.size());
  for (const auto& [a, b] : wires) uf.unite(idx(a), idx(b));
  // nodes are sorted, so the first member seen names its class
  std::map<std::size_t, NodeId> rep;
  for (std::size_t k = 0; k < nodes.size(); ++k) rep.emplace(uf.find(k), nodes[k]);
  std::map<NodeId, NodeId> f;
  for (std::size_t k = 0; k < nodes.size(); ++k) f[nodes[k]] = rep.at(uf.find(k));
  return relabel(g, f);
}

LabelledGraph merge_parallel_edges(const LabelledGraph& g) {
  std::map<std::pair<NodeId, NodeId>, RatFunc> admittance;
  for (const auto& e : g.edges) {
    if (e.src == e.tgt) continue;
    auto key = std::minmax(e.src, e.tgt);
    auto [it, fresh] = admittance.emplace(std::pair{key.first, key.second}, e.impedance.inv());
    if (!fresh) it->second += e.impedance.inv();
  }
  LabelledGraph out{g.nodes, {}};
  for (const auto& [pair, y] : admittance) out.edges.push_back({pair.first, pair.second, y.inv()});
  return out;
}

}  // namespace cbox
