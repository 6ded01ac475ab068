#pragma once

// Circuits as cospans of finite sets decorated by impedance-labelled graphs.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cbox/field.hpp"

namespace cbox {

using NodeId = std::string;

struct Edge {
  NodeId src;
  NodeId tgt;
  RatFunc impedance;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite node set (kept sorted) with a list of impedance-labelled edges.
/// Parallel edges and self-loops are allowed.
struct LabelledGraph {
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
};

/// A circuit X -> Y: a labelled graph with ordered input and output port
/// lists. Ports may repeat nodes and need not cover every node.
class Circuit {
 public:
  Circuit() = default;
  /// Validates labels, edge endpoints, nonzero impedances and port targets.
  Circuit(LabelledGraph graph, std::vector<NodeId> inputs, std::vector<NodeId> outputs);

  const LabelledGraph& graph() const noexcept { return graph_; }
  const std::vector<NodeId>& nodes() const noexcept { return graph_.nodes; }
  const std::vector<Edge>& edges() const noexcept { return graph_.edges; }
  const std::vector<NodeId>& inputs() const noexcept { return inputs_; }
  const std::vector<NodeId>& outputs() const noexcept { return outputs_; }

  /// i(X) ∪ o(Y), sorted.
  std::vector<NodeId> terminals() const;
  bool has_node(const NodeId& n) const;

  /// Structural equality: same nodes, ports, and edge multiset.
  friend bool operator==(const Circuit& a, const Circuit& b);

 private:
  LabelledGraph graph_;
  std::vector<NodeId> inputs_;
  std::vector<NodeId> outputs_;
};

bool is_valid_label(const std::string& label);

/// Result of gluing two apices along matched feet. Classes are named by their
/// lexicographically smallest member; right-hand labels clashing with the left
/// are primed first.
struct Pushout {
  std::vector<NodeId> nodes;
  std::map<NodeId, NodeId> left;   // left apex label -> pushout node
  std::map<NodeId, NodeId> right;  // right apex label (original) -> pushout node
};

Pushout pushout(const std::vector<NodeId>& left_nodes, const std::vector<NodeId>& left_feet,
                const std::vector<NodeId>& right_nodes, const std::vector<NodeId>& right_feet);

/// Disjoint union; right-hand labels clashing with the left get "'" appended.
/// Returns the renaming applied to the right operand.
std::map<NodeId, NodeId> disjoint_renaming(const std::vector<NodeId>& left_nodes,
                                           const std::vector<NodeId>& right_nodes);

/// g2 ∘ g1 : X -> Z. Throws PortCountMismatch when |Y| differs.
Circuit compose_circuits(const Circuit& g1, const Circuit& g2);
Circuit tensor_circuits(const Circuit& g1, const Circuit& g2);
Circuit dagger_circuit(const Circuit& g);
Circuit identity_circuit(const std::vector<NodeId>& ports);
Circuit empty_circuit();

/// Identifies the given node pairs (ideal wires). Each merged class is named by
/// its smallest label.
Circuit glue_nodes(const Circuit& g, const std::vector<std::pair<NodeId, NodeId>>& wires);

/// Relabels nodes through `f`, which must be total on g's nodes. Non-injective
/// maps merge nodes.
Circuit relabel(const Circuit& g, const std::map<NodeId, NodeId>& f);

/// Replaces each bundle of parallel edges by one edge with reciprocal-sum
/// impedance, oriented from the smaller label; deletes self-loops.
LabelledGraph merge_parallel_edges(const LabelledGraph& g);

}  // namespace cbox
