#pragma once

// The black box functor from circuits to Lagrangian relations, computed from
// its definition, through boundary minimization, and by a direct Kirchhoff
// solve; plus the three factor functors it decomposes into.

#include <cstddef>
#include <vector>

#include "cbox/circuit.hpp"
#include "cbox/dirichlet.hpp"
#include "cbox/lagrel.hpp"

namespace cbox {

/// A Lagrangian relation from the space generated by the inputs to the one
/// generated by the outputs. Construction checks the Lagrangian property.
class Behavior {
 public:
  /// Throws NotLagrangian.
  explicit Behavior(LagrangianRelation relation);

  const LagrangianRelation& relation() const noexcept { return relation_; }
  std::size_t inputs() const noexcept { return relation_.source().size(); }
  std::size_t outputs() const noexcept { return relation_.target().size(); }

  friend bool operator==(const Behavior& a, const Behavior& b) { return a.relation_ == b.relation_; }

 private:
  LagrangianRelation relation_;
};

/// Number of Behavior objects validated so far in this process.
std::size_t lagrangian_checks_performed();

Behavior blackbox(const Circuit& g);
/// Minimizes over interior nodes first and uses the corestricted cospan.
Behavior blackbox_fast(const Circuit& g);
/// Solves Ohm's law and KCL for (potentials, edge currents, port currents).
Behavior oracle_behavior(const Circuit& g);

Behavior compose_behaviors(const Behavior& a, const Behavior& b);
Behavior tensor_behaviors(const Behavior& a, const Behavior& b);
Behavior dagger_behavior(const Behavior& a);
Behavior reverse_behavior(const Behavior& a);
Behavior identity_behavior(std::size_t n);

/// Apex with sorted labels and port maps given as apex labels.
struct Cospan {
  std::vector<NodeId> apex;
  std::vector<NodeId> inputs;
  std::vector<NodeId> outputs;
};

struct DirichletCospan {
  Cospan cospan;
  DirichletForm form;
};

/// The decoration is a relation {0} -> space generated by the apex.
struct LagrangianCospan {
  Cospan cospan;
  LagrangianRelation decoration;
};

DirichletCospan to_dirichlet_cospan(const Circuit& g);
LagrangianCospan to_lagr_cospan(const DirichletCospan& dc);
Behavior cospan_relation(const LagrangianCospan& lc);

/// Pushout of the cospans, decorations pushed forward and added.
DirichletCospan compose_dirichlet_cospans(const DirichletCospan& a, const DirichletCospan& b);
LagrangianCospan compose_lagr_cospans(const LagrangianCospan& a, const LagrangianCospan& b);
LagrangianCospan dagger_lagr_cospan(const LagrangianCospan& a);

/// For a 1-in/1-out behavior of the form psi_out - psi_in = Z i, returns Z.
/// Throws NotAGraph otherwise.
RatFunc as_impedance(const Behavior& b);

}  // namespace cbox
