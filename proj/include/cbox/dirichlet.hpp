#pragma once

// Dirichlet forms Q(psi) = sum_{i<j} c_ij (psi_i - psi_j)^2 over Q(s), the
// power functional of a circuit, and minimization by node elimination.

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cbox/circuit.hpp"
#include "cbox/field.hpp"

namespace cbox {

using NodePair = std::pair<NodeId, NodeId>;  // always first < second
using Potential = std::map<NodeId, RatFunc>;
/// A covector on a node set: entry n is the value on the indicator of n.
using Covector = std::map<NodeId, RatFunc>;

/// One coefficient per unordered pair of distinct nodes; zero coefficients are
/// never stored.
class DirichletForm {
 public:
  DirichletForm() = default;
  explicit DirichletForm(std::vector<NodeId> support);
  /// Throws NodeNotInSupport for pairs outside the support and InvalidCircuit
  /// for diagonal pairs.
  DirichletForm(std::vector<NodeId> support, const std::map<NodePair, RatFunc>& coeffs);

  const std::vector<NodeId>& support() const noexcept { return support_; }
  const std::map<NodePair, RatFunc>& coeffs() const noexcept { return coeffs_; }
  bool in_support(const NodeId& n) const;
  RatFunc coeff(const NodeId& i, const NodeId& j) const;
  /// Sum of the coefficients of all pairs containing n.
  RatFunc degree(const NodeId& n) const;

  /// c_ij += c. Self-pairs are ignored, since (psi_i - psi_i)^2 = 0.
  void add(const NodeId& i, const NodeId& j, const RatFunc& c);

  friend bool operator==(const DirichletForm&, const DirichletForm&) = default;

 private:
  std::vector<NodeId> support_;
  std::map<NodePair, RatFunc> coeffs_;
};

/// P(phi) = 1/2 sum_e (1/Z(e)) (phi(t(e)) - phi(s(e)))^2 on all nodes.
DirichletForm extended_power_functional(const Circuit& g);

/// Throws MissingAssignment when psi misses a support node.
RatFunc evaluate(const DirichletForm& q, const Potential& psi);

/// Entry n is dQ/dpsi_n = sum_j 2 c_nj (psi_n - psi_j): the current out of n.
Covector gradient(const DirichletForm& q, const Potential& psi);

/// Minimizes over one node via c'_ij = c_ij + c_in c_jn / sum_k c_kn. A node
/// with no incident coefficients is simply dropped.
DirichletForm eliminate_node(const DirichletForm& q, const NodeId& n);

/// Records phi_n = sum_k w_k phi_k / total for one eliminated node; an empty
/// weight list means the node was isolated and gets potential 0.
struct EliminationStep {
  NodeId node;
  std::vector<std::pair<NodeId, RatFunc>> weights;
  RatFunc total;
};

struct Minimization {
  DirichletForm form;
  std::vector<EliminationStep> steps;
};

/// Eliminates every support node outside `boundary`, in lexicographic order.
Minimization minimize(const DirichletForm& p, const std::vector<NodeId>& boundary);
/// Eliminates exactly the listed nodes in the given order.
Minimization minimize_in_order(const DirichletForm& p, const std::vector<NodeId>& order);

/// The form on `boundary` obtained by minimizing over all other nodes.
/// Throws BoundaryNotSubset.
DirichletForm power_functional(const DirichletForm& p, const std::vector<NodeId>& boundary);

/// Extends boundary potentials to every eliminated node by back-substitution.
Potential realizable_extension(const Minimization& m, const Potential& boundary_values);

/// (P ∘ Q)(alpha, gamma) = min_T Q(alpha, beta) + P(beta, gamma) with T =
/// `shared`. Throws LabelCollision when the outer node sets overlap.
DirichletForm compose_forms(const DirichletForm& q, const DirichletForm& p,
                            const std::vector<NodeId>& shared);

/// f_*Q(phi) = Q(phi ∘ f). `f` must be total on the support; `codomain` lists
/// the target node set (nodes outside the image are allowed).
DirichletForm pushforward_form(const std::map<NodeId, NodeId>& f, const DirichletForm& q,
                               const std::vector<NodeId>& codomain);

/// A real quadratic form psi^T M psi with M symmetric; used to sample the
/// Markov characterization, which also applies to forms that are not Dirichlet.
struct RationalQuadraticForm {
  std::vector<NodeId> vars;
  std::vector<std::vector<Rat>> matrix;

  Rat operator()(const std::vector<Rat>& psi) const;
};

/// Throws NonConstantCoefficients unless every coefficient lies in Q.
RationalQuadraticForm to_rational_quadratic(const DirichletForm& q);

/// Samples Q(const) = 0 and Q(min(psi, 1)) <= Q(psi) on `trials` random
/// rational vectors. A passing result is evidence, not proof.
bool markov_check_real(const RationalQuadraticForm& q, int trials, std::mt19937_64& rng);
bool markov_check_real(const DirichletForm& q, int trials, std::mt19937_64& rng);

/// `Q = (1/4)(psi_A - psi_C)^2 + ...`, pairs in lexicographic order.
std::string pretty(const DirichletForm& q, const std::string& name = "Q");

}  // namespace cbox
