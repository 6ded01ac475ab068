#pragma once

// Symplectic spaces generated by finite port sets, Lagrangian relations
// between them, and symplectification of corelations.
//
// The space generated by ports x_0..x_{n-1} has coordinates
//   [phi(x_0) .. phi(x_{n-1}), i(x_0) .. i(x_{n-1})]
// and form omega((phi,i),(phi',i')) = sum_k sign_k (i'_k phi_k - i_k phi'_k).
// A relation V -> W stores a subspace of conj(V) ⊕ W in the coordinate order
//   [phi_V, i_V, phi_W, i_W].

#include <cstddef>
#include <string>
#include <vector>

#include "cbox/corel.hpp"
#include "cbox/dirichlet.hpp"
#include "cbox/linalg.hpp"

namespace cbox {

/// A generator of a symplectic space. sign = -1 marks a conjugated summand.
struct Port {
  std::string label;
  int sign = 1;
};

class SymplecticSpace {
 public:
  SymplecticSpace() = default;
  explicit SymplecticSpace(std::vector<Port> ports);

  static SymplecticSpace generated_by(const std::vector<std::string>& labels);
  /// Ports named prefix0, prefix1, ...
  static SymplecticSpace numbered(std::size_t n, const std::string& prefix);

  const std::vector<Port>& ports() const noexcept { return ports_; }
  std::size_t size() const noexcept { return ports_.size(); }
  std::size_t dim() const noexcept { return 2 * ports_.size(); }

  SymplecticSpace conjugate() const;
  friend SymplecticSpace operator+(const SymplecticSpace& a, const SymplecticSpace& b);

  /// Same port count and signs; labels are cosmetic.
  bool compatible(const SymplecticSpace& other) const;
  std::vector<std::string> column_headers() const;

 private:
  std::vector<Port> ports_;
};

RatFunc omega(const SymplecticSpace& v, const Row& a, const Row& b);
bool is_isotropic(const SymplecticSpace& v, const Subspace& s);
/// Isotropic with dimension half the ambient dimension.
bool is_lagrangian(const SymplecticSpace& v, const Subspace& s);

class LagrangianRelation {
 public:
  LagrangianRelation() = default;
  /// Checks the ambient dimension only; use is_lagrangian for the rest.
  LagrangianRelation(SymplecticSpace source, SymplecticSpace target, Subspace space);

  const SymplecticSpace& source() const noexcept { return source_; }
  const SymplecticSpace& target() const noexcept { return target_; }
  const Subspace& space() const noexcept { return space_; }

  friend bool operator==(const LagrangianRelation& a, const LagrangianRelation& b) {
    return a.source_.compatible(b.source_) && a.target_.compatible(b.target_) && a.space_ == b.space_;
  }

 private:
  SymplecticSpace source_;
  SymplecticSpace target_;
  Subspace space_;
};

/// A relation V -> W as a subspace of the single space conj(V) + W.
Subspace name_of(const LagrangianRelation& l);
SymplecticSpace name_space(const LagrangianRelation& l);
/// Inverse of name_of: splits a subspace of `space` after `split` ports into
/// a relation conj(first part) -> second part.
LagrangianRelation relation_from_name(const SymplecticSpace& space, const Subspace& s, std::size_t split);

bool is_lagrangian(const LagrangianRelation& l);

LagrangianRelation identity_relation(const SymplecticSpace& v);
/// m ∘ l. Throws InterfaceMismatch unless l.target() is compatible with m.source().
LagrangianRelation compose_relations(const LagrangianRelation& l, const LagrangianRelation& m);
LagrangianRelation tensor_relations(const LagrangianRelation& l, const LagrangianRelation& m);
LagrangianRelation dagger_relation(const LagrangianRelation& l);
/// (u, v) -> (tau v, tau u) with tau(phi, i) = (phi, -i): the swap that also
/// reverses the direction in which currents are counted.
LagrangianRelation reverse_relation(const LagrangianRelation& l);

/// {0} -> conj(V) + V, the set {(v, v)}.
LagrangianRelation cup_relation(const SymplecticSpace& v);
/// V + conj(V) -> {0}, the set {(v, v)}.
LagrangianRelation cap_relation(const SymplecticSpace& v);

/// {(phi, dQ_phi)} as a relation {0} -> space generated by the support.
LagrangianRelation graph_of_differential(const DirichletForm& q);

/// Potentials constant on each block, currents zero; coordinates as in a
/// relation X -> Y.
Subspace symplectify_potentials(const Corelation& a);
/// Potentials zero; per block, the inputs' currents sum to the outputs'.
Subspace symplectify_currents(const Corelation& a);
/// The relation Phi(a) ⊕ I(a) from the space generated by X to that of Y.
LagrangianRelation symplectify(const Corelation& a);
LagrangianRelation symplectify(const Corelation& a, const SymplecticSpace& source,
                               const SymplecticSpace& target);

/// The symplectomorphism (phi, i) -> (phi, -i) as a relation V -> conj(V).
LagrangianRelation twist(const SymplecticSpace& v);

/// Image of a subspace of the space generated by S under S(f) for f: S -> M;
/// `l` is a relation {0} -> V_S, `codomain` generates V_M.
LagrangianRelation pushforward_lagrangian(const std::vector<std::size_t>& f, const LagrangianRelation& l,
                                          const SymplecticSpace& codomain);

/// Header line plus one row per basis vector.
std::string pretty(const LagrangianRelation& l);

}  // namespace cbox
