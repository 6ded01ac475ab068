#pragma once

// Independent reference computations used to cross-check the library. None
// of these share code paths with the routines they check.

#include <map>
#include <vector>

#include "cbox/corel.hpp"
#include "cbox/dirichlet.hpp"
#include "cbox/lagrel.hpp"

namespace cbox::testing {

/// Number of connected components of N1 + N2 after joining left_feet[k] to
/// right_feet[k], found by depth-first search over an adjacency list.
inline std::size_t glued_component_count(const std::vector<NodeId>& n1, const std::vector<NodeId>& left_feet,
                                         const std::vector<NodeId>& n2, const std::vector<NodeId>& right_feet) {
  std::map<std::pair<int, NodeId>, std::vector<std::pair<int, NodeId>>> adj;
  for (const auto& a : n1) adj[{0, a}];
  for (const auto& b : n2) adj[{1, b}];
  for (std::size_t k = 0; k < left_feet.size(); ++k) {
    adj[{0, left_feet[k]}].push_back({1, right_feet[k]});
    adj[{1, right_feet[k]}].push_back({0, left_feet[k]});
  }
  std::map<std::pair<int, NodeId>, bool> seen;
  std::size_t components = 0;
  for (const auto& [v, _] : adj) {
    if (seen[v]) continue;
    ++components;
    std::vector<std::pair<int, NodeId>> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (const auto& w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

/// Corelation composite by Warshall transitive closure of the union of both
/// equivalence relations on X + Y + Z.
inline Corelation closure_compose(const Corelation& a, const Corelation& b) {
  const std::size_t x = a.left_size(), y = a.right_size(), z = b.right_size();
  const std::size_t n = x + y + z;
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  const auto ba = a.block_of();
  const auto bb = b.block_of();
  for (std::size_t i = 0; i < x + y; ++i) {
    for (std::size_t j = 0; j < x + y; ++j) {
      if (ba[i] == ba[j]) r[i][j] = 1;
    }
  }
  for (std::size_t i = 0; i < y + z; ++i) {
    for (std::size_t j = 0; j < y + z; ++j) {
      if (bb[i] == bb[j]) r[x + i][x + j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r[k][j]) r[i][j] = 1;
      }
    }
  }
  // outer element -> composite index
  auto outer = [&](std::size_t k) { return k < x ? k : k + y; };
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<char> used(x + z, 0);
  for (std::size_t i = 0; i < x + z; ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> block;
    for (std::size_t j = i; j < x + z; ++j) {
      if (!used[j] && r[outer(i)][outer(j)]) {
        used[j] = 1;
        block.push_back(j);
      }
    }
    blocks.push_back(std::move(block));
  }
  return Corelation(x, z, std::move(blocks));
}

/// Relational composite by the generator-matching method: solve
/// a G|V2 = b H|V2 for coefficient vectors (a, b) and map them to (V1, V3).
inline LagrangianRelation matching_compose(const LagrangianRelation& l, const LagrangianRelation& m) {
  const std::size_t d1 = l.source().dim(), d2 = l.target().dim(), d3 = m.target().dim();
  const auto& g = l.space().basis();
  const auto& h = m.space().basis();
  const std::size_t vars = g.size() + h.size();
  Matrix eqs(d2, Row(vars));
  for (std::size_t c = 0; c < d2; ++c) {
    for (std::size_t k = 0; k < g.size(); ++k) eqs[c][k] = g[k][d1 + c];
    for (std::size_t k = 0; k < h.size(); ++k) eqs[c][g.size() + k] = -h[k][c];
  }
  Matrix image;
  for (const auto& coeffs : nullspace(eqs, vars)) {
    Row v(d1 + d3);
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      for (std::size_t c = 0; c < d1; ++c) v[c] += coeffs[k] * g[k][c];
    }
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (coeffs[g.size() + k].is_zero()) continue;
      for (std::size_t c = 0; c < d3; ++c) v[d1 + c] += coeffs[g.size() + k] * h[k][d2 + c];
    }
    image.push_back(std::move(v));
  }
  return LagrangianRelation(l.source(), m.target(), Subspace(d1 + d3, std::move(image)));
}

/// dQ/dpsi_n by the central difference (Q(psi + e_n) - Q(psi - e_n)) / 2,
/// which is exact for quadratic forms.
inline RatFunc central_difference(const DirichletForm& q, Potential psi, const NodeId& n) {
  Potential plus = psi, minus = psi;
  plus[n] += RatFunc(1);
  minus[n] -= RatFunc(1);
  return (evaluate(q, plus) - evaluate(q, minus)) / RatFunc(2);
}

/// Net current sum_j c_nj (phi_n - phi_j) at node n of the full form.
inline RatFunc net_current(const DirichletForm& p, const Potential& phi, const NodeId& n) {
  RatFunc total;
  for (const auto& [pair, c] : p.coeffs()) {
    if (pair.first == n) total += c * (phi.at(n) - phi.at(pair.second));
    if (pair.second == n) total += c * (phi.at(n) - phi.at(pair.first));
  }
  return total;
}

}  // namespace cbox::testing
