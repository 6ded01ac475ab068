#pragma once

// Seeded generators for randomized law checks.

#include <random>
#include <string>
#include <vector>

#include "cbox/circuit.hpp"
#include "cbox/corel.hpp"
#include "cbox/dirichlet.hpp"
#include "cbox/field.hpp"

namespace cbox::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// p/q with 1 <= p <= 9, 1 <= q <= 5.
inline Rat positive_rat(Rng& rng) {
  Rat q(mpz_class(uniform(rng, 1, 9)), mpz_class(uniform(rng, 1, 5)));
  q.canonicalize();
  return q;
}

inline Rat any_rat(Rng& rng) {
  Rat q(mpz_class(uniform(rng, -9, 9)), mpz_class(uniform(rng, 1, 5)));
  q.canonicalize();
  return q;
}

/// Polynomial of degree <= max_degree with small integer coefficients.
inline Poly small_poly(Rng& rng, int max_degree) {
  std::vector<Rat> c;
  const int d = static_cast<int>(uniform(rng, 0, max_degree));
  for (int k = 0; k <= d; ++k) c.push_back(any_rat(rng));
  return Poly(std::move(c));
}

inline RatFunc small_ratfunc(Rng& rng, int max_degree = 2) {
  Poly den;
  while (den.is_zero()) den = small_poly(rng, max_degree);
  return RatFunc(small_poly(rng, max_degree), den);
}

inline RatFunc nonzero_ratfunc(Rng& rng, int max_degree = 2) {
  RatFunc f;
  while (f.is_zero()) f = small_ratfunc(rng, max_degree);
  return f;
}

inline RatFunc random_impedance(Rng& rng, bool resistors_only = false) {
  const auto kind = resistors_only ? ComponentKind::Resistor : static_cast<ComponentKind>(uniform(rng, 0, 2));
  return impedance(kind, positive_rat(rng));
}

struct CircuitShape {
  int min_nodes = 1;
  int max_nodes = 6;
  int max_edges = 6;
  int max_inputs = 3;
  int max_outputs = 3;
  bool resistors_only = false;
  bool self_loops = true;
};

inline std::vector<NodeId> pick_ports(Rng& rng, const std::vector<NodeId>& nodes, long count) {
  std::vector<NodeId> out;
  for (long k = 0; k < count; ++k) out.push_back(nodes[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(nodes.size()) - 1))]);
  return out;
}

/// Node labels are `prefix0`, `prefix1`, ...; ports may repeat nodes.
inline Circuit random_circuit(Rng& rng, const CircuitShape& shape = {}, const std::string& prefix = "n",
                              long inputs = -1, long outputs = -1) {
  const long n = uniform(rng, shape.min_nodes, shape.max_nodes);
  LabelledGraph g;
  for (long k = 0; k < n; ++k) g.nodes.push_back(prefix + std::to_string(k));
  const long m = uniform(rng, 0, shape.max_edges);
  for (long k = 0; k < m; ++k) {
    auto a = g.nodes[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
    auto b = g.nodes[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
    if (a == b && !shape.self_loops) continue;
    g.edges.push_back({a, b, random_impedance(rng, shape.resistors_only)});
  }
  if (inputs < 0) inputs = uniform(rng, 0, shape.max_inputs);
  if (outputs < 0) outputs = uniform(rng, 0, shape.max_outputs);
  auto in = pick_ports(rng, g.nodes, inputs);
  auto out = pick_ports(rng, g.nodes, outputs);
  return Circuit(std::move(g), std::move(in), std::move(out));
}

/// A circuit whose input count matches `before`'s output count.
inline Circuit random_successor(Rng& rng, const Circuit& before, const CircuitShape& shape = {},
                                const std::string& prefix = "m") {
  return random_circuit(rng, shape, prefix, static_cast<long>(before.outputs().size()));
}

inline Corelation random_corelation(Rng& rng, std::size_t left, std::size_t right) {
  const std::size_t n = left + right;
  if (n == 0) return Corelation(0, 0, {});
  const long k = uniform(rng, 1, static_cast<long>(n));
  std::vector<std::vector<std::size_t>> blocks(static_cast<std::size_t>(k));
  for (std::size_t e = 0; e < n; ++e) blocks[static_cast<std::size_t>(uniform(rng, 0, k - 1))].push_back(e);
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  return Corelation(left, right, std::move(blocks));
}

/// Random form on the given labels; coefficients are 1/(2Z) for random R/L/C
/// impedances unless `rational` is set, in which case they are positive rationals.
inline DirichletForm random_form(Rng& rng, const std::vector<NodeId>& support, int pairs, bool rational = false) {
  DirichletForm q(support);
  const long n = static_cast<long>(support.size());
  if (n < 2) return q;
  for (int k = 0; k < pairs; ++k) {
    const auto& a = support[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
    const auto& b = support[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
    if (a == b) continue;
    q.add(a, b, rational ? RatFunc(positive_rat(rng)) : (RatFunc(2) * random_impedance(rng)).inv());
  }
  return q;
}

inline std::vector<NodeId> labels(const std::string& prefix, std::size_t n) {
  std::vector<NodeId> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

}  // namespace cbox::testing
