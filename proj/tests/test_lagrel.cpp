#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cbox/errors.hpp"
#include "cbox/lagrel.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace cbox;
using namespace cbox::testing;

namespace {

Row R(std::initializer_list<RatFunc> v) { return Row(v); }

RatFunc F(long n, long d = 1) { return RatFunc(n) / RatFunc(d); }

SymplecticSpace V(std::size_t n, const std::string& prefix = "p") { return SymplecticSpace::numbered(n, prefix); }

/// {(psi1, i, psi2, i) : psi2 - psi1 = r i}
LagrangianRelation ohm(const RatFunc& r) {
  return LagrangianRelation(V(1, "a"), V(1, "b"), Subspace(4, {R({1, 0, 1, 0}), R({0, 1, r, 1})}));
}

LagrangianRelation graph_relation(const DirichletForm& q) { return graph_of_differential(q); }

/// A random Lagrangian relation V_n -> V_m: S of a random corelation followed
/// by the graph of a random Dirichlet form on the target, as a relation.
LagrangianRelation random_relation(Rng& rng, std::size_t n, std::size_t m) {
  const auto s = symplectify(random_corelation(rng, n, m));
  // graph of dQ as a relation V_m -> V_m: {(phi, i, phi, i + dQ_phi)}
  const auto support = labels("t", m);
  const auto q = random_form(rng, support, static_cast<int>(m) + 1);
  Matrix rows;
  for (std::size_t k = 0; k < m; ++k) {
    Potential e;
    for (const auto& x : support) e[x] = F(0);
    e[support[k]] = F(1);
    const auto g = gradient(q, e);
    Row phi(4 * m), cur(4 * m);
    phi[k] = F(1);
    phi[2 * m + k] = F(1);
    for (std::size_t j = 0; j < m; ++j) phi[3 * m + j] = g.at(support[j]);
    cur[m + k] = F(1);
    cur[3 * m + k] = F(1);
    rows.push_back(phi);
    rows.push_back(cur);
  }
  const LagrangianRelation shear(V(m), V(m), Subspace(4 * m, rows));
  return compose_relations(s, shear);
}

}  // namespace

TEST_CASE("symplectic form on generated spaces") {
  const auto v = V(2);
  // (phi, i) = (e_0, 0), (0, e_0): omega = i'(phi) - i(phi') = 1
  CHECK(omega(v, R({1, 0, 0, 0}), R({0, 0, 1, 0})) == F(1));
  CHECK(omega(v, R({0, 0, 1, 0}), R({1, 0, 0, 0})) == F(-1));
  CHECK(omega(v.conjugate(), R({1, 0, 0, 0}), R({0, 0, 1, 0})) == F(-1));
  CHECK(omega(v, R({1, 0, 0, 0}), R({0, 0, 0, 1})).is_zero());
  CHECK(v.column_headers() == std::vector<std::string>{"phi(p0)", "phi(p1)", "i(p0)", "i(p1)"});
}

TEST_CASE("is_lagrangian on subspaces") {
  const auto v = V(2);
  CHECK(is_lagrangian(v, Subspace(4, {R({1, 0, 0, 0}), R({0, 1, 0, 0})})));
  CHECK_FALSE(is_lagrangian(v, Subspace::whole(4)));
  CHECK_FALSE(is_lagrangian(v, Subspace(4, {R({1, 0, 0, 0}), R({0, 0, 1, 0})})));
  CHECK_FALSE(is_lagrangian(v, Subspace(4, {R({1, 0, 0, 0})})));
  CHECK(is_lagrangian(SymplecticSpace(), Subspace(0)));
}

TEST_CASE("graphs of differentials are Lagrangian and meet the current axis trivially") {
  Rng rng(51);
  for (int t = 0; t < 50; ++t) {
    const auto support = labels("v", static_cast<std::size_t>(uniform(rng, 1, 5)));
    const auto l = graph_relation(random_form(rng, support, 6));
    CHECK(is_lagrangian(l));
    CHECK(l.space().dim() == support.size());
    const std::size_t n = support.size();
    Matrix both = l.space().basis();
    for (std::size_t k = 0; k < n; ++k) {
      Row cur(2 * n);
      cur[n + k] = F(1);
      both.push_back(cur);
    }
    CHECK(Subspace(2 * n, both).dim() == 2 * n);
  }
}

TEST_CASE("graph of the zero form is the potential axis; resistor graph gives Ohm currents") {
  const auto zero = graph_relation(DirichletForm({"A"}));
  CHECK(zero.space() == Subspace(2, {R({1, 0})}));
  DirichletForm q({"A", "B"});
  q.add("A", "B", F(1, 6));  // r = 3
  const auto g = graph_relation(q);
  CHECK(g.space() == Subspace(4, {R({1, 0, F(1, 3), F(-1, 3)}), R({0, 1, F(-1, 3), F(1, 3)})}));
}

TEST_CASE("identity, composition and series law for Ohm relations") {
  const auto l = ohm(F(1));
  CHECK(is_lagrangian(l));
  CHECK(compose_relations(l, identity_relation(V(1))) == l);
  CHECK(compose_relations(identity_relation(V(1)), l) == l);
  CHECK(compose_relations(l, l) == ohm(F(2)));
  CHECK(compose_relations(ohm(RatFunc::s()), ohm(F(3))) == ohm(RatFunc::s() + F(3)));
  CHECK_THROWS_AS(compose_relations(l, identity_relation(V(2))), InterfaceMismatch);
  CHECK_THROWS_AS(compose_relations(l, identity_relation(V(1).conjugate())), InterfaceMismatch);
}

TEST_CASE("random relations: composites are Lagrangian and match the generator-matching method") {
  Rng rng(52);
  for (int t = 0; t < 60; ++t) {
    const auto a = static_cast<std::size_t>(uniform(rng, 0, 3));
    const auto b = static_cast<std::size_t>(uniform(rng, 0, 3));
    const auto c = static_cast<std::size_t>(uniform(rng, 0, 3));
    const auto l = random_relation(rng, a, b);
    const auto m = random_relation(rng, b, c);
    CHECK(is_lagrangian(l));
    const auto lm = compose_relations(l, m);
    CHECK(is_lagrangian(lm));
    CHECK(lm == matching_compose(l, m));
    const auto k = random_relation(rng, c, a);
    CHECK(compose_relations(lm, k) == compose_relations(l, compose_relations(m, k)));
  }
}

TEST_CASE("tensor and dagger") {
  Rng rng(53);
  const auto unit = identity_relation(SymplecticSpace());
  for (int t = 0; t < 40; ++t) {
    const auto l = random_relation(rng, 1, 2);
    const auto m = random_relation(rng, 2, 1);
    const auto p = random_relation(rng, 2, 2);
    const auto q = random_relation(rng, 2, 1);
    CHECK(tensor_relations(l, unit) == l);
    CHECK(tensor_relations(unit, l) == l);
    CHECK(dagger_relation(dagger_relation(l)) == l);
    CHECK(reverse_relation(reverse_relation(l)) == l);
    CHECK(is_lagrangian(tensor_relations(l, p)));
    CHECK(is_lagrangian(dagger_relation(l)));
    CHECK(is_lagrangian(reverse_relation(l)));
    CHECK(compose_relations(tensor_relations(l, p), tensor_relations(m, q)) ==
          tensor_relations(compose_relations(l, m), compose_relations(p, q)));
    CHECK(dagger_relation(compose_relations(l, m)) == compose_relations(dagger_relation(m), dagger_relation(l)));
    CHECK(reverse_relation(compose_relations(l, m)) == compose_relations(reverse_relation(m), reverse_relation(l)));
  }
}

TEST_CASE("dagger of the Ohm relation exchanges the potentials") {
  // {(psi2, i, psi1, i)} with psi2 - psi1 = r i, read as a relation from the
  // second terminal: target - source = -r i
  CHECK(dagger_relation(ohm(F(5))) == ohm(F(-5)));
  CHECK(reverse_relation(ohm(F(5))) == ohm(F(5)));
}

TEST_CASE("names") {
  Rng rng(54);
  for (int t = 0; t < 30; ++t) {
    const auto l = random_relation(rng, 2, 1);
    const auto v = name_space(l);
    CHECK(is_lagrangian(v, name_of(l)));
    CHECK(relation_from_name(v, name_of(l), 2) == l);
  }
}

TEST_CASE("cups, caps and the snake identities") {
  for (std::size_t n = 0; n < 4; ++n) {
    const auto v = V(n);
    const auto cup = cup_relation(v);
    const auto cap = cap_relation(v);
    CHECK(is_lagrangian(cup));
    CHECK(is_lagrangian(cap));
    const auto id = identity_relation(v);
    const auto idbar = identity_relation(v.conjugate());
    CHECK(compose_relations(tensor_relations(id, cup), tensor_relations(cap, id)) == id);
    const auto cup_bar = cup_relation(v.conjugate());
    const auto cap_bar = cap_relation(v.conjugate());
    CHECK(compose_relations(tensor_relations(idbar, cup_bar), tensor_relations(cap_bar, idbar)) == idbar);
    CHECK(dagger_relation(cup) == cap_relation(v.conjugate()));
  }
}

TEST_CASE("twist") {
  const auto v = V(2);
  const auto tw = twist(v);
  CHECK(is_lagrangian(tw));
  CHECK(compose_relations(tw, twist(v.conjugate())) == identity_relation(v));
  // S of the corelation cap equals the LagrRel cap after twisting one leg
  const auto s_cap = symplectify(cap_corelation(1));
  const auto lagr_cap = compose_relations(tensor_relations(identity_relation(V(1)), twist(V(1))),
                                          cap_relation(V(1)));
  CHECK(s_cap == lagr_cap);
  CHECK(s_cap.space() == Subspace(4, {R({1, 1, 0, 0}), R({0, 0, 1, -1})}));
}

TEST_CASE("symplectification of corelations") {
  // the fork {x0, y0, y1}: potentials agree, input current splits
  const auto s = symplectify(Corelation(1, 2, {{0, 1, 2}}));
  CHECK(is_lagrangian(s));
  CHECK(s.space() == Subspace(6, {R({1, 0, 1, 1, 0, 0}), R({0, 1, 0, 0, 1, 0}), R({0, 1, 0, 0, 0, 1})}));
  // a block with only one side forces its current to zero
  const auto cut = symplectify(Corelation(1, 1, {{0}, {1}}));
  CHECK(cut.space() == Subspace(4, {R({1, 0, 0, 0}), R({0, 0, 1, 0})}));
  CHECK(symplectify(identity_corelation(3)) == identity_relation(V(3)));

  Rng rng(55);
  for (int t = 0; t < 60; ++t) {
    const auto x = static_cast<std::size_t>(uniform(rng, 0, 4));
    const auto y = static_cast<std::size_t>(uniform(rng, 0, 4));
    const auto z = static_cast<std::size_t>(uniform(rng, 0, 4));
    const auto a = random_corelation(rng, x, y);
    const auto b = random_corelation(rng, y, z);
    const auto c = random_corelation(rng, 2, 1);
    const auto sa = symplectify(a);
    CHECK(is_lagrangian(sa));
    CHECK(symplectify_potentials(a).dim() + symplectify_currents(a).dim() == x + y);
    CHECK(symplectify(compose_corelations(a, b)) == compose_relations(sa, symplectify(b)));
    CHECK(symplectify(tensor_corelations(a, c)) == tensor_relations(sa, symplectify(c)));
    CHECK(symplectify(dagger_corelation(a)) == dagger_relation(sa));
  }
}

TEST_CASE("pushforward of Lagrangian subspaces") {
  const std::vector<NodeId> s_nodes{"a", "b", "c"};
  DirichletForm q(s_nodes);
  q.add("a", "b", F(1));
  q.add("b", "c", F(1, 2));
  const auto gq = graph_relation(q);
  CHECK(pushforward_lagrangian({0, 1, 2}, gq, SymplecticSpace::generated_by(s_nodes)) == gq);

  // collapsing everything to one node kills every current
  const auto point = pushforward_lagrangian({0, 0, 0}, gq, V(1));
  CHECK(point.space() == Subspace(2, {R({1, 0})}));

  Rng rng(56);
  for (int t = 0; t < 50; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
    const auto m = static_cast<std::size_t>(uniform(rng, 1, 4));
    const auto src = labels("u", n);
    const auto dst = labels("w", m);
    std::vector<std::size_t> f;
    std::map<NodeId, NodeId> fmap;
    for (std::size_t k = 0; k < n; ++k) {
      f.push_back(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(m) - 1)));
      fmap[src[k]] = dst[f.back()];
    }
    const auto form = random_form(rng, src, 5);
    const auto pushed = pushforward_lagrangian(f, graph_relation(form), SymplecticSpace::generated_by(dst));
    CHECK(is_lagrangian(pushed));
    CHECK(pushed == graph_relation(pushforward_form(fmap, form, dst)));
  }
}

TEST_CASE("pretty printing") {
  const auto text = pretty(ohm(F(2)));
  CHECK(text.rfind("phi(a0)  i(a0)  phi(b0)  i(b0)\n", 0) == 0);
  CHECK(text.find("\n0        1      2        1\n") != std::string::npos);
}
