#include "cbox/dirichlet.hpp"

#include <algorithm>
#include <set>

#include "cbox/errors.hpp"

namespace cbox {

namespace {

NodePair ordered(const NodeId& i, const NodeId& j) { return i < j ? NodePair{i, j} : NodePair{j, i}; }

std::vector<NodeId> sorted_unique(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

DirichletForm::DirichletForm(std::vector<NodeId> support) : support_(sorted_unique(std::move(support))) {}

DirichletForm::DirichletForm(std::vector<NodeId> support, const std::map<NodePair, RatFunc>& coeffs)
    : DirichletForm(std::move(support)) {
  for (const auto& [pair, c] : coeffs) {
    if (pair.first == pair.second) throw InvalidCircuit("Dirichlet form has no diagonal terms");
    add(pair.first, pair.second, c);
  }
}

bool DirichletForm::in_support(const NodeId& n) const {
  return std::binary_search(support_.begin(), support_.end(), n);
}

RatFunc DirichletForm::coeff(const NodeId& i, const NodeId& j) const {
  if (i == j) return RatFunc();
  auto it = coeffs_.find(ordered(i, j));
  return it == coeffs_.end() ? RatFunc() : it->second;
}

RatFunc DirichletForm::degree(const NodeId& n) const {
  RatFunc total;
  for (const auto& [pair, c] : coeffs_) {
    if (pair.first == n || pair.second == n) total += c;
  }
  return total;
}

void DirichletForm::add(const NodeId& i, const NodeId& j, const RatFunc& c) {
  if (!in_support(i)) throw NodeNotInSupport("node '" + i + "' is not in the support");
  if (!in_support(j)) throw NodeNotInSupport("node '" + j + "' is not in the support");
  if (i == j || c.is_zero()) return;
  auto key = ordered(i, j);
  auto it = coeffs_.find(key);
  if (it == coeffs_.end()) {
    coeffs_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

DirichletForm extended_power_functional(const Circuit& g) {
  DirichletForm p(g.nodes());
  for (const auto& e : g.edges()) {
    if (e.src == e.tgt) continue;
    p.add(e.src, e.tgt, (RatFunc(2) * e.impedance).inv());
  }
  return p;
}

namespace {

const RatFunc& value_at(const Potential& psi, const NodeId& n) {
  auto it = psi.find(n);
  if (it == psi.end()) throw MissingAssignment("no potential given for node '" + n + "'");
  return it->second;
}

}  // namespace

RatFunc evaluate(const DirichletForm& q, const Potential& psi) {
  for (const auto& n : q.support()) value_at(psi, n);
  RatFunc total;
  for (const auto& [pair, c] : q.coeffs()) {
    const RatFunc d = value_at(psi, pair.first) - value_at(psi, pair.second);
    if (!d.is_zero()) total += c * d * d;
  }
  return total;
}

Covector gradient(const DirichletForm& q, const Potential& psi) {
  Covector out;
  for (const auto& n : q.support()) out[n] = RatFunc();
  for (const auto& n : q.support()) value_at(psi, n);
  for (const auto& [pair, c] : q.coeffs()) {
    const RatFunc d = value_at(psi, pair.first) - value_at(psi, pair.second);
    if (d.is_zero()) continue;
    const RatFunc flow = RatFunc(2) * c * d;
    out[pair.first] += flow;
    out[pair.second] -= flow;
  }
  return out;
}

namespace {

EliminationStep eliminate_into(DirichletForm& q, const NodeId& n) {
  if (!q.in_support(n)) throw NodeNotInSupport("cannot eliminate '" + n + "': not in the support");
  EliminationStep step{n, {}, RatFunc()};
  std::map<NodePair, RatFunc> rest;
  for (const auto& [pair, c] : q.coeffs()) {
    if (pair.first == n) {
      step.weights.emplace_back(pair.second, c);
    } else if (pair.second == n) {
      step.weights.emplace_back(pair.first, c);
    } else {
      rest.emplace(pair, c);
    }
  }
  for (const auto& [k, c] : step.weights) step.total += c;

  std::vector<NodeId> support;
  for (const auto& m : q.support()) {
    if (m != n) support.push_back(m);
  }
  DirichletForm out(std::move(support), rest);
  if (step.total.is_zero()) {
    step.weights.clear();
  } else {
    const RatFunc inv_total = step.total.inv();
    for (std::size_t a = 0; a < step.weights.size(); ++a) {
      for (std::size_t b = a + 1; b < step.weights.size(); ++b) {
        out.add(step.weights[a].first, step.weights[b].first,
                step.weights[a].second * step.weights[b].second * inv_total);
      }
    }
  }
  q = std::move(out);
  return step;
}

}  // namespace

DirichletForm eliminate_node(const DirichletForm& q, const NodeId& n) {
  DirichletForm out = q;
  eliminate_into(out, n);
  return out;
}

Minimization minimize_in_order(const DirichletForm& p, const std::vector<NodeId>& order) {
  Minimization m{p, {}};
  m.steps.reserve(order.size());
  for (const auto& n : order) m.steps.push_back(eliminate_into(m.form, n));
  return m;
}

Minimization minimize(const DirichletForm& p, const std::vector<NodeId>& boundary) {
  for (const auto& b : boundary) {
    if (!p.in_support(b)) throw BoundaryNotSubset("boundary node '" + b + "' is not in the support");
  }
  const std::set<NodeId> keep(boundary.begin(), boundary.end());
  std::vector<NodeId> order;
  for (const auto& n : p.support()) {
    if (!keep.contains(n)) order.push_back(n);
  }
  return minimize_in_order(p, order);
}

DirichletForm power_functional(const DirichletForm& p, const std::vector<NodeId>& boundary) {
  return minimize(p, boundary).form;
}

Potential realizable_extension(const Minimization& m, const Potential& boundary_values) {
  Potential phi;
  for (const auto& n : m.form.support()) phi[n] = value_at(boundary_values, n);
  for (auto it = m.steps.rbegin(); it != m.steps.rend(); ++it) {
    RatFunc acc;
    for (const auto& [k, w] : it->weights) acc += w * value_at(phi, k);
    phi[it->node] = it->weights.empty() ? RatFunc() : acc / it->total;
  }
  return phi;
}

DirichletForm compose_forms(const DirichletForm& q, const DirichletForm& p,
                            const std::vector<NodeId>& shared) {
  const std::set<NodeId> middle(shared.begin(), shared.end());
  for (const auto& t : middle) {
    if (!q.in_support(t) || !p.in_support(t)) {
      throw NodeNotInSupport("shared node '" + t + "' must lie in both supports");
    }
  }
  std::vector<NodeId> outer;
  std::set<NodeId> left;
  for (const auto& n : q.support()) {
    if (!middle.contains(n)) {
      left.insert(n);
      outer.push_back(n);
    }
  }
  for (const auto& n : p.support()) {
    if (middle.contains(n)) continue;
    if (left.contains(n)) throw LabelCollision("node '" + n + "' appears on both outer sides");
    outer.push_back(n);
  }
  std::vector<NodeId> all = outer;
  all.insert(all.end(), middle.begin(), middle.end());
  DirichletForm sum(all);
  for (const auto* f : {&q, &p}) {
    for (const auto& [pair, c] : f->coeffs()) sum.add(pair.first, pair.second, c);
  }
  return power_functional(sum, outer);
}

DirichletForm pushforward_form(const std::map<NodeId, NodeId>& f, const DirichletForm& q,
                               const std::vector<NodeId>& codomain) {
  DirichletForm out(codomain);
  auto image = [&](const NodeId& n) -> const NodeId& {
    auto it = f.find(n);
    if (it == f.end()) throw UnknownNode("pushforward map undefined on '" + n + "'");
    return it->second;
  };
  for (const auto& n : q.support()) {
    if (!out.in_support(image(n))) throw UnknownNode("image '" + image(n) + "' outside the codomain");
  }
  for (const auto& [pair, c] : q.coeffs()) out.add(image(pair.first), image(pair.second), c);
  return out;
}

Rat RationalQuadraticForm::operator()(const std::vector<Rat>& psi) const {
  Rat total = 0;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) total += matrix[i][j] * psi[i] * psi[j];
  }
  return total;
}

RationalQuadraticForm to_rational_quadratic(const DirichletForm& q) {
  RationalQuadraticForm out{q.support(), {}};
  const std::size_t n = q.support().size();
  out.matrix.assign(n, std::vector<Rat>(n, Rat(0)));
  auto idx = [&](const NodeId& v) {
    return static_cast<std::size_t>(std::lower_bound(q.support().begin(), q.support().end(), v) -
                                    q.support().begin());
  };
  for (const auto& [pair, c] : q.coeffs()) {
    if (!c.is_constant()) {
      throw NonConstantCoefficients("coefficient " + c.to_string() + " is not a rational constant");
    }
    const Rat v = c.constant_value();
    const auto i = idx(pair.first), j = idx(pair.second);
    out.matrix[i][i] += v;
    out.matrix[j][j] += v;
    out.matrix[i][j] -= v;
    out.matrix[j][i] -= v;
  }
  return out;
}

bool markov_check_real(const RationalQuadraticForm& q, int trials, std::mt19937_64& rng) {
  const std::size_t n = q.vars.size();
  std::uniform_int_distribution<long> numer(-30, 30);
  std::uniform_int_distribution<long> denom(1, 7);
  auto random_rat = [&] { return Rat(numer(rng), denom(rng)); };
  for (int t = 0; t < trials; ++t) {
    std::vector<Rat> constant(n, random_rat());
    for (auto& c : constant) c.canonicalize();
    if (q(constant) != 0) return false;
    std::vector<Rat> psi(n), clipped(n);
    for (std::size_t k = 0; k < n; ++k) {
      psi[k] = random_rat();
      psi[k].canonicalize();
      clipped[k] = psi[k] < 1 ? psi[k] : Rat(1);
    }
    if (q(clipped) > q(psi)) return false;
  }
  return true;
}

bool markov_check_real(const DirichletForm& q, int trials, std::mt19937_64& rng) {
  return markov_check_real(to_rational_quadratic(q), trials, rng);
}

std::string pretty(const DirichletForm& q, const std::string& name) {
  std::string out = name + " =";
  if (q.coeffs().empty()) return out + " 0";
  bool first = true;
  for (const auto& [pair, c] : q.coeffs()) {
    out += first ? " " : " + ";
    first = false;
    out += "(" + (c.is_constant() ? to_string(c.constant_value()) : c.to_string()) + ")(psi_" + pair.first + " - psi_" + pair.second + ")^2";
  }
  return out;
}

}  // namespace cbox
