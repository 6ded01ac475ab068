#include "cbox/lagrel.hpp"

#include <algorithm>

#include "cbox/errors.hpp"

namespace cbox {

SymplecticSpace::SymplecticSpace(std::vector<Port> ports) : ports_(std::move(ports)) {
  for (const auto& p : ports_) {
    if (p.sign != 1 && p.sign != -1) throw InterfaceMismatch("port sign must be +1 or -1");
  }
}

SymplecticSpace SymplecticSpace::generated_by(const std::vector<std::string>& labels) {
  std::vector<Port> ports;
  ports.reserve(labels.size());
  for (const auto& l : labels) ports.push_back({l, 1});
  return SymplecticSpace(std::move(ports));
}

SymplecticSpace SymplecticSpace::numbered(std::size_t n, const std::string& prefix) {
  std::vector<Port> ports;
  ports.reserve(n);
  for (std::size_t k = 0; k < n; ++k) ports.push_back({prefix + std::to_string(k), 1});
  return SymplecticSpace(std::move(ports));
}

SymplecticSpace SymplecticSpace::conjugate() const {
  SymplecticSpace out = *this;
  for (auto& p : out.ports_) p.sign = -p.sign;
  return out;
}

SymplecticSpace operator+(const SymplecticSpace& a, const SymplecticSpace& b) {
  SymplecticSpace out = a;
  out.ports_.insert(out.ports_.end(), b.ports_.begin(), b.ports_.end());
  return out;
}

bool SymplecticSpace::compatible(const SymplecticSpace& other) const {
  return std::equal(ports_.begin(), ports_.end(), other.ports_.begin(), other.ports_.end(),
                    [](const Port& a, const Port& b) { return a.sign == b.sign; });
}

std::vector<std::string> SymplecticSpace::column_headers() const {
  std::vector<std::string> out;
  for (const auto& p : ports_) out.push_back("phi(" + p.label + ")");
  for (const auto& p : ports_) out.push_back("i(" + p.label + ")");
  return out;
}

RatFunc omega(const SymplecticSpace& v, const Row& a, const Row& b) {
  const std::size_t n = v.size();
  if (a.size() != 2 * n || b.size() != 2 * n) throw SizeMismatch("vector outside the symplectic space");
  RatFunc total;
  for (std::size_t k = 0; k < n; ++k) {
    RatFunc term;
    if (!b[n + k].is_zero() && !a[k].is_zero()) term += b[n + k] * a[k];
    if (!a[n + k].is_zero() && !b[k].is_zero()) term -= a[n + k] * b[k];
    if (term.is_zero()) continue;
    total += v.ports()[k].sign > 0 ? term : -term;
  }
  return total;
}

bool is_isotropic(const SymplecticSpace& v, const Subspace& s) {
  if (s.ambient_dim() != v.dim()) return false;
  const auto& rows = s.basis();
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      if (!omega(v, rows[a], rows[b]).is_zero()) return false;
    }
  }
  return true;
}

bool is_lagrangian(const SymplecticSpace& v, const Subspace& s) {
  return s.ambient_dim() == v.dim() && 2 * s.dim() == v.dim() && is_isotropic(v, s);
}

LagrangianRelation::LagrangianRelation(SymplecticSpace source, SymplecticSpace target, Subspace space)
    : source_(std::move(source)), target_(std::move(target)), space_(std::move(space)) {
  if (space_.ambient_dim() != source_.dim() + target_.dim()) {
    throw SizeMismatch("relation subspace has the wrong ambient dimension");
  }
}

Subspace name_of(const LagrangianRelation& l) {
  const std::size_t ns = l.source().size(), nt = l.target().size();
  std::vector<std::size_t> perm(2 * (ns + nt));
  for (std::size_t j = 0; j < ns; ++j) {
    perm[j] = j;
    perm[ns + nt + j] = ns + j;
  }
  for (std::size_t j = 0; j < nt; ++j) {
    perm[ns + j] = 2 * ns + j;
    perm[2 * ns + nt + j] = 2 * ns + nt + j;
  }
  return l.space().permuted(perm);
}

SymplecticSpace name_space(const LagrangianRelation& l) { return l.source().conjugate() + l.target(); }

LagrangianRelation relation_from_name(const SymplecticSpace& space, const Subspace& s, std::size_t split) {
  if (split > space.size()) throw SizeMismatch("name split beyond the port count");
  const std::size_t ns = split, nt = space.size() - split;
  std::vector<std::size_t> perm(2 * (ns + nt));
  for (std::size_t j = 0; j < ns; ++j) {
    perm[j] = j;
    perm[ns + j] = ns + nt + j;
  }
  for (std::size_t j = 0; j < nt; ++j) {
    perm[2 * ns + j] = ns + j;
    perm[2 * ns + nt + j] = 2 * ns + nt + j;
  }
  const auto& ports = space.ports();
  SymplecticSpace source(std::vector<Port>(ports.begin(), ports.begin() + static_cast<long>(split)));
  SymplecticSpace target(std::vector<Port>(ports.begin() + static_cast<long>(split), ports.end()));
  return LagrangianRelation(source.conjugate(), target, s.permuted(perm));
}

bool is_lagrangian(const LagrangianRelation& l) { return is_lagrangian(name_space(l), name_of(l)); }

LagrangianRelation identity_relation(const SymplecticSpace& v) {
  const std::size_t d = v.dim();
  Matrix rows;
  for (std::size_t k = 0; k < d; ++k) {
    Row r(2 * d);
    r[k] = RatFunc(1);
    r[d + k] = RatFunc(1);
    rows.push_back(std::move(r));
  }
  return LagrangianRelation(v, v, Subspace(2 * d, std::move(rows)));
}

LagrangianRelation compose_relations(const LagrangianRelation& l, const LagrangianRelation& m) {
  if (!l.target().compatible(m.source())) {
    throw InterfaceMismatch("cannot compose: target has " + std::to_string(l.target().size()) +
                            " ports, next source has " + std::to_string(m.source().size()));
  }
  const std::size_t a = l.source().dim(), b = l.target().dim(), c = m.target().dim();
  const std::size_t cols = b + a + c;
  Matrix rows;
  rows.reserve(l.space().dim() + m.space().dim());
  // Layout [shared | source of l | target of m]; m's shared part is negated so
  // a vanishing shared block means the two middle states agree.
  for (const auto& g : l.space().basis()) {
    Row r(cols);
    for (std::size_t j = 0; j < b; ++j) r[j] = g[a + j];
    for (std::size_t j = 0; j < a; ++j) r[b + j] = g[j];
    rows.push_back(std::move(r));
  }
  for (const auto& h : m.space().basis()) {
    Row r(cols);
    for (std::size_t j = 0; j < b; ++j) r[j] = -h[j];
    for (std::size_t j = 0; j < c; ++j) r[b + a + j] = h[b + j];
    rows.push_back(std::move(r));
  }
  Matrix tails = eliminate_leading(std::move(rows), b, cols);
  return LagrangianRelation(l.source(), m.target(), Subspace(a + c, std::move(tails)));
}

LagrangianRelation tensor_relations(const LagrangianRelation& l, const LagrangianRelation& m) {
  const std::size_t u = l.source().size(), v = l.target().size();
  const std::size_t t = m.source().size(), w = m.target().size();
  const std::size_t src = u + t, tgt = v + w;
  const std::size_t cols = 2 * (src + tgt);
  Matrix rows;
  for (const auto& g : l.space().basis()) {
    Row r(cols);
    for (std::size_t j = 0; j < u; ++j) {
      r[j] = g[j];
      r[src + j] = g[u + j];
    }
    for (std::size_t j = 0; j < v; ++j) {
      r[2 * src + j] = g[2 * u + j];
      r[2 * src + tgt + j] = g[2 * u + v + j];
    }
    rows.push_back(std::move(r));
  }
  for (const auto& h : m.space().basis()) {
    Row r(cols);
    for (std::size_t j = 0; j < t; ++j) {
      r[u + j] = h[j];
      r[src + u + j] = h[t + j];
    }
    for (std::size_t j = 0; j < w; ++j) {
      r[2 * src + v + j] = h[2 * t + j];
      r[2 * src + tgt + v + j] = h[2 * t + w + j];
    }
    rows.push_back(std::move(r));
  }
  return LagrangianRelation(l.source() + m.source(), l.target() + m.target(), Subspace(cols, std::move(rows)));
}

LagrangianRelation dagger_relation(const LagrangianRelation& l) {
  const std::size_t a = l.source().dim(), b = l.target().dim();
  std::vector<std::size_t> perm(a + b);
  for (std::size_t k = 0; k < b; ++k) perm[k] = a + k;
  for (std::size_t k = 0; k < a; ++k) perm[b + k] = k;
  return LagrangianRelation(l.target(), l.source(), l.space().permuted(perm));
}

LagrangianRelation reverse_relation(const LagrangianRelation& l) {
  const LagrangianRelation d = dagger_relation(l);
  const std::size_t ns = d.source().size(), nt = d.target().size();
  Matrix rows = d.space().basis();
  for (auto& r : rows) {
    for (std::size_t k = 0; k < ns; ++k) r[ns + k] = -r[ns + k];
    for (std::size_t k = 0; k < nt; ++k) r[2 * ns + nt + k] = -r[2 * ns + nt + k];
  }
  return LagrangianRelation(d.source(), d.target(), Subspace(d.space().ambient_dim(), std::move(rows)));
}

namespace {

// {(v, v)} inside a space made of two copies of a size-n port list.
Subspace diagonal_pairs(std::size_t n) {
  const std::size_t cols = 4 * n;
  Matrix rows;
  for (std::size_t k = 0; k < n; ++k) {
    Row phi(cols), cur(cols);
    phi[k] = RatFunc(1);
    phi[n + k] = RatFunc(1);
    cur[2 * n + k] = RatFunc(1);
    cur[3 * n + k] = RatFunc(1);
    rows.push_back(std::move(phi));
    rows.push_back(std::move(cur));
  }
  return Subspace(cols, std::move(rows));
}

}  // namespace

LagrangianRelation cup_relation(const SymplecticSpace& v) {
  return LagrangianRelation(SymplecticSpace(), v.conjugate() + v, diagonal_pairs(v.size()));
}

LagrangianRelation cap_relation(const SymplecticSpace& v) {
  return LagrangianRelation(v + v.conjugate(), SymplecticSpace(), diagonal_pairs(v.size()));
}

LagrangianRelation graph_of_differential(const DirichletForm& q) {
  const auto& support = q.support();
  const std::size_t n = support.size();
  Potential zero;
  for (const auto& s : support) zero[s] = RatFunc();
  Matrix rows;
  rows.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Potential indicator = zero;
    indicator[support[k]] = RatFunc(1);
    const Covector current = gradient(q, indicator);
    Row r(2 * n);
    r[k] = RatFunc(1);
    for (std::size_t j = 0; j < n; ++j) r[n + j] = current.at(support[j]);
    rows.push_back(std::move(r));
  }
  return LagrangianRelation(SymplecticSpace(), SymplecticSpace::generated_by(support), Subspace(2 * n, std::move(rows)));
}

namespace {

// Column of the potential / current of element k of X + Y in relation layout.
struct RelationLayout {
  std::size_t nx, ny;
  std::size_t cols() const { return 2 * (nx + ny); }
  std::size_t phi(std::size_t k) const { return k < nx ? k : 2 * nx + (k - nx); }
  std::size_t cur(std::size_t k) const { return k < nx ? nx + k : 2 * nx + ny + (k - nx); }
};

}  // namespace

Subspace symplectify_potentials(const Corelation& a) {
  const RelationLayout lay{a.left_size(), a.right_size()};
  Matrix rows;
  for (const auto& block : a.blocks()) {
    Row r(lay.cols());
    for (auto k : block) r[lay.phi(k)] = RatFunc(1);
    rows.push_back(std::move(r));
  }
  return Subspace(lay.cols(), std::move(rows));
}

Subspace symplectify_currents(const Corelation& a) {
  const RelationLayout lay{a.left_size(), a.right_size()};
  const std::size_t n = lay.nx + lay.ny;
  Matrix constraints;
  for (const auto& block : a.blocks()) {
    Row r(n);
    for (auto k : block) r[k] = RatFunc(k < lay.nx ? 1 : -1);
    constraints.push_back(std::move(r));
  }
  Matrix rows;
  for (const auto& v : nullspace(constraints, n)) {
    Row r(lay.cols());
    for (std::size_t k = 0; k < n; ++k) r[lay.cur(k)] = v[k];
    rows.push_back(std::move(r));
  }
  return Subspace(lay.cols(), std::move(rows));
}

LagrangianRelation symplectify(const Corelation& a, const SymplecticSpace& source, const SymplecticSpace& target) {
  if (source.size() != a.left_size() || target.size() != a.right_size()) {
    throw SizeMismatch("port spaces do not match the corelation's sides");
  }
  Matrix rows = symplectify_potentials(a).basis();
  const Subspace currents = symplectify_currents(a);
  for (const auto& r : currents.basis()) rows.push_back(r);
  return LagrangianRelation(source, target, Subspace(source.dim() + target.dim(), std::move(rows)));
}

LagrangianRelation symplectify(const Corelation& a) {
  return symplectify(a, SymplecticSpace::numbered(a.left_size(), "x"),
                     SymplecticSpace::numbered(a.right_size(), "y"));
}

LagrangianRelation twist(const SymplecticSpace& v) {
  const std::size_t n = v.size(), d = v.dim();
  Matrix rows;
  for (std::size_t k = 0; k < n; ++k) {
    Row phi(2 * d), cur(2 * d);
    phi[k] = RatFunc(1);
    phi[d + k] = RatFunc(1);
    cur[n + k] = RatFunc(1);
    cur[d + n + k] = RatFunc(-1);
    rows.push_back(std::move(phi));
    rows.push_back(std::move(cur));
  }
  return LagrangianRelation(v, v.conjugate(), Subspace(2 * d, std::move(rows)));
}

LagrangianRelation pushforward_lagrangian(const std::vector<std::size_t>& f, const LagrangianRelation& l,
                                          const SymplecticSpace& codomain) {
  if (l.source().size() != 0 || l.target().size() != f.size()) {
    throw InterfaceMismatch("pushforward expects a subspace of the space generated by the domain");
  }
  const auto sf = symplectify(corel_from_function(f, codomain.size()), l.target(), codomain);
  return compose_relations(l, sf);
}

std::string pretty(const LagrangianRelation& l) {
  std::vector<std::string> headers = l.source().column_headers();
  for (auto& h : l.target().column_headers()) headers.push_back(std::move(h));
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : l.space().basis()) {
    std::vector<std::string> line;
    for (const auto& x : row) line.push_back(x.to_string());
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(headers.size());
  for (std::size_t j = 0; j < headers.size(); ++j) {
    width[j] = headers[j].size();
    for (const auto& line : cells) width[j] = std::max(width[j], line[j].size());
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string out;
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (j) out += "  ";
      out += line[j] + std::string(width[j] - line[j].size(), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = emit(headers);
  for (const auto& line : cells) out += emit(line);
  return out;
}

}  // namespace cbox
