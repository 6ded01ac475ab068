#include "cbox/json_io.hpp"

#include "cbox/errors.hpp"

namespace cbox {

using nlohmann::json;

json form_to_json(const DirichletForm& q) {
  json out = json::array();
  for (const auto& [pair, c] : q.coeffs()) {
    out.push_back({{"i", pair.first}, {"j", pair.second}, {"coeff", c.to_string()}});
  }
  return out;
}

DirichletForm form_from_json(const json& j, std::vector<NodeId> support) {
  DirichletForm q(std::move(support));
  for (const auto& item : j) {
    q.add(item.at("i").get<std::string>(), item.at("j").get<std::string>(),
          RatFunc::parse(item.at("coeff").get<std::string>()));
  }
  return q;
}

json rows_to_json(const Matrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    out.push_back(std::move(r));
  }
  return out;
}

Matrix rows_from_json(const json& j) {
  Matrix m;
  for (const auto& r : j) {
    Row row;
    for (const auto& x : r) row.push_back(RatFunc::parse(x.get<std::string>()));
    m.push_back(std::move(row));
  }
  return m;
}

namespace {

json labels(const SymplecticSpace& v) {
  json out = json::array();
  for (const auto& p : v.ports()) out.push_back(p.label);
  return out;
}

}  // namespace

json behavior_to_json(const Behavior& b) {
  return {{"inputs", labels(b.relation().source())},
          {"outputs", labels(b.relation().target())},
          {"generators", rows_to_json(b.relation().space().basis())}};
}

Behavior behavior_from_json(const json& j) {
  const auto vx = SymplecticSpace::generated_by(j.at("inputs").get<std::vector<std::string>>());
  const auto vy = SymplecticSpace::generated_by(j.at("outputs").get<std::vector<std::string>>());
  const std::size_t cols = vx.dim() + vy.dim();
  Matrix rows = rows_from_json(j.at("generators"));
  for (const auto& r : rows) {
    if (r.size() != cols) throw SizeMismatch("generator row has the wrong length");
  }
  return Behavior(LagrangianRelation(vx, vy, Subspace(cols, std::move(rows))));
}

}  // namespace cbox
