#pragma once

// JSON encodings of forms, relations and behaviors. Scalars are written in
// the RatFunc text form.

#include "json.hpp"

#include "cbox/blackbox.hpp"
#include "cbox/dirichlet.hpp"
#include "cbox/lagrel.hpp"

namespace cbox {

/// [{"i": .., "j": .., "coeff": ..}, ...] in pair order.
nlohmann::json form_to_json(const DirichletForm& q);
DirichletForm form_from_json(const nlohmann::json& j, std::vector<NodeId> support);

nlohmann::json rows_to_json(const Matrix& m);
Matrix rows_from_json(const nlohmann::json& j);

/// {"inputs": [...], "outputs": [...], "generators": [[...], ...]}
nlohmann::json behavior_to_json(const Behavior& b);
Behavior behavior_from_json(const nlohmann::json& j);

}  // namespace cbox
