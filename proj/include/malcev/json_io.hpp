#pragma once

#include <json.hpp>

#include "malcev/algebra.hpp"
#include "malcev/graph.hpp"
#include "malcev/graph_eval.hpp"
#include "malcev/identities.hpp"
#include "malcev/relation.hpp"
#include "malcev/term.hpp"
#include "malcev/verify.hpp"

namespace malcev {

// All loaders throw std::invalid_argument with a description on malformed
// input; emitted JSON round-trips through the corresponding loader.

nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

nlohmann::json relation_to_json(const Relation& r);
Relation relation_from_json(const nlohmann::json& j);
std::vector<Relation> relations_from_json(const nlohmann::json& j);

nlohmann::json algebra_to_json(const Algebra& alg);
Algebra algebra_from_json(const nlohmann::json& j);

nlohmann::json term_to_json(const Term& t);
Term term_from_json(const nlohmann::json& j);

nlohmann::json identity_set_to_json(const IdentitySet& ids);
IdentitySet identity_set_from_json(const nlohmann::json& j);

nlohmann::json connection_to_json(const LabeledGraph& g, const Connection& c);
nlohmann::json report_to_json(const VerificationReport& report);

} // namespace malcev
