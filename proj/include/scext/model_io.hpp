#pragma once

// JSON form of fusion models, the single on-disk format for user models:
//
// { "name"?, "central_charge"?,
//   "labels": [{"name", "weight", "qdim"?}],
//   "vacuum": name,
//   "currents": [{"name", "order": n | "infinite", "weight", "qdim"?,
//                 "action": {from: to}, "braiding"?, "ope"?: {"d", "order"},
//                 "truncation"?}],
//   "indecomposables": [{"name", "weight_coset", "images": {current: name},
//                        "loewy"?: {"nodes": [{"id", "label"}], "edges": [[i, j]]},
//                        "attested"?: {"finite_hom", "bounded_jordan_blocks",
//                                      "subquotient_of_simples"}}] }
//
// Weights are fraction strings. Phases (qdim, braiding) are fraction strings
// q standing for e^{2 pi i q}; the integers 1 and -1 are accepted for signs.

#include "scext/fusion_model.hpp"

#include <json.hpp>

#include <filesystem>

namespace scext {

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Phase& p);
nlohmann::json to_json(const LoewyDiagram& d);
nlohmann::json to_json(const FusionModel& m);

Rational rational_from_json(const nlohmann::json& j);
Phase phase_from_json(const nlohmann::json& j);
LoewyDiagram loewy_from_json(const nlohmann::json& j);
/// Throws InputError on schema problems. Does not run validate_model.
FusionModel model_from_json(const nlohmann::json& j);
FusionModel load_model(const std::filesystem::path& path);

}  // namespace scext
