#pragma once

// JSON renderings of engine results, shared by the CLI and the Python module.

#include "scext/cocycle.hpp"
#include "scext/extension.hpp"
#include "scext/library.hpp"
#include "scext/lifting.hpp"

#include <json.hpp>

namespace scext {

nlohmann::json to_json(const ExtensionReport& r);
nlohmann::json to_json(const LiftDecision& d);
nlohmann::json to_json(const InducedModule& m);
nlohmann::json to_json(const InducedLoewy& l);
nlohmann::json to_json(const FamilyComparison& c);
nlohmann::json to_json(const CocycleReport& r);
nlohmann::json to_json(const QuadraticForm& q, const FiniteAbelianGroup& g);
nlohmann::json to_json(const SuiteReport& r);
nlohmann::json to_json(const std::vector<Violation>& v);

}  // namespace scext
