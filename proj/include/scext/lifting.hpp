#pragma once

/**
 * @file lifting.hpp
 * @brief Lifting criterion and induction along a simple current.
 *
 * A module X lifts to the extension by J exactly when the monodromy
 * M_{J,X} is trivial; for a simple X (or an indecomposable whose weights sit
 * in one coset mod Z) that scalar is e^{2 pi i (h_{J x X} - h_J - h_X)}.
 * Induction sends X to the orbit sum (+)_i J^i x X.
 */

#include "scext/fusion_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scext {

enum class LiftRoute { Simple, IndecomposableFiniteOrder, SubquotientOfSimples };
std::string to_string(LiftRoute r);

struct LiftDecision {
    std::string module;
    Phase monodromy_phase;
    bool lifts = false;
    LiftRoute route = LiftRoute::Simple;
    /// The decision rests on hypotheses that were neither attested nor
    /// derivable; it is reported but not authoritative.
    bool flagged = false;
    std::vector<std::string> notes;
};

struct InducedModule {
    std::string base;
    std::vector<std::string> sectors;
    /// Base is simple and its orbit is free.
    bool simple = false;
    bool truncated = false;
    /// Lexicographically smallest orbit element.
    std::string iso_key;
    std::vector<std::string> notes;
};

/// e^{2 pi i (h_{J x X} - h_J - h_X)}; coset representatives for
/// indecomposables. Throws InputError on unknown names or missing images.
Phase monodromy_phase(const FusionModel& m, const SimpleCurrent& J, const std::string& x);

LiftDecision lifts(const FusionModel& m, const SimpleCurrent& J, const std::string& x);

/// N * phase is an integer, N the order of J. Throws InputError for
/// infinite order currents.
bool order_consistency(const FusionModel& m, const SimpleCurrent& J, const std::string& x);

/// Orbit sum of a lifting module. Throws InputError("module does not lift")
/// otherwise. Fixed-point orbits are returned with simple = false and a note.
InducedModule induce(const FusionModel& m, const SimpleCurrent& J, const std::string& x,
                     std::optional<std::int64_t> bound = std::nullopt);

/// Both modules lift to isomorphic modules: same orbit.
bool identify_lifts(const FusionModel& m, const SimpleCurrent& J, const std::string& x,
                    const std::string& y);

struct InducedLoewy {
    /// Same node ids and edges; labels are orbit sums "A ⊕ J·A ⊕ ...".
    LoewyDiagram diagram;
    /// Orbit of each node's composition factor, in node order.
    std::vector<std::vector<std::string>> factors;
};

/// Induces a diagram of the indecomposable `ambient` node by node. Uses the
/// ambient module's own diagram unless one is supplied. The ambient module
/// must lift.
InducedLoewy induce_loewy(const FusionModel& m, const SimpleCurrent& J, const std::string& ambient,
                          const std::optional<LoewyDiagram>& diagram = std::nullopt);

/// One tensor factor of a product module: the factor model, the factor's
/// current (or its vacuum, for an identity component) and the factor label.
struct FactorComponent {
    const FusionModel* model;
    std::string current;
    std::string label;
};

struct AdditivityResult {
    bool ok = true;
    Phase product_phase;
    Phase summed_phase;
};

/// Monodromy of the product current with the product module, read from the
/// product model, against the sum of the per-factor monodromies.
AdditivityResult phase_additivity_check(const FusionModel& product, const std::string& current,
                                        const std::vector<FactorComponent>& factors);

}  // namespace scext
