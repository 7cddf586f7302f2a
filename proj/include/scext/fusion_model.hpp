#pragma once

/**
 * @file fusion_model.hpp
 * @brief Scalar shadow of a braided tensor category of modules.
 *
 * A FusionModel records, for each simple module, its conformal weight and
 * (optionally) its quantum dimension, together with the permutations induced
 * by simple currents and a list of tracked reducible indecomposables. Full
 * fusion coefficients are never required.
 */

#include "scext/phase.hpp"
#include "scext/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scext {

/// Malformed or inconsistent user input (exit code 1 territory).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SimpleLabel {
    std::string name;
    Rational weight;
    std::optional<Phase> qdim;
};

/// Leading-order data of the self-OPE of a self-dual current:
/// Y(j,x)j = v x^{-2d+N} + higher terms, j of lowest weight d.
struct OpeData {
    Rational lowest_weight;
    std::int64_t leading_order = 0;
};

struct SimpleCurrent {
    /// Label of J itself; the action must send the vacuum here.
    std::string name;
    /// Order N of J, or nullopt for a current of infinite order.
    std::optional<std::int64_t> order;
    /// The permutation X -> J (x) X. Partial for infinite order currents.
    std::map<std::string, std::string> action;
    Rational weight;
    std::optional<Phase> qdim;
    /// Self-braiding c_{J,J} when supplied directly by the user.
    std::optional<Phase> braiding;
    std::optional<OpeData> ope;
    /// Orbit listing bound for infinite order currents.
    std::optional<std::int64_t> truncation;

    bool finite() const { return order.has_value(); }
};

struct LoewyNode {
    int id = 0;
    std::string label;
};

/// Directed acyclic graph of composition factors (edges point from head
/// towards socle).
struct LoewyDiagram {
    std::vector<LoewyNode> nodes;
    std::vector<std::pair<int, int>> edges;

    /// True when the edge relation has no directed cycle.
    bool is_acyclic() const;
};

/// Properties of an indecomposable that scalar data cannot certify and that
/// the user vouches for instead.
struct Attestations {
    bool finite_hom = false;
    bool bounded_jordan_blocks = false;
    bool subquotient_of_simples = false;
};

struct IndecomposableModule {
    std::string name;
    /// Any representative of the single coset mu + Z of generalized weights.
    Rational weight_coset;
    /// current name -> name of J (x) P
    std::map<std::string, std::string> images;
    std::optional<LoewyDiagram> loewy;
    Attestations attested;
};

class FusionModel {
public:
    std::string name;
    std::vector<SimpleLabel> labels;
    std::string vacuum;
    std::vector<SimpleCurrent> currents;
    std::vector<IndecomposableModule> indecomposables;
    std::optional<Rational> central_charge;

    const SimpleLabel* find_label(const std::string& label) const;
    const SimpleCurrent* find_current(const std::string& current) const;
    const IndecomposableModule* find_indecomposable(const std::string& module) const;

    /// Throwing lookups (InputError naming the missing entity).
    const SimpleLabel& label(const std::string& label) const;
    const SimpleCurrent& current(const std::string& current) const;
    const IndecomposableModule& indecomposable(const std::string& module) const;

    bool is_simple(const std::string& module) const { return find_label(module) != nullptr; }
    const Rational& weight(const std::string& label) const { return this->label(label).weight; }
};

struct Violation {
    std::string code;
    std::string message;
};

/// Every type invariant of the model, including lambda^N = 1 for each finite
/// order current against every simple and indecomposable. Empty when valid.
std::vector<Violation> validate_model(const FusionModel& m);

/// Fusion table entries a (x) b given as multisets of simple labels.
using FusionRows = std::map<std::pair<std::string, std::string>, std::vector<std::string>>;

/// Labels whose fusion row b -> a (x) b is a permutation of the labels.
/// Throws InputError("insufficient data ...") when a row entry is missing.
std::vector<std::string> detect_simple_currents(const std::vector<std::string>& labels,
                                                const FusionRows& rows);

struct Orbit {
    std::vector<std::string> elements;
    /// J^i (x) x = x for some 0 < i < N.
    bool fixed_point = false;
    /// Listing stopped at the truncation bound of an infinite order current.
    bool truncated = false;
};

/// [x, J x, J^2 x, ...] up to the first repetition. Works on simple labels and
/// on indecomposables (through their image tables). For infinite order
/// currents the listing stops after `bound` elements (falling back to the
/// current's own truncation); running out of action data before that is an
/// InputError.
Orbit orbit(const FusionModel& m, const SimpleCurrent& J, const std::string& x,
            std::optional<std::int64_t> bound = std::nullopt);

/// One step of the current action on a simple or indecomposable module.
std::optional<std::string> apply_current(const FusionModel& m, const SimpleCurrent& J,
                                         const std::string& x);

}  // namespace scext
