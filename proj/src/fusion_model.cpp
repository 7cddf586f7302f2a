#include "scext/fusion_model.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace scext {

bool LoewyDiagram::is_acyclic() const {
    std::map<int, std::vector<int>> out;
    std::map<int, int> indegree;
    for (const auto& n : nodes) indegree[n.id] = 0;
    for (const auto& [from, to] : edges) {
        out[from].push_back(to);
        ++indegree[to];
        indegree.try_emplace(from, 0);
    }
    std::vector<int> ready;
    for (const auto& [id, deg] : indegree) {
        if (deg == 0) ready.push_back(id);
    }
    std::size_t visited = 0;
    while (!ready.empty()) {
        int id = ready.back();
        ready.pop_back();
        ++visited;
        for (int next : out[id]) {
            if (--indegree[next] == 0) ready.push_back(next);
        }
    }
    return visited == indegree.size();
}

const SimpleLabel* FusionModel::find_label(const std::string& label) const {
    auto it = std::find_if(labels.begin(), labels.end(),
                           [&](const SimpleLabel& l) { return l.name == label; });
    return it == labels.end() ? nullptr : &*it;
}

const SimpleCurrent* FusionModel::find_current(const std::string& current) const {
    auto it = std::find_if(currents.begin(), currents.end(),
                           [&](const SimpleCurrent& c) { return c.name == current; });
    return it == currents.end() ? nullptr : &*it;
}

const IndecomposableModule* FusionModel::find_indecomposable(const std::string& module) const {
    auto it = std::find_if(indecomposables.begin(), indecomposables.end(),
                           [&](const IndecomposableModule& p) { return p.name == module; });
    return it == indecomposables.end() ? nullptr : &*it;
}

const SimpleLabel& FusionModel::label(const std::string& label) const {
    if (const auto* l = find_label(label)) return *l;
    throw InputError("unknown simple label '" + label + "'");
}

const SimpleCurrent& FusionModel::current(const std::string& current) const {
    if (const auto* c = find_current(current)) return *c;
    throw InputError("unknown simple current '" + current + "'");
}

const IndecomposableModule& FusionModel::indecomposable(const std::string& module) const {
    if (const auto* p = find_indecomposable(module)) return *p;
    throw InputError("unknown indecomposable module '" + module + "'");
}

std::optional<std::string> apply_current(const FusionModel& m, const SimpleCurrent& J,
                                         const std::string& x) {
    if (m.is_simple(x)) {
        auto it = J.action.find(x);
        if (it == J.action.end()) return std::nullopt;
        return it->second;
    }
    const auto& p = m.indecomposable(x);
    auto it = p.images.find(J.name);
    if (it == p.images.end()) return std::nullopt;
    return it->second;
}

Orbit orbit(const FusionModel& m, const SimpleCurrent& J, const std::string& x,
            std::optional<std::int64_t> bound) {
    if (!m.is_simple(x) && m.find_indecomposable(x) == nullptr) {
        throw InputError("unknown module '" + x + "'");
    }
    std::optional<std::int64_t> limit = J.order;
    if (!J.finite()) {
        limit = bound ? bound : J.truncation;
        if (!limit) {
            throw InputError("current '" + J.name +
                             "' has infinite order; an orbit truncation bound is required");
        }
        if (*limit < 1) throw InputError("truncation bound must be positive");
    }

    Orbit result;
    result.elements.push_back(x);
    std::set<std::string> seen{x};
    std::string cur = x;
    while (true) {
        if (!J.finite() && static_cast<std::int64_t>(result.elements.size()) >= *limit) {
            result.truncated = true;
            break;
        }
        auto next = apply_current(m, J, cur);
        if (!next) {
            if (J.finite()) {
                throw InputError("action of '" + J.name + "' is undefined on '" + cur + "'");
            }
            throw InputError("truncation exceeded: action data of '" + J.name + "' ends at '" +
                             cur + "' after " + std::to_string(result.elements.size()) +
                             " of " + std::to_string(*limit) + " requested elements");
        }
        if (*next == x) break;
        if (seen.count(*next)) {
            throw InputError("action of '" + J.name + "' is not injective along the orbit of '" +
                             x + "'");
        }
        if (J.finite() && static_cast<std::int64_t>(result.elements.size()) >= *limit) {
            throw InputError("orbit of '" + x + "' under '" + J.name +
                             "' is longer than the declared order");
        }
        seen.insert(*next);
        result.elements.push_back(*next);
        cur = *next;
    }
    if (J.finite()) {
        result.fixed_point = static_cast<std::int64_t>(result.elements.size()) < *J.order;
    } else if (!result.truncated) {
        result.fixed_point = true;
    }
    return result;
}

std::vector<std::string> detect_simple_currents(const std::vector<std::string>& labels,
                                                const FusionRows& rows) {
    std::vector<std::string> currents;
    std::set<std::string> label_set(labels.begin(), labels.end());
    for (const auto& a : labels) {
        std::set<std::string> images;
        bool permutation = true;
        for (const auto& b : labels) {
            auto it = rows.find({a, b});
            if (it == rows.end()) {
                throw InputError("insufficient data: fusion row " + a + " x " + b + " missing");
            }
            const auto& product = it->second;
            if (product.size() != 1 || !label_set.count(product.front())) {
                permutation = false;
                continue;
            }
            images.insert(product.front());
        }
        if (permutation && images.size() == labels.size()) currents.push_back(a);
    }
    return currents;
}

namespace {

void add(std::vector<Violation>& out, std::string code, std::string message) {
    out.push_back({std::move(code), std::move(message)});
}

// Permutation order of a total bijection on a finite set.
std::int64_t permutation_order(const std::map<std::string, std::string>& action) {
    std::set<std::string> done;
    std::int64_t order = 1;
    for (const auto& [start, _] : action) {
        if (done.count(start)) continue;
        std::int64_t len = 0;
        std::string cur = start;
        do {
            done.insert(cur);
            cur = action.at(cur);
            ++len;
        } while (cur != start && len <= static_cast<std::int64_t>(action.size()));
        order = std::lcm(order, len);
    }
    return order;
}

void validate_current(const FusionModel& m, const SimpleCurrent& J, std::vector<Violation>& out) {
    const std::string who = "current '" + J.name + "': ";
    const SimpleLabel* self = m.find_label(J.name);
    if (!self) {
        add(out, "unknown-current-label", who + "is not a simple label of the model");
    }

    bool action_ok = true;
    std::set<std::string> targets;
    for (const auto& [from, to] : J.action) {
        if (!m.find_label(from) || !m.find_label(to)) {
            add(out, "action-unknown-label", who + "action mentions unknown label in '" + from +
                                                 "' -> '" + to + "'");
            action_ok = false;
        }
        if (!targets.insert(to).second) {
            add(out, "action-not-injective", who + "two labels map to '" + to + "'");
            action_ok = false;
        }
    }

    if (J.finite()) {
        if (*J.order < 1) {
            add(out, "order-nonpositive", who + "order must be positive");
            return;
        }
        for (const auto& l : m.labels) {
            if (!J.action.count(l.name)) {
                add(out, "action-not-total", who + "action undefined on '" + l.name + "'");
                action_ok = false;
            }
        }
        if (action_ok) {
            std::int64_t perm = permutation_order(J.action);
            std::int64_t vac_len = 0;
            std::string cur = m.vacuum;
            if (m.find_label(cur)) {
                do {
                    cur = J.action.at(cur);
                    ++vac_len;
                } while (cur != m.vacuum);
            }
            if (perm != *J.order || vac_len != *J.order) {
                add(out, "action-order-mismatch",
                    who + "action order mismatch: declared order " + std::to_string(*J.order) +
                        ", permutation order " + std::to_string(perm) + ", vacuum orbit length " +
                        std::to_string(vac_len));
            }
        }
    } else if (m.find_label(m.vacuum)) {
        // Walk the vacuum orbit as far as data allows; it must never close up.
        std::string cur = m.vacuum;
        std::set<std::string> seen{cur};
        while (true) {
            auto it = J.action.find(cur);
            if (it == J.action.end()) break;
            cur = it->second;
            if (cur == m.vacuum) {
                add(out, "infinite-order-cycle",
                    who + "declared infinite order but J^n maps the vacuum to itself");
                break;
            }
            if (!seen.insert(cur).second) break;
        }
    }

    auto vac_image = J.action.find(m.vacuum);
    if (vac_image == J.action.end() || vac_image->second != J.name) {
        add(out, "current-vacuum-image", who + "action must send the vacuum to the current itself");
    }
    if (self) {
        if (self->weight != J.weight) {
            add(out, "current-weight", who + "weight " + J.weight.to_string() +
                                           " differs from label weight " +
                                           self->weight.to_string());
        }
        if (self->qdim && J.qdim && *self->qdim != *J.qdim) {
            add(out, "current-qdim", who + "quantum dimension differs from the label's");
        }
    }

    if (!J.finite() || !action_ok) return;
    const Rational N(*J.order);
    for (const auto& l : m.labels) {
        const auto* image = m.find_label(J.action.at(l.name));
        if (!image) continue;
        Rational exponent = image->weight - J.weight - l.weight;
        if (!(N * exponent).is_integer()) {
            add(out, "lambda-order",
                who + "monodromy with '" + l.name + "' is e^{2 pi i " +
                    exponent.fractional_part().to_string() + "}, violating lambda^N = 1 for N = " +
                    std::to_string(*J.order));
        }
    }
}

void validate_indecomposable(const FusionModel& m, const IndecomposableModule& P,
                             std::vector<Violation>& out) {
    const std::string who = "indecomposable '" + P.name + "': ";
    for (const auto& [cur, image] : P.images) {
        const SimpleCurrent* J = m.find_current(cur);
        if (!J) {
            add(out, "image-unknown-current", who + "image under unknown current '" + cur + "'");
            continue;
        }
        const IndecomposableModule* Q = m.find_indecomposable(image);
        if (!Q) {
            add(out, "image-unknown-module", who + "image '" + image + "' is not an indecomposable");
            continue;
        }
        if (!J->finite()) continue;
        Rational exponent = Q->weight_coset - J->weight - P.weight_coset;
        if (!(Rational(*J->order) * exponent).is_integer()) {
            add(out, "lambda-order",
                who + "monodromy with '" + cur + "' is e^{2 pi i " +
                    exponent.fractional_part().to_string() + "}, violating lambda^N = 1 for N = " +
                    std::to_string(*J->order));
        }
        // J^N (x) P must come back to P.
        std::string walk = P.name;
        bool complete = true;
        for (std::int64_t i = 0; i < *J->order; ++i) {
            const auto* W = m.find_indecomposable(walk);
            if (!W || !W->images.count(cur)) {
                complete = false;
                break;
            }
            walk = W->images.at(cur);
        }
        if (complete && walk != P.name) {
            add(out, "image-order-mismatch",
                who + "applying '" + cur + "' order-many times does not return to the module");
        }
    }

    if (!P.loewy) return;
    const auto& d = *P.loewy;
    std::set<int> ids;
    for (const auto& n : d.nodes) {
        if (!ids.insert(n.id).second) {
            add(out, "loewy-duplicate-node", who + "node id " + std::to_string(n.id) + " repeated");
        }
        const SimpleLabel* l = m.find_label(n.label);
        if (!l) {
            add(out, "loewy-unknown-label", who + "node label '" + n.label + "' is not a simple");
            continue;
        }
        if (!(l->weight - P.weight_coset).is_integer()) {
            add(out, "loewy-coset", who + "composition factor '" + n.label +
                                        "' lies outside the weight coset " +
                                        P.weight_coset.to_string() + " + Z");
        }
    }
    for (const auto& [from, to] : d.edges) {
        if (!ids.count(from) || !ids.count(to)) {
            add(out, "loewy-unknown-node", who + "edge references a missing node");
        }
    }
    if (!d.is_acyclic()) {
        add(out, "loewy-cycle", who + "Loewy diagram has a directed cycle");
    }
}

}  // namespace

std::vector<Violation> validate_model(const FusionModel& m) {
    std::vector<Violation> out;
    if (m.labels.empty()) {
        add(out, "empty-model", "model has no simple labels");
        return out;
    }
    std::set<std::string> names;
    for (const auto& l : m.labels) {
        if (l.name.empty()) add(out, "empty-label", "a simple label has an empty name");
        if (!names.insert(l.name).second) {
            add(out, "duplicate-label", "simple label '" + l.name + "' appears twice");
        }
    }
    const SimpleLabel* vac = m.find_label(m.vacuum);
    if (!vac) {
        add(out, "missing-vacuum", "vacuum '" + m.vacuum + "' is not a simple label");
    } else {
        if (!vac->weight.is_zero()) {
            add(out, "vacuum-weight", "vacuum weight is " + vac->weight.to_string() + ", not 0");
        }
        if (vac->qdim && !vac->qdim->is_identity()) {
            add(out, "vacuum-qdim", "vacuum quantum dimension is not 1");
        }
    }

    std::set<std::string> current_names;
    for (const auto& J : m.currents) {
        if (!current_names.insert(J.name).second) {
            add(out, "duplicate-current", "current '" + J.name + "' listed twice");
        }
        validate_current(m, J, out);
    }

    std::set<std::string> module_names;
    for (const auto& P : m.indecomposables) {
        if (!module_names.insert(P.name).second || names.count(P.name)) {
            add(out, "duplicate-indecomposable", "module name '" + P.name + "' is not unique");
        }
        validate_indecomposable(m, P, out);
    }
    return out;
}

}  // namespace scext
