#include "scext/lifting.hpp"

#include <algorithm>

namespace scext {

std::string to_string(LiftRoute r) {
    switch (r) {
        case LiftRoute::Simple: return "Simple";
        case LiftRoute::IndecomposableFiniteOrder: return "IndecomposableFiniteOrder";
        case LiftRoute::SubquotientOfSimples: return "SubquotientOfSimples";
    }
    return "?";
}

Phase monodromy_phase(const FusionModel& m, const SimpleCurrent& J, const std::string& x) {
    if (const auto* l = m.find_label(x)) {
        auto it = J.action.find(x);
        if (it == J.action.end()) {
            throw InputError("unknown image: '" + J.name + "' has no action on '" + x + "'");
        }
        const auto* image = m.find_label(it->second);
        if (!image) throw InputError("unknown image label '" + it->second + "'");
        return Phase(image->weight - J.weight - l->weight);
    }
    const auto& P = m.indecomposable(x);
    auto it = P.images.find(J.name);
    if (it == P.images.end()) {
        throw InputError("unknown image: no image of '" + x + "' under '" + J.name + "'");
    }
    const auto* image = m.find_indecomposable(it->second);
    if (!image) throw InputError("unknown image module '" + it->second + "'");
    return Phase(image->weight_coset - J.weight - P.weight_coset);
}

LiftDecision lifts(const FusionModel& m, const SimpleCurrent& J, const std::string& x) {
    LiftDecision d;
    d.module = x;
    d.monodromy_phase = monodromy_phase(m, J, x);
    d.lifts = d.monodromy_phase.is_identity();
    if (m.is_simple(x)) {
        d.route = LiftRoute::Simple;
        return d;
    }
    const auto& P = m.indecomposable(x);
    if (J.finite()) {
        d.route = LiftRoute::IndecomposableFiniteOrder;
        if (!P.attested.finite_hom || !P.attested.bounded_jordan_blocks) {
            d.flagged = true;
            d.notes.push_back(
                "finite-dimensional Hom spaces and bounded L(0) Jordan blocks are not attested");
        }
    } else {
        d.route = LiftRoute::SubquotientOfSimples;
        if (!P.attested.subquotient_of_simples) {
            d.flagged = true;
            d.notes.push_back(
                "infinite order current: module not declared a subquotient of a product of "
                "simples; lifting hypotheses not established");
        }
    }
    return d;
}

bool order_consistency(const FusionModel& m, const SimpleCurrent& J, const std::string& x) {
    if (!J.finite()) {
        throw InputError("order consistency needs a finite order current, '" + J.name +
                         "' has infinite order");
    }
    return (Rational(*J.order) * monodromy_phase(m, J, x).value()).is_integer();
}

InducedModule induce(const FusionModel& m, const SimpleCurrent& J, const std::string& x,
                     std::optional<std::int64_t> bound) {
    LiftDecision d = lifts(m, J, x);
    if (!d.lifts) {
        throw InputError("module does not lift: '" + x + "' has monodromy phase " +
                         d.monodromy_phase.to_string());
    }
    Orbit o = orbit(m, J, x, bound);
    InducedModule r;
    r.base = x;
    r.sectors = o.elements;
    r.truncated = o.truncated;
    r.simple = m.is_simple(x) && !o.fixed_point;
    r.iso_key = *std::min_element(o.elements.begin(), o.elements.end());
    r.notes = d.notes;
    if (o.fixed_point) {
        r.notes.push_back("J^i x W = W for some power: the orbit is not free, so the induced "
                          "module need not be simple and this result is not authoritative");
    }
    if (o.truncated) {
        r.notes.push_back("orbit truncated; iso_key is taken over the listed prefix only");
    }
    return r;
}

bool identify_lifts(const FusionModel& m, const SimpleCurrent& J, const std::string& x,
                    const std::string& y) {
    if (x == y) {
        induce(m, J, x);
        return true;
    }
    InducedModule a = induce(m, J, x);
    InducedModule b = induce(m, J, y);
    if (!J.finite()) {
        auto contains = [](const InducedModule& i, const std::string& s) {
            return std::find(i.sectors.begin(), i.sectors.end(), s) != i.sectors.end();
        };
        return contains(a, y) || contains(b, x);
    }
    return a.iso_key == b.iso_key;
}

InducedLoewy induce_loewy(const FusionModel& m, const SimpleCurrent& J, const std::string& ambient,
                          const std::optional<LoewyDiagram>& diagram) {
    LiftDecision d = lifts(m, J, ambient);
    if (!d.lifts) {
        throw InputError("ambient module '" + ambient + "' does not lift (phase " +
                         d.monodromy_phase.to_string() + ")");
    }
    LoewyDiagram source;
    if (diagram) {
        source = *diagram;
    } else {
        const auto* P = m.find_indecomposable(ambient);
        if (!P || !P->loewy) {
            throw InputError("no Loewy diagram available for '" + ambient + "'");
        }
        source = *P->loewy;
    }

    InducedLoewy out;
    out.diagram.edges = source.edges;
    for (const auto& node : source.nodes) {
        if (!m.is_simple(node.label)) {
            throw InputError("unknown label '" + node.label + "' in Loewy diagram");
        }
        Orbit o = orbit(m, J, node.label);
        std::string label;
        for (std::size_t i = 0; i < o.elements.size(); ++i) {
            if (i) label += " ⊕ ";
            label += o.elements[i];
        }
        out.diagram.nodes.push_back({node.id, label});
        out.factors.push_back(std::move(o.elements));
    }
    return out;
}

AdditivityResult phase_additivity_check(const FusionModel& product, const std::string& current,
                                        const std::vector<FactorComponent>& factors) {
    std::string label;
    Phase summed;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        if (i) label += "*";
        label += f.label;
        if (f.current == f.model->vacuum) continue;  // identity component
        summed *= monodromy_phase(*f.model, f.model->current(f.current), f.label);
    }
    AdditivityResult r;
    r.product_phase = monodromy_phase(product, product.current(current), label);
    r.summed_phase = summed;
    r.ok = r.product_phase == r.summed_phase;
    return r;
}

}  // namespace scext
