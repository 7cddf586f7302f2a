#include "scext/report_json.hpp"

#include "scext/model_io.hpp"

namespace scext {

using nlohmann::json;

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
    if (!v) return nullptr;
    return to_json(*v);
}

json strings(const std::vector<std::string>& v) { return json(v); }

}  // namespace

json to_json(const ExtensionReport& r) {
    json sectors = json::array();
    for (const auto& s : r.sectors) {
        sectors.push_back({{"label", s.label}, {"weight", to_json(s.weight)}, {"parity", s.parity}});
    }
    return {{"current", r.current},
            {"grading_group", r.grading_group},
            {"sectors", sectors},
            {"even_part", strings(r.even_part)},
            {"sectors_truncated", r.sectors_truncated},
            {"theta_sign", r.theta_sign ? json(*r.theta_sign) : json(nullptr)},
            {"braiding", opt(r.braiding_c)},
            {"qdim", opt(r.qdim_J)},
            {"route", to_string(r.route)},
            {"parity", r.parity ? json(to_string(*r.parity)) : json(nullptr)},
            {"violations", strings(r.violations)},
            {"diagnostics", strings(r.diagnostics)}};
}

json to_json(const LiftDecision& d) {
    return {{"module", d.module},     {"lifts", d.lifts},     {"phase", to_json(d.monodromy_phase)},
            {"route", to_string(d.route)}, {"flagged", d.flagged}, {"notes", strings(d.notes)}};
}

json to_json(const InducedModule& m) {
    return {{"base", m.base},           {"sectors", strings(m.sectors)}, {"simple", m.simple},
            {"truncated", m.truncated}, {"iso_key", m.iso_key},          {"notes", strings(m.notes)}};
}

json to_json(const InducedLoewy& l) {
    return {{"diagram", to_json(l.diagram)}, {"factors", l.factors}};
}

json to_json(const FamilyComparison& c) {
    const auto& pr = c.printed;
    json printed = json::object();
    printed["parity"] = pr.parity ? json(to_string(*pr.parity)) : json(nullptr);
    if (pr.is_voa) printed["is_voa"] = *pr.is_voa;
    printed["current_weight"] = opt(pr.current_weight);
    printed["current_qdim"] = opt(pr.current_qdim);
    printed["simple_lifts"] = pr.simple_lifts ? json(*pr.simple_lifts) : json(nullptr);
    printed["indecomposable_lifts"] =
        pr.indecomposable_lifts ? json(*pr.indecomposable_lifts) : json(nullptr);
    printed["lift_classes"] = pr.lift_classes;
    const auto& e = c.extension;
    return {{"family", c.family},
            {"current", c.current},
            {"parity", e.parity ? json(to_string(*e.parity)) : json(nullptr)},
            {"extension", to_json(e)},
            {"derived",
             {{"simple_lifts", strings(c.derived_simple)},
              {"indecomposable_lifts", strings(c.derived_indecomposable)},
              {"lift_classes", c.derived_classes}}},
            {"printed", printed},
            {"vacuum_lifts", c.vacuum_lifts},
            {"flagged", strings(c.flagged)},
            {"divergences", strings(c.divergences)}};
}

json to_json(const CocycleReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"identity", c.name}, {"ok", c.ok}, {"counterexample", c.counterexample}});
    }
    return {{"ok", r.ok()}, {"checks", checks}};
}

json to_json(const QuadraticForm& q, const FiniteAbelianGroup& g) {
    json qj = json::object(), bj = json::object();
    const int n = g.size();
    for (int i = 0; i < n; ++i) {
        qj[g.element_string(i)] = q.q[i].to_string();
        for (int j = 0; j < n; ++j) {
            bj[g.element_string(i) + "," + g.element_string(j)] = q.B[i * n + j].to_string();
        }
    }
    return {{"q", qj}, {"B", bj}, {"violations", strings(q.violations)}};
}

json to_json(const SuiteReport& r) {
    json items = json::array();
    for (const auto& i : r.items) {
        items.push_back({{"item", i.name},
                         {"ok", i.ok},
                         {"instances", i.instances},
                         {"counterexample", i.counterexample}});
    }
    return {{"ok", r.ok()}, {"items", items}};
}

json to_json(const std::vector<Violation>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back({{"code", x.code}, {"message", x.message}});
    return out;
}

}  // namespace scext
