#include "scext/model_io.hpp"

#include <fstream>

namespace scext {

using nlohmann::json;

json to_json(const Rational& r) { return r.to_string(); }
json to_json(const Phase& p) { return p.to_string(); }

json to_json(const LoewyDiagram& d) {
    json nodes = json::array();
    for (const auto& n : d.nodes) nodes.push_back({{"id", n.id}, {"label", n.label}});
    json edges = json::array();
    for (const auto& [from, to] : d.edges) edges.push_back(json::array({from, to}));
    return {{"nodes", nodes}, {"edges", edges}};
}

json to_json(const FusionModel& m) {
    json out = json::object();
    if (!m.name.empty()) out["name"] = m.name;
    if (m.central_charge) out["central_charge"] = to_json(*m.central_charge);

    json labels = json::array();
    for (const auto& l : m.labels) {
        json e = {{"name", l.name}, {"weight", to_json(l.weight)}};
        if (l.qdim) e["qdim"] = to_json(*l.qdim);
        labels.push_back(std::move(e));
    }
    out["labels"] = std::move(labels);
    out["vacuum"] = m.vacuum;

    json currents = json::array();
    for (const auto& J : m.currents) {
        json e = {{"name", J.name}};
        if (J.order) {
            e["order"] = *J.order;
        } else {
            e["order"] = "infinite";
        }
        e["weight"] = to_json(J.weight);
        if (J.qdim) e["qdim"] = to_json(*J.qdim);
        if (J.braiding) e["braiding"] = to_json(*J.braiding);
        if (J.ope) {
            e["ope"] = {{"d", to_json(J.ope->lowest_weight)}, {"order", J.ope->leading_order}};
        }
        if (J.truncation) e["truncation"] = *J.truncation;
        // label order rather than map order keeps dumps readable
        json action = json::object();
        for (const auto& l : m.labels) {
            auto it = J.action.find(l.name);
            if (it != J.action.end()) action[l.name] = it->second;
        }
        for (const auto& [from, to] : J.action) {
            if (!action.contains(from)) action[from] = to;
        }
        e["action"] = std::move(action);
        currents.push_back(std::move(e));
    }
    out["currents"] = std::move(currents);

    json indecs = json::array();
    for (const auto& P : m.indecomposables) {
        json e = {{"name", P.name}, {"weight_coset", to_json(P.weight_coset)}};
        json images = json::object();
        for (const auto& [cur, image] : P.images) images[cur] = image;
        e["images"] = std::move(images);
        if (P.loewy) e["loewy"] = to_json(*P.loewy);
        e["attested"] = {{"finite_hom", P.attested.finite_hom},
                         {"bounded_jordan_blocks", P.attested.bounded_jordan_blocks},
                         {"subquotient_of_simples", P.attested.subquotient_of_simples}};
        indecs.push_back(std::move(e));
    }
    out["indecomposables"] = std::move(indecs);
    return out;
}

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(where + ": missing field '" + key + "'");
    }
    return j.at(key);
}

std::string require_string(const json& j, const char* key, const std::string& where) {
    const json& v = require(j, key, where);
    if (!v.is_string()) throw InputError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

template <typename F>
auto wrap(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(where + ": " + e.what());
    }
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw InputError("expected a fraction string, got " + j.dump());
}

Phase phase_from_json(const json& j) {
    if (j.is_number_integer()) {
        auto v = j.get<std::int64_t>();
        if (v == 1 || v == -1) return Phase::from_sign(static_cast<int>(v));
        throw InputError("integer phases must be +1 or -1, got " + j.dump());
    }
    return Phase(rational_from_json(j));
}

LoewyDiagram loewy_from_json(const json& j) {
    const std::string where = "loewy";
    LoewyDiagram d;
    for (const auto& n : require(j, "nodes", where)) {
        if (n.is_array() && n.size() == 2) {
            d.nodes.push_back({n[0].get<int>(), n[1].get<std::string>()});
        } else {
            d.nodes.push_back({require(n, "id", where).get<int>(), require_string(n, "label", where)});
        }
    }
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("loewy: edges must be [from, to]");
            d.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    return d;
}

namespace {

FusionModel parse_model(const json& j) {
    if (!j.is_object()) throw InputError("model document must be a JSON object");
    FusionModel m;
    if (j.contains("name")) m.name = j.at("name").get<std::string>();
    if (j.contains("central_charge")) {
        m.central_charge = wrap("central_charge", [&] { return rational_from_json(j["central_charge"]); });
    }
    for (const auto& e : require(j, "labels", "model")) {
        std::string where = "label";
        SimpleLabel l;
        l.name = require_string(e, "name", where);
        where += " '" + l.name + "'";
        l.weight = wrap(where, [&] { return rational_from_json(require(e, "weight", where)); });
        if (e.contains("qdim")) l.qdim = wrap(where, [&] { return phase_from_json(e["qdim"]); });
        m.labels.push_back(std::move(l));
    }
    m.vacuum = require_string(j, "vacuum", "model");

    if (j.contains("currents")) {
        for (const auto& e : j.at("currents")) {
            std::string where = "current";
            SimpleCurrent J;
            J.name = require_string(e, "name", where);
            where += " '" + J.name + "'";
            const json& order = require(e, "order", where);
            if (order.is_string() && order.get<std::string>() == "infinite") {
                J.order = std::nullopt;
            } else if (order.is_number_integer()) {
                J.order = order.get<std::int64_t>();
            } else {
                throw InputError(where + ": order must be a positive integer or \"infinite\"");
            }
            J.weight = wrap(where, [&] { return rational_from_json(require(e, "weight", where)); });
            if (e.contains("qdim")) J.qdim = wrap(where, [&] { return phase_from_json(e["qdim"]); });
            if (e.contains("braiding")) {
                J.braiding = wrap(where, [&] { return phase_from_json(e["braiding"]); });
            }
            if (e.contains("ope")) {
                const json& o = e["ope"];
                J.ope = OpeData{wrap(where, [&] { return rational_from_json(require(o, "d", where)); }),
                                require(o, "order", where).get<std::int64_t>()};
            }
            if (e.contains("truncation")) J.truncation = e["truncation"].get<std::int64_t>();
            for (const auto& [from, to] : require(e, "action", where).items()) {
                J.action[from] = to.get<std::string>();
            }
            m.currents.push_back(std::move(J));
        }
    }

    if (j.contains("indecomposables")) {
        for (const auto& e : j.at("indecomposables")) {
            std::string where = "indecomposable";
            IndecomposableModule P;
            P.name = require_string(e, "name", where);
            where += " '" + P.name + "'";
            P.weight_coset =
                wrap(where, [&] { return rational_from_json(require(e, "weight_coset", where)); });
            if (e.contains("images")) {
                for (const auto& [cur, image] : e["images"].items()) {
                    P.images[cur] = image.get<std::string>();
                }
            }
            if (e.contains("loewy")) P.loewy = wrap(where, [&] { return loewy_from_json(e["loewy"]); });
            if (e.contains("attested")) {
                const json& a = e["attested"];
                P.attested.finite_hom = a.value("finite_hom", false);
                P.attested.bounded_jordan_blocks = a.value("bounded_jordan_blocks", false);
                P.attested.subquotient_of_simples = a.value("subquotient_of_simples", false);
            }
            m.indecomposables.push_back(std::move(P));
        }
    }
    return m;
}

}  // namespace

FusionModel model_from_json(const json& j) {
    try {
        return parse_model(j);
    } catch (const json::exception& e) {
        throw InputError(std::string("model document: ") + e.what());
    }
}

FusionModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open model file '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
    return model_from_json(j);
}

}  // namespace scext
