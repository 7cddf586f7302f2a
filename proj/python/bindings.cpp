// Thin pybind11 layer: every entry point takes and returns JSON text, which
// the Python package decodes.

#include "scext/cli.hpp"
#include "scext/cocycle.hpp"
#include "scext/extension.hpp"
#include "scext/library.hpp"
#include "scext/lifting.hpp"
#include "scext/model_io.hpp"
#include "scext/report_json.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using nlohmann::json;

namespace {

scext::FusionModel model_of(const std::string& text) { return scext::model_from_json(json::parse(text)); }

const scext::SimpleCurrent& current_of(const scext::FusionModel& m, const std::optional<std::string>& name) {
    if (name) return m.current(*name);
    if (m.currents.size() != 1) throw scext::InputError("model has several currents; pass current=");
    return m.currents.front();
}

scext::BuiltinParams params(std::optional<int> p, std::optional<int> u, std::optional<int> v,
                            std::optional<int> k, std::optional<int> r) {
    scext::BuiltinParams bp;
    bp.p = p;
    bp.u = u;
    bp.v = v;
    bp.k = k;
    bp.r = r;
    return bp;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "simple current extensions: parity, lifting and pointed cocycles";
    m.attr("__version__") = scext::kVersion;

    py::register_exception<scext::InputError>(m, "InputError", PyExc_ValueError);

    m.def("builtin_models", [] {
        json out = json::array();
        for (const auto& b : scext::builtin_models())
            out.push_back({{"name", b.name}, {"parameters", b.parameters}, {"description", b.description}});
        return out.dump();
    });

    m.def(
        "builtin",
        [](const std::string& name, std::optional<int> p, std::optional<int> u, std::optional<int> v,
           std::optional<int> k, std::optional<int> r) {
            return scext::to_json(scext::build_builtin(name, params(p, u, v, k, r))).dump();
        },
        py::arg("name"), py::arg("p") = py::none(), py::arg("u") = py::none(), py::arg("v") = py::none(),
        py::arg("k") = py::none(), py::arg("r") = py::none());

    m.def("validate", [](const std::string& model) { return scext::to_json(scext::validate_model(model_of(model))).dump(); });

    m.def(
        "extend",
        [](const std::string& model, std::optional<std::string> current, std::optional<std::int64_t> bound) {
            auto fm = model_of(model);
            return scext::to_json(scext::build_extension(fm, current_of(fm, current).name, bound)).dump();
        },
        py::arg("model"), py::arg("current") = py::none(), py::arg("bound") = py::none());

    m.def(
        "lift",
        [](const std::string& model, const std::string& module, std::optional<std::string> current) {
            auto fm = model_of(model);
            return scext::to_json(scext::lifts(fm, current_of(fm, current), module)).dump();
        },
        py::arg("model"), py::arg("module"), py::arg("current") = py::none());

    m.def(
        "induce",
        [](const std::string& model, const std::string& module, std::optional<std::string> current,
           std::optional<std::int64_t> bound) {
            auto fm = model_of(model);
            return scext::to_json(scext::induce(fm, current_of(fm, current), module, bound)).dump();
        },
        py::arg("model"), py::arg("module"), py::arg("current") = py::none(), py::arg("bound") = py::none());

    m.def(
        "induce_loewy",
        [](const std::string& model, const std::string& module, std::optional<std::string> current) {
            auto fm = model_of(model);
            return scext::to_json(scext::induce_loewy(fm, current_of(fm, current), module)).dump();
        },
        py::arg("model"), py::arg("module"), py::arg("current") = py::none());

    m.def(
        "family",
        [](const std::string& name, std::optional<int> p, std::optional<int> r) {
            auto f = scext::build_family(name, params(p, std::nullopt, std::nullopt, std::nullopt, r));
            return scext::to_json(scext::compare_family(f)).dump();
        },
        py::arg("name"), py::arg("p") = py::none(), py::arg("r") = py::none());

    m.def("cocycle_count", [](const std::string& group, int m_values) {
        return scext::count_cocycles(scext::FiniteAbelianGroup::parse(group), m_values);
    });

    m.def(
        "cocycle_enumerate",
        [](const std::string& group, int m_values, std::uint64_t limit) {
            json out = json::array();
            for (const auto& c : scext::enumerate(scext::FiniteAbelianGroup::parse(group), m_values, limit))
                out.push_back(scext::to_json(c));
            return out.dump();
        },
        py::arg("group"), py::arg("m"), py::arg("limit") = 4096);

    m.def("cocycle_verify", [](const std::string& c) {
        return scext::to_json(scext::verify(scext::cocycle_from_json(json::parse(c)))).dump();
    });
    m.def("cocycle_quadratic", [](const std::string& c) {
        auto cc = scext::cocycle_from_json(json::parse(c));
        return scext::to_json(scext::quadratic_form(cc), cc.group).dump();
    });
    m.def("cocycle_pullback", [](const std::string& c) {
        return scext::pullback_check(scext::cocycle_from_json(json::parse(c)));
    });
    m.def("cocycle_monodromy", [](const std::string& c) {
        return scext::to_json(scext::monodromy_theorem_suite(scext::cocycle_from_json(json::parse(c)))).dump();
    });
    m.def("cocycle_equivalent", [](const std::string& a, const std::string& b, int m_values) {
        auto w = scext::coboundary_equivalent(scext::cocycle_from_json(json::parse(a)),
                                              scext::cocycle_from_json(json::parse(b)), m_values);
        return w ? json(*w).dump() : std::string("null");
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = scext::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
