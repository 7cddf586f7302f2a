#include "scext/cli.hpp"

#include "scext/cocycle.hpp"
#include "scext/extension.hpp"
#include "scext/library.hpp"
#include "scext/lifting.hpp"
#include "scext/model_io.hpp"
#include "scext/report_json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <set>
#include <ostream>

namespace scext {

using nlohmann::json;

namespace {

struct Options {
    std::string model;
    std::string file;
    std::string other;
    int p = 0, u = 0, v = 0, k = 0, r = 0;
    bool json = false;
    bool compare = false;
    bool loewy = false;
    bool all = false;
    std::string current;
    std::string module;
    std::string group;
    int values = 0;
    std::int64_t bound = 0;
    std::string family;
};

/// Plain text output: aligned columns.
class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os) const {
        std::vector<std::size_t> width;
        for (const auto& r : rows_) {
            if (width.size() < r.size()) width.resize(r.size(), 0);
            for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
        }
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                line += r[i];
                if (i + 1 < r.size()) line += std::string(width[i] - display_width(r[i]) + 2, ' ');
            }
            os << line << "\n";
        }
    }

private:
    static std::size_t display_width(const std::string& s) {
        std::size_t n = 0;
        for (unsigned char c : s) n += (c & 0xC0) != 0x80;
        return n;
    }
    std::vector<std::vector<std::string>> rows_;
};

/// Signs as +1/-1, other phases as exp(2 pi i q).
std::string show(const Phase& p) {
    if (p.is_sign()) return p.as_sign() == 1 ? "+1" : "-1";
    return "exp(2 pi i " + p.to_string() + ")";
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

class Runner {
public:
    using Given = std::map<std::string, std::vector<const CLI::Option*>>;

    Runner(const Options& o, const Given& given, std::ostream& out, std::ostream& err)
        : o_(o), given_(given), out_(out), err_(err) {}

    int model_list();
    int model_dump();
    int validate();
    int extend();
    int lift();
    int induce_cmd();
    int family();
    int cocycle_verify();
    int cocycle_enumerate();
    int cocycle_quadratic();
    int cocycle_pullback();
    int cocycle_equiv();
    int cocycle_monodromy();

private:
    bool given(const std::string& opt) const {
        auto it = given_.find(opt);
        if (it == given_.end()) return false;
        for (const auto* x : it->second) {
            if (x->count() > 0) return true;
        }
        return false;
    }
    BuiltinParams params() const {
        BuiltinParams bp;
        if (given("--p")) bp.p = o_.p;
        if (given("--u")) bp.u = o_.u;
        if (given("--v")) bp.v = o_.v;
        if (given("--k")) bp.k = o_.k;
        if (given("--r")) bp.r = o_.r;
        return bp;
    }
    FusionModel load() const {
        if (!o_.file.empty()) return load_model(o_.file);
        if (o_.model.empty()) throw InputError("one of --model or --file is required");
        return build_builtin(o_.model, params());
    }
    const SimpleCurrent& pick_current(const FusionModel& m) const {
        if (!o_.current.empty()) return m.current(o_.current);
        if (m.currents.size() == 1) return m.currents.front();
        static const std::set<std::string> families = {"A", "B", "C", "osp", "n4", "walgebra"};
        if (o_.file.empty() && families.count(o_.model)) {
            return m.current(build_family(o_.model, params()).current);
        }
        throw InputError("model '" + m.name + "' has " + std::to_string(m.currents.size()) +
                         " currents; choose one with --current");
    }
    std::optional<std::int64_t> bound() const {
        if (given("--bound")) return o_.bound;
        return std::nullopt;
    }
    AbelianCocycle load_cocycle(const std::string& path) const {
        if (path.empty()) throw InputError("--file is required");
        std::ifstream in(path);
        if (!in) throw InputError("cannot open cocycle file '" + path + "'");
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw InputError("'" + path + "' is not valid JSON: " + e.what());
        }
        return cocycle_from_json(j);
    }
    void header() const { out_ << "scext " << kVersion << "\n"; }
    void emit(const json& j) const { out_ << j.dump(2) << "\n"; }

    const Options& o_;
    const Given& given_;
    std::ostream& out_;
    std::ostream& err_;
};

int Runner::model_list() {
    if (o_.json) {
        json arr = json::array();
        for (const auto& b : builtin_models()) {
            arr.push_back({{"name", b.name}, {"parameters", b.parameters}, {"description", b.description}});
        }
        emit(arr);
        return kOk;
    }
    header();
    Table t({"name", "parameters", "description"});
    for (const auto& b : builtin_models()) t.add({b.name, b.parameters, b.description});
    t.print(out_);
    return kOk;
}

int Runner::model_dump() {
    FusionModel m = load();
    emit(to_json(m));
    return kOk;
}

int Runner::validate() {
    FusionModel m = load();
    auto v = validate_model(m);
    if (o_.json) {
        emit({{"model", m.name}, {"valid", v.empty()}, {"violations", to_json(v)}});
    } else {
        header();
        out_ << "model: " << m.name << "\n";
        if (v.empty()) {
            out_ << "valid: no violations\n";
        } else {
            Table t({"code", "message"});
            for (const auto& x : v) t.add({x.code, x.message});
            t.print(out_);
        }
    }
    return v.empty() ? kOk : kInputError;
}

int Runner::extend() {
    FusionModel m = load();
    const SimpleCurrent& J = pick_current(m);
    ExtensionReport r = build_extension(m, J.name, bound());
    if (o_.json) {
        emit(to_json(r));
    } else {
        header();
        out_ << "current: " << r.current << " (grading " << r.grading_group << ")\n";
        out_ << "parity: " << (r.parity ? to_string(*r.parity) : "undetermined") << "\n";
        out_ << "theta: " << (r.theta_sign ? std::to_string(*r.theta_sign) : "not a sign") << "\n";
        out_ << "braiding: " << (r.braiding_c ? show(*r.braiding_c) : "unknown") << " via "
             << to_string(r.route) << "\n";
        out_ << "qdim: " << (r.qdim_J ? show(*r.qdim_J) : "unknown") << "\n";
        Table t({"sector", "weight", "parity"});
        for (const auto& s : r.sectors) t.add({s.label, s.weight.to_string(), std::to_string(s.parity)});
        t.print(out_);
        if (r.sectors_truncated) out_ << "(sector list truncated)\n";
        for (const auto& d : r.diagnostics) out_ << "note: " << d << "\n";
        for (const auto& v : r.violations) out_ << "violation: " << v << "\n";
    }
    for (const auto& v : r.violations) err_ << "violation: " << v << "\n";
    return r.violations.empty() ? kOk : kPropertyViolation;
}

int Runner::lift() {
    FusionModel m = load();
    const SimpleCurrent& J = pick_current(m);
    if (o_.module.empty()) throw InputError("--module is required");
    LiftDecision d = lifts(m, J, o_.module);
    std::optional<bool> consistent;
    if (J.finite()) consistent = order_consistency(m, J, o_.module);
    if (o_.json) {
        json j = to_json(d);
        j["current"] = J.name;
        j["order_consistent"] = consistent ? json(*consistent) : json(nullptr);
        emit(j);
    } else {
        header();
        out_ << "module: " << d.module << "\n";
        out_ << "current: " << J.name << "\n";
        out_ << "phase: " << d.monodromy_phase.to_string() << " (monodromy " << show(d.monodromy_phase) << ")\n";
        out_ << "lifts: " << (d.lifts ? "yes" : "no") << "\n";
        out_ << "route: " << to_string(d.route) << (d.flagged ? " (flagged)" : "") << "\n";
        for (const auto& n : d.notes) out_ << "note: " << n << "\n";
    }
    if (consistent && !*consistent) {
        err_ << "violation: N * phase is not an integer\n";
        return kPropertyViolation;
    }
    return kOk;
}

int Runner::induce_cmd() {
    FusionModel m = load();
    const SimpleCurrent& J = pick_current(m);
    if (o_.module.empty()) throw InputError("--module is required");
    if (o_.loewy) {
        InducedLoewy l = induce_loewy(m, J, o_.module);
        if (o_.json) {
            emit(to_json(l));
        } else {
            header();
            Table t({"node", "induced factor"});
            for (const auto& n : l.diagram.nodes) t.add({std::to_string(n.id), n.label});
            t.print(out_);
            for (const auto& [a, b] : l.diagram.edges) out_ << a << " -> " << b << "\n";
        }
        return kOk;
    }
    InducedModule im = induce(m, J, o_.module, bound());
    if (o_.json) {
        emit(to_json(im));
    } else {
        header();
        out_ << "induced from: " << im.base << "\n";
        out_ << "sectors: " << join(im.sectors, " ⊕ ") << "\n";
        out_ << "simple: " << (im.simple ? "yes" : "no") << "\n";
        out_ << "class: " << im.iso_key << "\n";
        for (const auto& n : im.notes) out_ << "note: " << n << "\n";
    }
    return kOk;
}

int Runner::family() {
    FamilySetup f = build_family(o_.family, params());
    if (!o_.compare) {
        ExtensionReport r = build_extension(f.model, f.current);
        if (o_.json) {
            emit({{"family", f.family},
                  {"current", f.current},
                  {"parity", r.parity ? json(to_string(*r.parity)) : json(nullptr)},
                  {"extension", to_json(r)},
                  {"notes", f.notes}});
        } else {
            header();
            out_ << "family: " << f.family << "\n";
            out_ << "current: " << f.current << " (weight " << f.model.current(f.current).weight.to_string()
                 << ")\n";
            out_ << "parity: " << (r.parity ? to_string(*r.parity) : "undetermined") << "\n";
            for (const auto& n : f.notes) out_ << "note: " << n << "\n";
        }
        return r.violations.empty() ? kOk : kPropertyViolation;
    }
    FamilyComparison c = compare_family(f);
    if (o_.json) {
        json j = to_json(c);
        j["notes"] = f.notes;
        emit(j);
    } else {
        header();
        out_ << "family: " << c.family << "\n";
        out_ << "current: " << c.current << "\n";
        out_ << "parity: " << (c.extension.parity ? to_string(*c.extension.parity) : "undetermined");
        if (c.printed.parity) out_ << " (printed " << to_string(*c.printed.parity) << ")";
        out_ << "\n";
        out_ << "vacuum lifts: " << (c.vacuum_lifts ? "yes" : "no") << "\n";
        out_ << "derived simple lifts (" << c.derived_simple.size() << "): " << join(c.derived_simple) << "\n";
        if (!c.derived_indecomposable.empty()) {
            out_ << "derived indecomposable lifts (" << c.derived_indecomposable.size()
                 << "): " << join(c.derived_indecomposable) << "\n";
        }
        Table t({"class", "simple lifts"});
        for (std::size_t i = 0; i < c.derived_classes.size(); ++i) {
            t.add({std::to_string(i + 1), join(c.derived_classes[i])});
        }
        t.print(out_);
        for (const auto& n : f.notes) out_ << "note: " << n << "\n";
        out_ << "divergences: " << c.divergences.size() << "\n";
        for (const auto& d : c.divergences) out_ << "  " << d << "\n";
    }
    return c.divergences.empty() ? kOk : kPropertyViolation;
}

int Runner::cocycle_verify() {
    AbelianCocycle c = load_cocycle(o_.file);
    CocycleReport r = verify(c);
    json j = to_json(r);
    std::optional<bool> key;
    if (c.group == FiniteAbelianGroup::cyclic(2)) key = key_identity_Z2(c);
    j["key_identity_Z2"] = key ? json(*key) : json(nullptr);
    if (o_.json) {
        emit(j);
    } else {
        header();
        Table t({"identity", "status", "first counterexample"});
        for (const auto& chk : r.checks) {
            std::vector<std::string> where;
            for (int x : chk.counterexample) where.push_back(c.group.element_string(x));
            t.add({chk.name, chk.ok ? "pass" : "FAIL", join(where)});
        }
        if (key) t.add({"F(1,1,1)=Omega(1,1)^2", *key ? "pass" : "FAIL", ""});
        t.print(out_);
    }
    return r.ok() && key.value_or(true) ? kOk : kPropertyViolation;
}

int Runner::cocycle_enumerate() {
    if (o_.group.empty() || o_.values <= 0) throw InputError("--group and --values are required");
    FiniteAbelianGroup G = FiniteAbelianGroup::parse(o_.group);
    struct Class {
        std::vector<int> q;
        std::uint64_t count = 0;
        AbelianCocycle representative;
    };
    std::vector<Class> classes;
    std::map<std::vector<int>, std::size_t> index;
    std::uint64_t total = 0;
    json all = json::array();
    if (o_.all) enumerate(G, o_.values);  // applies the list guard before streaming
    for_each_cocycle(G, o_.values, [&](const AbelianCocycle& c) {
        ++total;
        std::vector<int> q;
        for (int i = 0; i < G.size(); ++i) q.push_back(c.omega(i, i));
        auto [it, fresh] = index.emplace(q, classes.size());
        if (fresh) classes.push_back({q, 0, c});
        ++classes[it->second].count;
        if (o_.all) all.push_back(to_json(c));
    });
    if (o_.json) {
        json cls = json::array();
        for (const auto& c : classes) {
            json q = json::object();
            for (int i = 0; i < G.size(); ++i) q[G.element_string(i)] = Phase(c.q[i], o_.values).to_string();
            cls.push_back({{"q", q}, {"count", c.count}, {"representative", to_json(c.representative)}});
        }
        json j = {{"group", G.name()}, {"m", o_.values}, {"count", total}, {"classes", cls}};
        if (o_.all) j["cocycles"] = all;
        emit(j);
    } else {
        header();
        out_ << "group: " << G.name() << ", values: mu_" << o_.values << "\n";
        out_ << "cocycles: " << total << "\n";
        out_ << "classes (by quadratic form): " << classes.size() << "\n";
        std::vector<std::string> head{"class"};
        for (int i = 0; i < G.size(); ++i) head.push_back("q(" + G.element_string(i) + ")");
        head.push_back("cocycles");
        Table t(head);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            std::vector<std::string> row{std::to_string(i + 1)};
            for (int x : classes[i].q) row.push_back(Phase(x, o_.values).to_string());
            row.push_back(std::to_string(classes[i].count));
            t.add(row);
        }
        t.print(out_);
    }
    return kOk;
}

int Runner::cocycle_quadratic() {
    AbelianCocycle c = load_cocycle(o_.file);
    QuadraticForm q = quadratic_form(c);
    if (o_.json) {
        emit(to_json(q, c.group));
    } else {
        header();
        Table t({"i", "q(i)"});
        for (int i = 0; i < c.n(); ++i) t.add({c.group.element_string(i), q.q[i].to_string()});
        t.print(out_);
        for (const auto& v : q.violations) out_ << "violation: " << v << "\n";
    }
    return q.violations.empty() ? kOk : kPropertyViolation;
}

int Runner::cocycle_pullback() {
    AbelianCocycle c = load_cocycle(o_.file);
    const bool ok = pullback_check(c);
    if (o_.json) {
        emit({{"group", c.group.name()}, {"pullback", ok}});
    } else {
        header();
        out_ << "constant on cosets of 2G: " << (ok ? "yes" : "no") << "\n";
    }
    return kOk;
}

int Runner::cocycle_equiv() {
    AbelianCocycle a = load_cocycle(o_.file);
    AbelianCocycle b = load_cocycle(o_.other);
    const int m = o_.values > 0 ? o_.values : std::max(a.m, b.m);
    auto w = coboundary_equivalent(a, b, m);
    json witness = nullptr;
    if (w) {
        witness = json::object();
        for (int i = 0; i < a.n(); ++i)
            for (int j = 0; j < a.n(); ++j) {
                witness[a.group.element_string(i) + "," + a.group.element_string(j)] =
                    Phase((*w)[i * a.n() + j], m).to_string();
            }
    }
    if (o_.json) {
        emit({{"equivalent", w.has_value()}, {"witness", witness}});
    } else {
        header();
        out_ << "equivalent: " << (w ? "yes" : "no") << "\n";
        if (w) {
            Table t({"b(i,j)", "phase"});
            for (auto& [k, v] : witness.items()) t.add({k, v.get<std::string>()});
            t.print(out_);
        }
    }
    return kOk;
}

int Runner::cocycle_monodromy() {
    AbelianCocycle c = load_cocycle(o_.file);
    SuiteReport r = monodromy_theorem_suite(c);
    if (o_.json) {
        emit(to_json(r));
    } else {
        header();
        Table t({"item", "status", "instances"});
        for (const auto& i : r.items) t.add({i.name, i.ok ? "pass" : "FAIL", std::to_string(i.instances)});
        t.print(out_);
    }
    return r.ok() ? kOk : kPropertyViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Simple current extensions: parity, lifting and pointed cocycle checks", "scext"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Runner::Given given;
    auto track = [&](CLI::Option* opt, const std::string& key) { given[key].push_back(opt); };
    auto model_opts = [&](CLI::App* c) {
        c->add_option("--model,--name", o.model, "built-in model name (see `model list`)");
        c->add_option("--file", o.file, "model JSON file");
        track(c->add_option("--p", o.p, "parameter p"), "--p");
        track(c->add_option("--u", o.u, "Virasoro parameter u"), "--u");
        track(c->add_option("--v", o.v, "Virasoro parameter v"), "--v");
        track(c->add_option("--k", o.k, "affine level k"), "--k");
        track(c->add_option("--r", o.r, "W-algebra parameter r"), "--r");
        c->add_flag("--json", o.json, "JSON output");
    };

    auto* model = app.add_subcommand("model", "list or dump built-in models");
    model->require_subcommand(1);
    auto* list = model->add_subcommand("list", "list built-in models");
    list->add_flag("--json", o.json, "JSON output");
    auto* dump = model->add_subcommand("dump", "print a built-in model as JSON");
    model_opts(dump);

    auto* validate = app.add_subcommand("validate", "check every model invariant");
    model_opts(validate);

    auto* extend = app.add_subcommand("extend", "classify the extension by a simple current");
    model_opts(extend);
    extend->add_option("--current", o.current, "simple current");
    track(extend->add_option("--bound", o.bound, "sector bound for infinite order currents"), "--bound");

    auto* lift = app.add_subcommand("lift", "decide whether a module lifts");
    model_opts(lift);
    lift->add_option("--current", o.current, "simple current");
    lift->add_option("--module", o.module, "module name")->required();

    auto* induce = app.add_subcommand("induce", "induce a lifting module");
    model_opts(induce);
    induce->add_option("--current", o.current, "simple current");
    induce->add_option("--module", o.module, "module name")->required();
    track(induce->add_option("--bound", o.bound, "orbit bound for infinite order currents"), "--bound");
    induce->add_flag("--loewy", o.loewy, "induce the module's Loewy diagram");

    auto* family = app.add_subcommand("family", "composite families and their printed data");
    family->require_subcommand(1);
    for (const char* name : {"A", "B", "C", "osp", "n4", "walgebra"}) {
        auto* f = family->add_subcommand(name, std::string("family ") + name);
        track(f->add_option("--p", o.p, "parameter p"), "--p");
        track(f->add_option("--r", o.r, "parameter r"), "--r");
        f->add_flag("--compare-paper", o.compare, "compare with the printed lists and parities");
        f->add_flag("--json", o.json, "JSON output");
    }

    auto* cocycle = app.add_subcommand("cocycle", "abelian 3-cocycles on small groups");
    cocycle->require_subcommand(1);
    std::map<std::string, CLI::App*> csub;
    for (const char* name : {"verify", "enumerate", "quadratic", "pullback", "equiv", "monodromy"}) {
        auto* c = cocycle->add_subcommand(name, std::string("cocycle ") + name);
        c->add_flag("--json", o.json, "JSON output");
        csub[name] = c;
    }
    for (const char* name : {"verify", "quadratic", "pullback", "equiv", "monodromy"}) {
        csub[name]->add_option("--file", o.file, "cocycle JSON file");
    }
    csub["equiv"]->add_option("--other", o.other, "second cocycle JSON file");
    csub["equiv"]->add_option("--values", o.values, "cochain values in mu_m");
    csub["enumerate"]->add_option("--group", o.group, "group, e.g. Z4 or Z2xZ2");
    csub["enumerate"]->add_option("--values", o.values, "values in mu_m");
    csub["enumerate"]->add_flag("--all", o.all, "list every cocycle");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << "scext " << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kInputError;
    }

    Runner run(o, given, out, err);
    try {
        if (list->parsed()) return run.model_list();
        if (dump->parsed()) return run.model_dump();
        if (validate->parsed()) return run.validate();
        if (extend->parsed()) return run.extend();
        if (lift->parsed()) return run.lift();
        if (induce->parsed()) return run.induce_cmd();
        for (auto* f : family->get_subcommands()) {
            o.family = f->get_name();
            return run.family();
        }
        if (csub["verify"]->parsed()) return run.cocycle_verify();
        if (csub["enumerate"]->parsed()) return run.cocycle_enumerate();
        if (csub["quadratic"]->parsed()) return run.cocycle_quadratic();
        if (csub["pullback"]->parsed()) return run.cocycle_pullback();
        if (csub["equiv"]->parsed()) return run.cocycle_equiv();
        if (csub["monodromy"]->parsed()) return run.cocycle_monodromy();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    err << app.help();
    return kInputError;
}

}  // namespace scext
