#include "scext/library.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace scext {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw InputError(message);
}

Phase sign_phase(int exponent) { return Phase::from_sign(exponent % 2 == 0 ? 1 : -1); }

}  // namespace

std::string triplet_label(int s, bool plus) { return "X" + std::to_string(s) + (plus ? "+" : "-"); }
std::string triplet_projective(int s, bool plus) {
    return "P" + std::to_string(s) + (plus ? "+" : "-");
}
std::string affine_label(int k, int t) {
    return "L(" + std::to_string(k - t) + "," + std::to_string(t) + ")";
}
std::string virasoro_label(int s) { return "phi(1," + std::to_string(s) + ")"; }
std::string tensor_name(const std::string& a, const std::string& b) { return a + "*" + b; }

Rational triplet_weight(int p, int s, bool plus) {
    const std::int64_t a = plus ? p - s : 2 * p - s;
    return Rational(a * a - std::int64_t(p - 1) * (p - 1), 4 * std::int64_t(p));
}

Rational affine_weight(int k, int t) { return Rational(std::int64_t(t) * (t + 2), 4 * std::int64_t(k + 2)); }

Rational virasoro_weight(int u, int v, int s) {
    const std::int64_t a = v - std::int64_t(u) * s;
    return Rational(a * a - std::int64_t(v - u) * (v - u), 4 * std::int64_t(u) * v);
}

std::int64_t triplet_current_ope_order(int p) {
    // N = p/2 + 2d with d = (3p-2)/4
    Rational n = Rational(p, 2) + Rational(2) * Rational(3 * p - 2, 4);
    return static_cast<std::int64_t>(n.numerator());
}

// ---------------------------------------------------------------- blocks

FusionModel triplet(int p) {
    require(p >= 2, "triplet needs p >= 2, got " + std::to_string(p));
    require(p <= 64, "triplet: p > 64 is not supported");
    FusionModel m;
    m.name = "W(" + std::to_string(p) + ")";
    m.central_charge = Rational(1) - Rational(6 * std::int64_t(p - 1) * (p - 1), p);
    const Phase qdim_J = sign_phase(p + 1);
    for (bool plus : {true, false}) {
        for (int s = 1; s <= p; ++s) {
            SimpleLabel l{triplet_label(s, plus), triplet_weight(p, s, plus), std::nullopt};
            if (s == 1) l.qdim = plus ? Phase() : qdim_J;
            m.labels.push_back(std::move(l));
        }
    }
    m.vacuum = triplet_label(1, true);

    SimpleCurrent J;
    J.name = triplet_label(1, false);
    J.order = 2;
    J.weight = Rational(3 * p - 2, 4);
    J.qdim = qdim_J;
    J.ope = OpeData{J.weight, triplet_current_ope_order(p)};
    for (int s = 1; s <= p; ++s) {
        J.action[triplet_label(s, true)] = triplet_label(s, false);
        J.action[triplet_label(s, false)] = triplet_label(s, true);
    }
    m.currents.push_back(std::move(J));

    for (bool plus : {true, false}) {
        for (int s = 1; s <= p - 1; ++s) {
            IndecomposableModule P;
            P.name = triplet_projective(s, plus);
            P.weight_coset = triplet_weight(p, s, plus);
            P.images[triplet_label(1, false)] = triplet_projective(s, !plus);
            LoewyDiagram d;
            d.nodes = {{0, triplet_label(s, plus)},
                       {1, triplet_label(p - s, !plus)},
                       {2, triplet_label(p - s, !plus)},
                       {3, triplet_label(s, plus)}};
            d.edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
            P.loewy = std::move(d);
            P.attested.finite_hom = true;
            P.attested.bounded_jordan_blocks = true;
            m.indecomposables.push_back(std::move(P));
        }
    }
    return m;
}

namespace {

FusionModel virasoro_impl(int u, int v) {
    FusionModel m;
    m.name = "Vir(" + std::to_string(u) + "," + std::to_string(v) + ")";
    m.central_charge = Rational(1) - Rational(6 * std::int64_t(u - v) * (u - v), std::int64_t(u) * v);
    std::vector<int> ladder;
    if (u == 3) {
        for (int s = 1; s <= v - 1; ++s) ladder.push_back(s);
    } else {
        ladder = {1, v - 1};
    }
    const Phase qdim_J = sign_phase(u + v + 1);
    for (int s : ladder) {
        SimpleLabel l{virasoro_label(s), virasoro_weight(u, v, s), std::nullopt};
        if (s == 1) l.qdim = Phase();
        if (s == v - 1) l.qdim = qdim_J;
        m.labels.push_back(std::move(l));
    }
    m.vacuum = virasoro_label(1);
    SimpleCurrent J;
    J.name = virasoro_label(v - 1);
    J.order = 2;
    J.weight = Rational(std::int64_t(u - 2) * (v - 2), 4);
    J.qdim = qdim_J;
    for (int s : ladder) J.action[virasoro_label(s)] = virasoro_label(v - s);
    m.currents.push_back(std::move(J));
    return m;
}

}  // namespace

FusionModel virasoro_minimal(int u, int v) {
    require(u >= 3 && v >= 3, "virasoro needs u, v >= 3");
    require(std::gcd(u, v) == 1, "virasoro needs coprime u, v; got (" + std::to_string(u) + "," +
                                     std::to_string(v) + ")");
    require(u <= 64 && v <= 64, "virasoro: u, v > 64 are not supported");
    return virasoro_impl(u, v);
}

FusionModel affine_sl2(int k) {
    require(k >= 1, "affine_sl2 needs k >= 1, got " + std::to_string(k));
    require(k <= 64, "affine_sl2: k > 64 is not supported");
    FusionModel m;
    m.name = "L" + std::to_string(k) + "(sl2)";
    m.central_charge = Rational(3 * k, k + 2);
    for (int t = 0; t <= k; ++t) {
        SimpleLabel l{affine_label(k, t), affine_weight(k, t), std::nullopt};
        if (t == 0 || t == k) l.qdim = Phase();
        m.labels.push_back(std::move(l));
    }
    m.vacuum = affine_label(k, 0);
    SimpleCurrent J;
    J.name = affine_label(k, k);
    J.order = 2;
    J.weight = Rational(k, 4);
    J.qdim = Phase();
    for (int t = 0; t <= k; ++t) J.action[affine_label(k, t)] = affine_label(k, k - t);
    m.currents.push_back(std::move(J));
    return m;
}

FusionModel lattice_rank1(int p) {
    require(p >= 1, "lattice needs p >= 1, got " + std::to_string(p));
    require(p <= 32, "lattice: p > 32 is not supported");
    const int n = 2 * p;
    auto name = [](int j) { return "V(" + std::to_string(j) + ")"; };
    // minimal norm representative of the coset j + 2p Z
    auto weight = [&](int j) {
        const std::int64_t a = std::min(j, n - j);
        return Rational(a * a, 4 * std::int64_t(p));
    };
    FusionModel m;
    m.name = "V_sqrt(" + std::to_string(n) + ")Z";
    m.central_charge = Rational(1);
    for (int j = 0; j < n; ++j) m.labels.push_back({name(j), weight(j), Phase()});
    m.vacuum = name(0);
    for (int j = 1; j < n; ++j) {
        SimpleCurrent J;
        J.name = name(j);
        J.order = n / std::gcd(j, n);
        J.weight = weight(j);
        J.qdim = Phase();
        for (int i = 0; i < n; ++i) J.action[name(i)] = name((i + j) % n);
        m.currents.push_back(std::move(J));
    }
    return m;
}

FusionModel betagamma_fixture() {
    FusionModel m;
    m.name = "L-1/2(sl2)";
    m.central_charge = Rational(-1);
    const Phase minus = Phase::from_sign(-1);
    m.labels = {{"S+", Rational(0), Phase()}, {"S-", Rational(1, 2), minus}};
    m.vacuum = "S+";
    SimpleCurrent J;
    J.name = "S-";
    J.order = 2;
    J.weight = Rational(1, 2);
    J.qdim = minus;
    // beta(z)beta(w) ~ 2e(w): leading exponent 0 = -2d + N
    J.ope = OpeData{Rational(1, 2), 1};
    J.action = {{"S+", "S-"}, {"S-", "S+"}};
    m.currents.push_back(std::move(J));
    return m;
}

FusionModel trivial_model() {
    FusionModel m;
    m.name = "1";
    m.labels = {{"1", Rational(0), Phase()}};
    m.vacuum = "1";
    m.central_charge = Rational(0);
    return m;
}

// ---------------------------------------------------------------- tensor

namespace {

struct Factor {
    const FusionModel* model;
    const SimpleCurrent* J;  // nullptr: identity

    std::string name() const { return J ? J->name : model->vacuum; }
    std::optional<std::string> act(const std::string& x) const {
        if (!J) return x;
        return apply_current(*model, *J, x);
    }
};

Attestations meet(const Attestations& a, const Attestations& b) {
    return {a.finite_hom && b.finite_hom, a.bounded_jordan_blocks && b.bounded_jordan_blocks,
            a.subquotient_of_simples && b.subquotient_of_simples};
}

/// Simple labels act as one-node diagrams.
LoewyDiagram diagram_of(const FusionModel& m, const std::string& x) {
    if (m.is_simple(x)) return LoewyDiagram{{{0, x}}, {}};
    const auto& P = m.indecomposable(x);
    if (P.loewy) return *P.loewy;
    return {};
}

LoewyDiagram product_diagram(const LoewyDiagram& a, const LoewyDiagram& b) {
    LoewyDiagram d;
    if (a.nodes.empty() || b.nodes.empty()) return d;
    std::map<int, int> ia, ib;
    for (std::size_t i = 0; i < a.nodes.size(); ++i) ia[a.nodes[i].id] = static_cast<int>(i);
    for (std::size_t i = 0; i < b.nodes.size(); ++i) ib[b.nodes[i].id] = static_cast<int>(i);
    const int nb = static_cast<int>(b.nodes.size());
    const bool single_a = a.nodes.size() == 1, single_b = b.nodes.size() == 1;
    for (std::size_t i = 0; i < a.nodes.size(); ++i)
        for (std::size_t j = 0; j < b.nodes.size(); ++j) {
            // keep the original ids when one side is a simple module
            int id = single_b ? a.nodes[i].id : single_a ? b.nodes[j].id : static_cast<int>(i) * nb + static_cast<int>(j);
            d.nodes.push_back({id, tensor_name(a.nodes[i].label, b.nodes[j].label)});
        }
    auto id_of = [&](int i, int j) { return d.nodes[i * nb + j].id; };
    for (auto [x, y] : a.edges)
        for (int j = 0; j < nb; ++j) d.edges.emplace_back(id_of(ia.at(x), j), id_of(ia.at(y), j));
    for (auto [x, y] : b.edges)
        for (std::size_t i = 0; i < a.nodes.size(); ++i)
            d.edges.emplace_back(id_of(static_cast<int>(i), ib.at(x)), id_of(static_cast<int>(i), ib.at(y)));
    return d;
}

std::optional<std::string> act_on_module(const Factor& f, const std::string& x) {
    if (!f.J) return x;
    if (f.model->is_simple(x)) return apply_current(*f.model, *f.J, x);
    const auto& P = f.model->indecomposable(x);
    auto it = P.images.find(f.J->name);
    if (it == P.images.end()) return std::nullopt;
    return it->second;
}

}  // namespace

FusionModel tensor_model(const FusionModel& a, const FusionModel& b) {
    FusionModel m;
    m.name = tensor_name(a.name, b.name);
    if (a.central_charge && b.central_charge) m.central_charge = *a.central_charge + *b.central_charge;
    for (const auto& x : a.labels)
        for (const auto& y : b.labels) {
            SimpleLabel l{tensor_name(x.name, y.name), x.weight + y.weight, std::nullopt};
            if (x.qdim && y.qdim) l.qdim = *x.qdim * *y.qdim;
            m.labels.push_back(std::move(l));
        }
    m.vacuum = tensor_name(a.vacuum, b.vacuum);

    std::vector<Factor> fa{{&a, nullptr}}, fb{{&b, nullptr}};
    for (const auto& J : a.currents) fa.push_back({&a, &J});
    for (const auto& J : b.currents) fb.push_back({&b, &J});
    std::vector<std::pair<Factor, Factor>> pairs;
    for (const auto& x : fa)
        for (const auto& y : fb) {
            if (!x.J && !y.J) continue;
            pairs.emplace_back(x, y);
        }

    for (const auto& [x, y] : pairs) {
        SimpleCurrent J;
        J.name = tensor_name(x.name(), y.name());
        const std::optional<std::int64_t> ox = x.J ? x.J->order : std::optional<std::int64_t>(1);
        const std::optional<std::int64_t> oy = y.J ? y.J->order : std::optional<std::int64_t>(1);
        if (ox && oy) J.order = std::lcm(*ox, *oy);
        J.weight = (x.J ? x.J->weight : Rational(0)) + (y.J ? y.J->weight : Rational(0));
        auto qx = x.J ? x.J->qdim : std::optional<Phase>(Phase());
        auto qy = y.J ? y.J->qdim : std::optional<Phase>(Phase());
        if (qx && qy) J.qdim = *qx * *qy;
        auto bx = x.J ? x.J->braiding : std::optional<Phase>(Phase());
        auto by = y.J ? y.J->braiding : std::optional<Phase>(Phase());
        if (bx && by) J.braiding = *bx * *by;
        auto ex = x.J ? x.J->ope : std::optional<OpeData>(OpeData{Rational(0), 0});
        auto ey = y.J ? y.J->ope : std::optional<OpeData>(OpeData{Rational(0), 0});
        if (ex && ey) {
            J.ope = OpeData{ex->lowest_weight + ey->lowest_weight, ex->leading_order + ey->leading_order};
        }
        if (!J.order) {
            std::int64_t t = 0;
            if (x.J && x.J->truncation) t = std::max(t, *x.J->truncation);
            if (y.J && y.J->truncation) t = std::max(t, *y.J->truncation);
            if (t > 0) J.truncation = t;
        }
        for (const auto& lx : a.labels)
            for (const auto& ly : b.labels) {
                auto ix = x.act(lx.name);
                auto iy = y.act(ly.name);
                if (ix && iy) J.action[tensor_name(lx.name, ly.name)] = tensor_name(*ix, *iy);
            }
        m.currents.push_back(std::move(J));
    }

    auto add_module = [&](const std::string& ma, const std::string& mb, const Rational& coset,
                          const Attestations& att) {
        IndecomposableModule P;
        P.name = tensor_name(ma, mb);
        P.weight_coset = coset;
        P.attested = att;
        for (const auto& [x, y] : pairs) {
            auto ix = act_on_module(x, ma);
            auto iy = act_on_module(y, mb);
            if (ix && iy) P.images[tensor_name(x.name(), y.name())] = tensor_name(*ix, *iy);
        }
        LoewyDiagram d = product_diagram(diagram_of(a, ma), diagram_of(b, mb));
        if (!d.nodes.empty()) P.loewy = std::move(d);
        m.indecomposables.push_back(std::move(P));
    };
    for (const auto& P : a.indecomposables)
        for (const auto& y : b.labels) add_module(P.name, y.name, P.weight_coset + y.weight, P.attested);
    for (const auto& x : a.labels)
        for (const auto& Q : b.indecomposables) add_module(x.name, Q.name, x.weight + Q.weight_coset, Q.attested);
    for (const auto& P : a.indecomposables)
        for (const auto& Q : b.indecomposables) {
            add_module(P.name, Q.name, P.weight_coset + Q.weight_coset, meet(P.attested, Q.attested));
        }
    return m;
}

// ---------------------------------------------------------------- families

namespace {

void keep_known(std::set<std::string>& s, const FusionModel& m, bool simple) {
    for (auto it = s.begin(); it != s.end();) {
        const bool known = simple ? m.is_simple(*it) : m.find_indecomposable(*it) != nullptr;
        it = known ? std::next(it) : s.erase(it);
    }
}

bool even(int x) { return x % 2 == 0; }

}  // namespace

FamilySetup family_A(int p) {
    require(p >= 3, "family A needs p >= 3 (level p-2 >= 1), got " + std::to_string(p));
    FamilySetup f;
    f.family = "A(" + std::to_string(p) + ")";
    f.model = tensor_model(triplet(p), affine_sl2(p - 2));
    f.model.name = f.family;
    f.current = tensor_name(triplet_label(1, false), affine_label(p - 2, p - 2));
    const int k = p - 2;
    f.printed.parity = even(p) ? ParityClass::IntegerGradedSVOA_WrongStatistics : ParityClass::IntegerGradedVOA;
    f.printed.current_weight = Rational(p - 1);
    std::set<std::string> I, P;
    for (int s = 1; s <= p; ++s)
        for (int t = 0; t <= k; ++t) {
            if (even(s - t - p)) continue;  // s - t not congruent to p
            I.insert(tensor_name(triplet_label(s, true), affine_label(k, t)));
            I.insert(tensor_name(triplet_label(s, false), affine_label(k, k - t)));
            P.insert(tensor_name(triplet_projective(s, true), affine_label(k, t)));
            P.insert(tensor_name(triplet_projective(s, false), affine_label(k, k - t)));
        }
    keep_known(P, f.model, false);
    f.printed.simple_lifts = I;
    f.printed.indecomposable_lifts = P;
    return f;
}

FamilySetup family_B(int p) {
    require(p >= 4 && p % 3 != 0, "family B needs p >= 4 coprime to 3, got " + std::to_string(p));
    FamilySetup f;
    f.family = "B(" + std::to_string(p) + ")";
    f.model = tensor_model(triplet(p), virasoro_minimal(3, p));
    f.model.name = f.family;
    f.current = tensor_name(triplet_label(1, false), virasoro_label(p - 1));
    f.printed.parity = ParityClass::IntegerGradedSVOA_WrongStatistics;
    f.printed.current_weight = Rational(p - 1);
    std::set<std::string> I, P;
    for (int s = 1; s <= p; ++s)
        for (int t = 1; t <= p - 1; ++t) {
            if (!even(s - t - p)) continue;
            I.insert(tensor_name(triplet_label(s, true), virasoro_label(t)));
            I.insert(tensor_name(triplet_label(s, false), virasoro_label(p - t)));
            P.insert(tensor_name(triplet_projective(s, true), virasoro_label(t)));
            P.insert(tensor_name(triplet_projective(s, false), virasoro_label(p - t)));
        }
    keep_known(P, f.model, false);
    f.printed.simple_lifts = I;
    f.printed.indecomposable_lifts = P;
    return f;
}

FamilySetup family_C(int p) {
    require(p >= 2, "family C needs p >= 2, got " + std::to_string(p));
    FamilySetup f;
    f.family = "C(" + std::to_string(p) + ")";
    FusionModel w = triplet(p);
    f.model = tensor_model(w, w);
    f.model.name = f.family;
    f.current = tensor_name(triplet_label(1, false), triplet_label(1, false));
    f.printed.parity = even(p) ? ParityClass::IntegerGradedVOA : ParityClass::VOSA;
    f.printed.current_weight = Rational(3 * p - 2, 2);
    auto X = [](int s, bool e) { return triplet_label(s, e); };
    auto Pr = [](int s, bool e) { return triplet_projective(s, e); };
    std::set<std::string> I, P;
    for (int s = 1; s <= p; ++s)
        for (int t = 1; t <= p; ++t) {
            if (even(s + t - p)) {
                I.insert(tensor_name(X(s, true), X(t, true)));
                I.insert(tensor_name(X(s, false), X(t, false)));
                // the printed list repeats P_s^+ x X_t^+; read the second copy as X_s^+ x P_t^+
                for (auto [l, r] : {std::pair{Pr(s, true), X(t, true)}, {X(s, true), Pr(t, true)},
                                    {Pr(s, true), Pr(t, true)}, {X(s, false), Pr(t, false)},
                                    {Pr(s, false), X(t, false)}, {Pr(s, false), Pr(t, false)}}) {
                    P.insert(tensor_name(l, r));
                }
            }
            if (even(s - t)) {
                I.insert(tensor_name(X(s, true), X(t, false)));
                I.insert(tensor_name(X(s, false), X(t, true)));
                for (auto [l, r] : {std::pair{Pr(s, true), X(t, false)}, {X(s, true), Pr(t, false)},
                                    {Pr(s, true), Pr(t, false)}, {X(s, false), Pr(t, true)},
                                    {Pr(s, false), X(t, true)}, {Pr(s, false), Pr(t, true)}}) {
                    P.insert(tensor_name(l, r));
                }
            }
        }
    keep_known(P, f.model, false);
    f.printed.simple_lifts = I;
    f.printed.indecomposable_lifts = P;
    f.notes.push_back("printed P list repeats P_s^+ x X_t^+ (and P_s^+ x X_t^-); the repeats are read as "
                      "X_s^+ x P_t^+ (and X_s^+ x P_t^-)");
    return f;
}

FamilySetup osp_level1() {
    FamilySetup f;
    f.family = "osp(1|2)_1";
    f.model = tensor_model(affine_sl2(1), virasoro_minimal(3, 5));
    f.model.name = f.family;
    f.current = tensor_name(affine_label(1, 1), virasoro_label(4));
    f.printed.current_weight = Rational(1);
    f.printed.current_qdim = Phase::from_sign(-1);
    const std::string M1 = tensor_name(affine_label(1, 0), virasoro_label(1));
    const std::string M2 = tensor_name(affine_label(1, 0), virasoro_label(3));
    const std::string M3 = tensor_name(affine_label(1, 1), virasoro_label(2));
    const std::string M4 = tensor_name(affine_label(1, 1), virasoro_label(4));
    f.printed.simple_lifts = std::set<std::string>{M1, M2, M3, M4};
    f.printed.lift_classes = {{M1, M4}, {M2, M3}};
    return f;
}

FamilySetup n4_c_minus3() {
    FamilySetup f;
    f.family = "N4(c=-3)";
    f.model = tensor_model(triplet(2), betagamma_fixture());
    f.model.name = f.family;
    f.current = tensor_name(triplet_label(1, false), "S-");
    f.printed.parity = ParityClass::VOSA;
    f.printed.current_weight = Rational(3, 2);
    return f;
}

FamilySetup walgebra_candidate(int r) {
    require(r >= 2, "walgebra needs r >= 2, got " + std::to_string(r));
    require(r <= 30, "walgebra: r > 30 is not supported");
    FamilySetup f;
    f.family = "W(r=" + std::to_string(r) + ")";
    const int v = 2 + r;
    if (std::gcd(3, v) != 1) {
        f.notes.push_back("3 and " + std::to_string(v) +
                          " are not coprime: Vir(3," + std::to_string(v) +
                          ") is used as the formal phi(1,s) ladder of the weight formula");
    }
    f.model = tensor_model(virasoro_impl(3, v), lattice_rank1(r));
    f.model.name = f.family;
    f.current = tensor_name(virasoro_label(v - 1), "V(" + std::to_string(r) + ")");
    f.printed.is_voa = true;
    f.printed.current_weight = Rational(r, 2);
    f.printed.current_qdim = sign_phase(r);
    return f;
}

// ---------------------------------------------------------------- comparison

FamilyComparison compare_family(const FamilySetup& f) {
    FamilyComparison c;
    c.family = f.family;
    c.current = f.current;
    c.printed = f.printed;
    const FusionModel& m = f.model;
    const SimpleCurrent& J = m.current(f.current);
    c.extension = build_extension(m, f.current);

    for (const auto& l : m.labels) {
        if (lifts(m, J, l.name).lifts) c.derived_simple.push_back(l.name);
    }
    for (const auto& P : m.indecomposables) {
        LiftDecision d = lifts(m, J, P.name);
        if (d.lifts) c.derived_indecomposable.push_back(P.name);
        if (d.flagged) c.flagged.push_back(P.name);
    }
    c.vacuum_lifts = std::find(c.derived_simple.begin(), c.derived_simple.end(), m.vacuum) !=
                     c.derived_simple.end();

    std::map<std::string, std::size_t> class_of;
    for (const auto& x : c.derived_simple) {
        const std::string key = induce(m, J, x).iso_key;
        auto [it, fresh] = class_of.emplace(key, c.derived_classes.size());
        if (fresh) c.derived_classes.emplace_back();
        c.derived_classes[it->second].push_back(x);
    }

    auto& div = c.divergences;
    const auto& pr = f.printed;
    const std::string derived_parity = c.extension.parity ? to_string(*c.extension.parity) : "undetermined";
    if (pr.parity && (!c.extension.parity || *c.extension.parity != *pr.parity)) {
        div.push_back("parity: printed " + to_string(*pr.parity) + ", derived " + derived_parity);
    }
    if (pr.is_voa && (!c.extension.parity || is_voa(*c.extension.parity) != *pr.is_voa)) {
        div.push_back(std::string("parity: printed ") + (*pr.is_voa ? "a VOA" : "a super VOA") +
                      ", derived " + derived_parity);
    }
    if (pr.current_weight && *pr.current_weight != J.weight) {
        div.push_back("current weight: printed " + pr.current_weight->to_string() + ", derived " +
                      J.weight.to_string());
    }
    if (pr.current_qdim && (!c.extension.qdim_J || *c.extension.qdim_J != *pr.current_qdim)) {
        div.push_back("current qdim: printed " + pr.current_qdim->to_string() + ", derived " +
                      (c.extension.qdim_J ? c.extension.qdim_J->to_string() : "unknown"));
    }
    auto compare_sets = [&](const std::vector<std::string>& derived,
                            const std::optional<std::set<std::string>>& printed, const std::string& what,
                            const std::vector<std::string>& universe) {
        if (!printed) return;
        std::set<std::string> d(derived.begin(), derived.end());
        for (const auto& x : universe) {
            const bool in_d = d.count(x) > 0, in_p = printed->count(x) > 0;
            if (in_d && !in_p) div.push_back(what + " lifts but is not printed: " + x);
            if (!in_d && in_p) div.push_back(what + " is printed but does not lift: " + x);
        }
        for (const auto& x : *printed) {
            if (std::find(universe.begin(), universe.end(), x) == universe.end()) {
                div.push_back(what + " is printed but unknown to the model: " + x);
            }
        }
    };
    std::vector<std::string> simples, indecs;
    for (const auto& l : m.labels) simples.push_back(l.name);
    for (const auto& P : m.indecomposables) indecs.push_back(P.name);
    compare_sets(c.derived_simple, pr.simple_lifts, "simple", simples);
    compare_sets(c.derived_indecomposable, pr.indecomposable_lifts, "indecomposable", indecs);
    if (!pr.lift_classes.empty()) {
        auto normalize = [](std::vector<std::vector<std::string>> cls) {
            for (auto& x : cls) std::sort(x.begin(), x.end());
            std::sort(cls.begin(), cls.end());
            return cls;
        };
        if (normalize(pr.lift_classes) != normalize(c.derived_classes)) {
            div.push_back("isomorphism classes of lifts differ from the printed pairing");
        }
    }
    return c;
}

FigureFixture figure_cp_fixture(int p, int s, int t, bool plus) {
    require(p >= 2 && s >= 1 && s <= p - 1 && t >= 1 && t <= p - 1,
            "figure fixture needs 1 <= s, t <= p-1");
    const std::string A = triplet_label(s, plus), B = triplet_label(p - s, !plus);
    const std::string C = triplet_label(t, plus), D = triplet_label(p - t, !plus);
    FigureFixture fx;
    fx.ambient = tensor_name(triplet_projective(s, plus), triplet_projective(t, plus));
    auto& d = fx.diagram;
    // 0,2: B x D top and bottom; 1,3: A x C top and bottom; 4,5: A x D; 6,7: B x C
    d.nodes = {{0, tensor_name(B, D)}, {1, tensor_name(A, C)}, {2, tensor_name(B, D)},
               {3, tensor_name(A, C)}, {4, tensor_name(A, D)}, {5, tensor_name(A, D)},
               {6, tensor_name(B, C)}, {7, tensor_name(B, C)}};
    d.edges = {// left tensorand
               {0, 4}, {4, 2}, {0, 5}, {5, 2}, {1, 6}, {6, 3}, {1, 7}, {7, 3},
               // right tensorand
               {0, 7}, {6, 2}, {1, 5}, {5, 3}, {0, 6}, {1, 4}, {4, 3}, {7, 2}};
    return fx;
}

// ---------------------------------------------------------------- registry

const std::vector<BuiltinInfo>& builtin_models() {
    static const std::vector<BuiltinInfo> list = {
        {"triplet", "--p (>= 2)", "triplet algebra W(p) with current X1-"},
        {"virasoro", "--u --v (coprime, >= 3)", "Virasoro minimal model Vir(u,v)"},
        {"affine_sl2", "--k (>= 1)", "affine sl2 at positive integer level k"},
        {"lattice", "--p (>= 1)", "rank one lattice VOA V_{sqrt(2p)Z}"},
        {"betagamma", "", "affine sl2 at level -1/2, vacuum and current sectors"},
        {"trivial", "", "one-label unit model"},
        {"A", "--p (>= 3)", "W(p) x L_{p-2}(sl2)"},
        {"B", "--p (>= 4, coprime to 3)", "W(p) x Vir(3,p)"},
        {"C", "--p (>= 2)", "W(p) x W(p)"},
        {"osp", "", "L_1(sl2) x Vir(3,5)"},
        {"n4", "", "W(2) x L_{-1/2}(sl2)"},
        {"walgebra", "--r (>= 2)", "Vir(3,2+r) x V_{sqrt(2r)Z}"},
    };
    return list;
}

namespace {

int need(const std::optional<int>& v, const char* flag, const std::string& name) {
    if (!v) throw InputError("model '" + name + "' needs " + flag);
    return *v;
}

std::string builtin_list() {
    std::string s;
    for (const auto& b : builtin_models()) s += (s.empty() ? "" : ", ") + b.name;
    return s;
}

}  // namespace

FamilySetup build_family(const std::string& family, const BuiltinParams& params) {
    if (family == "A") return family_A(need(params.p, "--p", family));
    if (family == "B") return family_B(need(params.p, "--p", family));
    if (family == "C") return family_C(need(params.p, "--p", family));
    if (family == "osp") return osp_level1();
    if (family == "n4") return n4_c_minus3();
    if (family == "walgebra") return walgebra_candidate(need(params.r, "--r", family));
    throw InputError("unknown family '" + family + "'; available: A, B, C, osp, n4, walgebra");
}

FusionModel build_builtin(const std::string& name, const BuiltinParams& params) {
    if (name == "triplet") return triplet(need(params.p, "--p", name));
    if (name == "virasoro") return virasoro_minimal(need(params.u, "--u", name), need(params.v, "--v", name));
    if (name == "affine_sl2") return affine_sl2(need(params.k, "--k", name));
    if (name == "lattice") return lattice_rank1(need(params.p, "--p", name));
    if (name == "betagamma") return betagamma_fixture();
    if (name == "trivial") return trivial_model();
    for (const char* fam : {"A", "B", "C", "osp", "n4", "walgebra"}) {
        if (name == fam) return build_family(name, params).model;
    }
    throw InputError("unknown model '" + name + "'; built-ins: " + builtin_list());
}

}  // namespace scext
