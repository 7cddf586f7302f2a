// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any
// failure.

#include "scext/cocycle.hpp"
#include "scext/extension.hpp"
#include "scext/library.hpp"
#include "scext/lifting.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace scext;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Collects the first few failure messages.
struct Tally {
    bool ok = true;
    std::ostringstream notes;
    int shown = 0;
    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (shown++ < 3) notes << (shown > 1 ? "; " : "") << what;
    }
    Outcome done(const std::string& summary) {
        return {ok, ok ? summary : notes.str()};
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Closed-form weights for W(p), L_k(sl2) and Vir(3,v).
Outcome weights() {
    Tally t;
    int n = 0;
    for (int p : {2, 3, 4, 5}) {
        FusionModel w = triplet(p);
        for (int s = 1; s <= p; ++s)
            for (bool plus : {true, false}) {
                int a = plus ? p - s : 2 * p - s;
                Rational want(a * a - (p - 1) * (p - 1), 4 * p);
                t.expect(w.weight(triplet_label(s, plus)) == want, "W(" + std::to_string(p) + ") " + triplet_label(s, plus));
                ++n;
            }
    }
    for (int k : {1, 2, 3}) {
        FusionModel a = affine_sl2(k);
        for (int u = 0; u <= k; ++u) {
            t.expect(a.weight(affine_label(k, u)) == Rational(u * (u + 2), 4 * (k + 2)), "L_" + std::to_string(k) + " t=" + std::to_string(u));
            ++n;
        }
    }
    for (int v : {4, 5, 7}) {
        FusionModel m = virasoro_minimal(3, v);
        for (int s = 1; s < v; ++s) {
            t.expect(m.weight(virasoro_label(s)) == Rational((v - 3 * s) * (v - 3 * s) - (v - 3) * (v - 3), 12 * v),
                     "Vir(3," + std::to_string(v) + ") s=" + std::to_string(s));
            ++n;
        }
    }
    t.expect(triplet(2).weight("X2+") == Rational(-1, 8), "h(X2+) at p=2");
    t.expect(affine_sl2(1).weight(affine_label(1, 1)) == Rational(1, 4), "h(t=1) at k=1");
    t.expect(virasoro_minimal(3, 5).weight(virasoro_label(4)) == Rational(3, 4), "h(phi(1,4)) in Vir(3,5)");
    return t.done(std::to_string(n) + " weights exact");
}

// 2. qdim(X1-) = -(-1)^p from the leading OPE order.
Outcome triplet_qdim() {
    Tally t;
    for (int p = 2; p <= 10; ++p) {
        Rational d(3 * p - 2, 4);
        Rational N = Rational(p, 2) + Rational(2) * d;
        t.expect(N.is_integer(), "N not integral at p=" + std::to_string(p));
        auto r = qdim_from_ope_order(d, static_cast<std::int64_t>(N.numerator()));
        t.expect(r.qdim == Phase::from_sign(p % 2 == 0 ? -1 : 1), "qdim at p=" + std::to_string(p));
        t.expect(r.qdim == *triplet(p).current("X1-").qdim, "library qdim at p=" + std::to_string(p));
    }
    return t.done("p = 2..10");
}

std::optional<ParityClass> parity_of(const FamilySetup& f) { return build_extension(f.model, f.current).parity; }

// 3. Parity classes.
Outcome parities() {
    Tally t;
    auto want = [&](const FamilySetup& f, ParityClass p) {
        auto got = parity_of(f);
        t.expect(got && *got == p, f.family + ": " + (got ? to_string(*got) : "undetermined"));
    };
    for (int p = 3; p <= 9; ++p)
        want(family_A(p), p % 2 ? ParityClass::IntegerGradedVOA : ParityClass::IntegerGradedSVOA_WrongStatistics);
    for (int p = 4; p <= 11; ++p)
        if (p % 3 != 0) want(family_B(p), ParityClass::IntegerGradedSVOA_WrongStatistics);
    for (int p = 2; p <= 9; ++p) want(family_C(p), p % 2 ? ParityClass::VOSA : ParityClass::IntegerGradedVOA);
    auto sf = build_extension(triplet(2), "X1-").parity;
    t.expect(sf && *sf == ParityClass::IntegerGradedSVOA_WrongStatistics, "symplectic fermions");
    for (int r = 2; r <= 8; ++r) {
        auto w = walgebra_candidate(r);
        const auto& J = w.model.current(w.current);
        auto p = parity_of(w);
        t.expect(p && is_voa(*p), w.family + " is not a VOA");
        t.expect(J.weight == Rational(r, 2), w.family + " weight");
        t.expect(J.qdim && *J.qdim == Phase::from_sign(r % 2 ? -1 : 1), w.family + " qdim");
    }
    return t.done("A(3..9), B(4..11), C(2..9), W(2), walgebra(2..8)");
}

// 4. osp(1|2) at level 1.
Outcome osp() {
    Tally t;
    auto f = osp_level1();
    auto c = compare_family(f);
    t.expect(f.model.labels.size() == 8, "8 simple products");
    std::set<std::string> derived(c.derived_simple.begin(), c.derived_simple.end());
    t.expect(derived == *f.printed.simple_lifts, "lifting set differs");
    const auto& J = f.model.current(f.current);
    std::vector<std::vector<std::string>> classes;
    for (const auto& x : c.derived_simple) {
        bool placed = false;
        for (auto& cls : classes)
            if (identify_lifts(f.model, J, cls.front(), x)) {
                cls.push_back(x);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({x});
    }
    auto norm = [](std::vector<std::vector<std::string>> v) {
        for (auto& x : v) std::sort(x.begin(), x.end());
        std::sort(v.begin(), v.end());
        return v;
    };
    t.expect(classes.size() == 2, std::to_string(classes.size()) + " classes");
    t.expect(norm(classes) == norm(f.printed.lift_classes), "pairing differs from {M1,M4}, {M2,M3}");
    return t.done("4 of 8 lift, classes {M1,M4} {M2,M3}");
}

// 5. Derived versus printed lift lists.
Outcome family_lists() {
    Tally t;
    std::vector<FamilySetup> even = {family_A(4), family_A(6), family_B(4), family_C(4), family_C(6)};
    for (const auto& f : even) {
        auto c = compare_family(f);
        t.expect(c.divergences.empty(), f.family + ": " + (c.divergences.empty() ? "" : c.divergences.front()));
    }
    std::vector<FamilySetup> odd = {family_A(3), family_A(5), family_B(5), family_C(3), family_C(5)};
    int flagged = 0;
    for (const auto& f : odd) {
        auto c = compare_family(f);
        t.expect(!c.divergences.empty(), f.family + " shows no divergence");
        bool vac = std::find(c.derived_simple.begin(), c.derived_simple.end(), f.model.vacuum) != c.derived_simple.end();
        t.expect(vac && c.vacuum_lifts, f.family + ": vacuum missing from derived set");
        flagged += !c.divergences.empty();
    }
    return t.done("even p agree; odd p: " + std::to_string(flagged) + "/5 flagged, vacuum lifts");
}

// 6. Z2 cocycles with values in mu_4.
Outcome cocycles_z2() {
    Tally t;
    const auto t0 = Clock::now();
    auto cs = enumerate(FiniteAbelianGroup::cyclic(2), 4);
    std::set<int> omegas;
    for (const auto& c : cs) {
        omegas.insert(c.omega(1, 1));
        t.expect(verify(c).ok(), "enumerated cocycle fails verify");
        t.expect(key_identity_Z2(c), "F(1,1,1) != Omega(1,1)^2");
    }
    t.expect(omegas == std::set<int>{0, 1, 2, 3}, "Omega(1,1) values");
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool fresh = true;
        for (auto r : reps)
            if (coboundary_equivalent(cs[r], cs[i], 4)) fresh = false;
        if (fresh) reps.push_back(i);
    }
    t.expect(reps.size() == 4, std::to_string(reps.size()) + " classes");
    double secs = seconds_since(t0);
    t.expect(secs < 5.0, "took " + std::to_string(secs) + " s");
    std::ostringstream s;
    s << cs.size() << " cocycles, " << reps.size() << " classes";
    return t.done(s.str());
}

// 7. Monodromy theorem suite over every cocycle on Z2, Z3, Z4 with m = 8.
Outcome monodromy_suite() {
    Tally t;
    std::uint64_t total = 0, distinct = 0;
    for (int n : {2, 3, 4}) {
        auto g = FiniteAbelianGroup::cyclic(n);
        std::map<std::vector<int>, bool> seen;
        for_each_cocycle(g, 8, [&](const AbelianCocycle& c) {
            ++total;
            auto M = monodromy_table(c);
            auto [it, fresh] = seen.try_emplace(M.M, true);
            if (fresh) it->second = monodromy_theorem_suite(M).ok();
            t.expect(it->second, "suite fails on Z" + std::to_string(n));
        });
        distinct += seen.size();
    }
    return t.done(std::to_string(total) + " cocycles, " + std::to_string(distinct) + " monodromy tables");
}

// 8. Random invariants over built-ins, and the 8-node C_p diagram.
Outcome invariants() {
    Tally t;
    std::mt19937 rng(8);
    std::vector<std::function<FusionModel()>> makers;
    for (int p = 2; p <= 8; ++p) makers.push_back([p] { return triplet(p); });
    for (int k = 1; k <= 6; ++k) makers.push_back([k] { return affine_sl2(k); });
    for (int p = 1; p <= 5; ++p) makers.push_back([p] { return lattice_rank1(p); });
    for (int v : {4, 5, 7, 8}) makers.push_back([v] { return virasoro_minimal(3, v); });
    makers.push_back([] { return betagamma_fixture(); });
    std::vector<FusionModel> models;
    for (auto& mk : makers) models.push_back(mk());
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

    int cases = 0, closure = 0, self_dual = 0;
    for (; cases < 2500; ++cases) {
        const FusionModel& m = models[pick(models.size())];
        const SimpleCurrent& J = m.currents[pick(m.currents.size())];
        const SimpleLabel& x = m.labels[pick(m.labels.size())];
        if (J.qdim) {
            Phase c = braiding_from_spin_statistics(J.weight, *J.qdim);
            // self-dual: c^2 = e^{-4 pi i h}; otherwise c^2 = theta_{J^2} / theta_J^2
            const Rational& h2 = m.weight(J.action.at(J.name));
            if (*J.order == 2) {
                t.expect(c * c == phase_from_weight(Rational(-2) * J.weight), "balancing, " + m.name);
                ++self_dual;
            } else {
                t.expect(c * c == phase_from_weight(h2 - Rational(2) * J.weight), "c^2 = M_{J,J}, " + m.name);
            }
            t.expect(c * *J.qdim == phase_from_weight(J.weight), "spin-statistics, " + m.name);
        }
        // J-closure presupposes M_{J,J} = 1
        if (monodromy_phase(m, J, J.name).is_identity()) {
            t.expect(lifts(m, J, x.name).lifts == lifts(m, J, J.action.at(x.name)).lifts, "J-closure, " + m.name + " " + x.name);
            ++closure;
        }
        t.expect(order_consistency(m, J, x.name), "order consistency, " + m.name + " " + x.name);

        const FusionModel& b = models[pick(models.size())];
        if (m.labels.size() * b.labels.size() <= 200) {
            FusionModel prod = tensor_model(m, b);
            const SimpleLabel& y = b.labels[pick(b.labels.size())];
            const auto& xy = prod.label(tensor_name(x.name, y.name));
            if (x.qdim && y.qdim) t.expect(xy.qdim && *xy.qdim == *x.qdim * *y.qdim, "qdim multiplicativity");
        }
    }

    int diagrams = 0;
    for (int p = 2; p <= 5; ++p) {
        auto C = family_C(p);
        const auto& J = C.model.current(C.current);
        for (int s = 1; s < p; ++s)
            for (int u = 1; u < p; ++u) {
                auto fx = figure_cp_fixture(p, s, u);
                if (!lifts(C.model, J, fx.ambient).lifts) continue;
                t.expect(fx.diagram.nodes.size() == 8 && fx.diagram.edges.size() == 16, "fixture shape");
                auto il = induce_loewy(C.model, J, fx.ambient, fx.diagram);
                t.expect(il.diagram.nodes.size() == 8 && il.diagram.edges.size() == 16 &&
                             il.diagram.edges == fx.diagram.edges,
                         "induced C_p diagram changed shape");
                ++diagrams;
            }
        for (const auto& P : triplet(p).indecomposables) {
            FusionModel w = triplet(p);
            if (!lifts(w, w.current("X1-"), P.name).lifts) continue;
            auto il = induce_loewy(w, w.current("X1-"), P.name);
            t.expect(il.diagram.nodes.size() == P.loewy->nodes.size() && il.diagram.edges.size() == P.loewy->edges.size(),
                     "induced projective diagram changed shape");
            ++diagrams;
        }
    }
    t.expect(diagrams > 0, "no diagram induced");
    t.expect(self_dual >= 1000, "only " + std::to_string(self_dual) + " balancing cases");
    t.expect(closure >= 1000, "only " + std::to_string(closure) + " J-closure cases");
    return t.done(std::to_string(cases) + " random cases (" + std::to_string(closure) + " J-closure, " + std::to_string(self_dual) + " self-dual), " + std::to_string(diagrams) + " diagrams (8 nodes, 16 edges)");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion all[] = {
        {1, "golden weights", weights},
        {2, "qdim(X1-) from OPE order", triplet_qdim},
        {3, "parity classes", parities},
        {4, "osp(1|2) level 1 lifts", osp},
        {5, "family lift lists", family_lists},
        {6, "Z2 cocycles, m = 4", cocycles_z2},
        {7, "monodromy suite, Z2/Z3/Z4, m = 8", monodromy_suite},
        {8, "invariant suite", invariants},
    };
    const auto t0 = Clock::now();
    int failed = 0;
    for (const auto& c : all) {
        const auto t1 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.ok;
        std::printf("%s  %d  %-34s %-60s %.2fs\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    seconds_since(t1));
    }
    double total = seconds_since(t0);
    bool in_time = total < 10.0;
    std::printf("%s     total runtime %.2fs (limit 10s)\n", in_time ? "PASS" : "FAIL", total);
    return failed == 0 && in_time ? 0 : 1;
}
