#include <doctest.h>

#include "scext/extension.hpp"
#include "scext/library.hpp"
#include "scext/lifting.hpp"

#include <random>

using namespace scext;

namespace {

FusionModel random_builtin(std::mt19937& rng) {
    std::uniform_int_distribution<int> kind(0, 5), small(2, 8);
    switch (kind(rng)) {
        case 0: return triplet(small(rng));
        case 1: return affine_sl2(small(rng) - 1);
        case 2: return lattice_rank1(small(rng) - 1);
        case 3: {
            int v = small(rng) + 2;
            return virasoro_minimal(3, v % 3 == 0 ? v + 1 : v);
        }
        case 4: return family_A(small(rng) + 1).model;
        default: return family_C(std::uniform_int_distribution<int>(2, 4)(rng)).model;
    }
}

template <typename T>
const T& pick(const std::vector<T>& v, std::mt19937& rng) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("random invariants over built-ins") {
    std::mt19937 rng(20261015);
    int cases = 0, closure = 0;
    for (int round = 0; round < 60; ++round) {
        FusionModel m = random_builtin(rng);
        REQUIRE(validate_model(m).empty());
        for (int draw = 0; draw < 20; ++draw, ++cases) {
            const SimpleCurrent& J = pick(m.currents, rng);
            const SimpleLabel& x = pick(m.labels, rng);
            if (J.qdim) {
                Phase c = braiding_from_spin_statistics(J.weight, *J.qdim);
                CHECK(c * *J.qdim == phase_from_weight(J.weight));
                // c^2 = M_{J,J} = theta_{J^2} / theta_J^2; for self-dual J this is balancing
                const Rational& h2 = m.weight(J.action.at(J.name));
                CHECK(c * c == phase_from_weight(h2 - Rational(2) * J.weight));
                if (*J.order == 2) CHECK(balancing_check(J.weight, c));
            }
            // J-closure needs M_{J,J} = 1
            const std::string jx = J.action.at(x.name);
            if (monodromy_phase(m, J, J.name).is_identity()) {
                CHECK(lifts(m, J, x.name).lifts == lifts(m, J, jx).lifts);
                ++closure;
            }
            CHECK(order_consistency(m, J, x.name));
            CHECK(monodromy_phase(m, J, x.name).pow(*J.order).is_identity());
            CHECK(lifts(m, J, m.vacuum).lifts);
        }
    }
    CHECK(cases >= 1000);
    CHECK(closure >= 300);
}

TEST_CASE("qdim multiplicativity under tensor_model") {
    std::mt19937 rng(99);
    int cases = 0;
    for (int round = 0; round < 40; ++round) {
        FusionModel a = random_builtin(rng), b = random_builtin(rng);
        if (a.labels.size() * b.labels.size() > 400) continue;
        FusionModel t = tensor_model(a, b);
        for (int draw = 0; draw < 30; ++draw, ++cases) {
            const auto& x = pick(a.labels, rng);
            const auto& y = pick(b.labels, rng);
            const auto& xy = t.label(tensor_name(x.name, y.name));
            CHECK(xy.weight == x.weight + y.weight);
            if (x.qdim && y.qdim) {
                REQUIRE(xy.qdim);
                CHECK(*xy.qdim == *x.qdim * *y.qdim);
            }
        }
        for (const auto& J : t.currents) {
            if (J.qdim) CHECK((*J.qdim * J.qdim->inverse()).is_identity());
        }
    }
    CHECK(cases >= 300);
}

TEST_CASE("induce_loewy preserves counts") {
    std::mt19937 rng(3);
    int cases = 0;
    for (int p = 2; p <= 6; ++p) {
        auto C = family_C(p);
        const auto& J = C.model.current(C.current);
        for (int s = 1; s < p; ++s)
            for (int t = 1; t < p; ++t)
                for (bool plus : {true, false}) {
                    auto fx = figure_cp_fixture(p, s, t, plus);
                    if (!lifts(C.model, J, fx.ambient).lifts) {
                        CHECK_THROWS_AS(induce_loewy(C.model, J, fx.ambient, fx.diagram), InputError);
                        continue;
                    }
                    auto il = induce_loewy(C.model, J, fx.ambient, fx.diagram);
                    CHECK(il.diagram.nodes.size() == 8);
                    CHECK(il.diagram.edges.size() == 16);
                    ++cases;
                }
    }
    for (int p = 2; p <= 6; ++p) {
        FusionModel w = triplet(p);
        for (const auto& P : w.indecomposables) {
            if (!lifts(w, w.current("X1-"), P.name).lifts) continue;
            auto il = induce_loewy(w, w.current("X1-"), P.name);
            CHECK(il.diagram.nodes.size() == P.loewy->nodes.size());
            CHECK(il.diagram.edges.size() == P.loewy->edges.size());
            ++cases;
        }
    }
    CHECK(cases > 0);
}

}
