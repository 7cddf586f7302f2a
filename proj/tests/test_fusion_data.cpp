#include <doctest.h>

#include "scext/fusion_model.hpp"
#include "scext/library.hpp"
#include "scext/model_io.hpp"

#include <algorithm>

using namespace scext;

namespace {

bool has_code(const std::vector<Violation>& v, const std::string& code) {
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.code == code; });
}

// Z2 toy: vacuum 1, current j of weight h with action swapping the two.
FusionModel toy(Rational h) {
    FusionModel m;
    m.name = "toy";
    m.vacuum = "1";
    m.labels = {{"1", Rational(0), Phase()}, {"j", h, Phase::from_sign(-1)}};
    SimpleCurrent J;
    J.name = "j";
    J.order = 2;
    J.action = {{"1", "j"}, {"j", "1"}};
    J.weight = h;
    J.qdim = Phase::from_sign(-1);
    m.currents.push_back(J);
    return m;
}

}  // namespace

TEST_SUITE("fusion_data") {

TEST_CASE("triplet(2) validates") {
    // triplet weights at p = 2, recomputed here: h_s^+ = ((2-s)^2 - 1)/8, h_s^- = ((4-s)^2 - 1)/8
    FusionModel m = triplet(2);
    CHECK(validate_model(m).empty());
    CHECK(m.weight("X1+") == Rational(0));
    CHECK(m.weight("X2+") == Rational(-1, 8));
    CHECK(m.weight("X1-") == Rational(1));
    CHECK(m.weight("X2-") == Rational(3, 8));
}

TEST_CASE("toy model validates") { CHECK(validate_model(toy(Rational(1))).empty()); }

TEST_CASE("action order mismatch") {
    FusionModel m;
    m.vacuum = "a";
    for (auto n : {"a", "b", "c", "d"}) m.labels.push_back({n, Rational(0), std::nullopt});
    SimpleCurrent J;
    J.name = "b";
    J.order = 2;
    J.action = {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}};
    m.currents.push_back(J);
    CHECK(has_code(validate_model(m), "action-order-mismatch"));
}

TEST_CASE("lambda^N = 1 violation") {
    FusionModel m = toy(Rational(1));
    m.labels.push_back({"x", Rational(0), std::nullopt});
    m.labels.push_back({"y", Rational(1, 3), std::nullopt});
    m.currents[0].action["x"] = "y";
    m.currents[0].action["y"] = "x";
    auto v = validate_model(m);
    REQUIRE(has_code(v, "lambda-order"));
    auto it = std::find_if(v.begin(), v.end(), [](const Violation& x) { return x.code == "lambda-order"; });
    CHECK(it->message.find("lambda^N = 1") != std::string::npos);
}

TEST_CASE("other violations") {
    SUBCASE("vacuum weight") {
        FusionModel m = toy(Rational(1));
        m.labels[0].weight = Rational(1);
        CHECK_FALSE(validate_model(m).empty());
    }
    SUBCASE("current weight mismatch") {
        FusionModel m = toy(Rational(1));
        m.currents[0].weight = Rational(2);
        CHECK(has_code(validate_model(m), "current-weight"));
    }
    SUBCASE("not injective") {
        FusionModel m = toy(Rational(1));
        m.currents[0].action["j"] = "j";
        CHECK(has_code(validate_model(m), "action-not-injective"));
    }
    SUBCASE("unknown label") {
        FusionModel m = toy(Rational(1));
        m.currents[0].action["j"] = "zz";
        CHECK(has_code(validate_model(m), "action-unknown-label"));
    }
    SUBCASE("vacuum image") {
        FusionModel m = toy(Rational(1));
        m.labels.push_back({"k", Rational(1), std::nullopt});
        m.currents[0].action = {{"1", "k"}, {"k", "1"}, {"j", "j"}};
        CHECK(has_code(validate_model(m), "current-vacuum-image"));
    }
    SUBCASE("loewy cycle") {
        FusionModel m = triplet(2);
        auto& P = m.indecomposables.front();
        REQUIRE(P.loewy);
        P.loewy->edges.push_back({3, 0});
        CHECK_FALSE(P.loewy->is_acyclic());
        CHECK_FALSE(validate_model(m).empty());
    }
}

TEST_CASE("detect_simple_currents") {
    SUBCASE("group ring of Z2") {
        FusionRows rows = {{{"0", "0"}, {"0"}}, {{"0", "1"}, {"1"}}, {{"1", "0"}, {"1"}}, {{"1", "1"}, {"0"}}};
        CHECK(detect_simple_currents({"0", "1"}, rows) == std::vector<std::string>{"0", "1"});
    }
    SUBCASE("Ising-like row excluded") {
        FusionRows rows = {{{"1", "1"}, {"1"}},     {{"1", "s"}, {"s"}},      {{"1", "e"}, {"e"}},
                           {{"s", "1"}, {"s"}},     {{"s", "s"}, {"1", "e"}}, {{"s", "e"}, {"s"}},
                           {{"e", "1"}, {"e"}},     {{"e", "s"}, {"s"}},      {{"e", "e"}, {"1"}}};
        CHECK(detect_simple_currents({"1", "s", "e"}, rows) == std::vector<std::string>{"1", "e"});
    }
    SUBCASE("rank-1 lattice p = 2 is Z4") {
        std::vector<std::string> labels = {"0", "1", "2", "3"};
        FusionRows rows;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) rows[{labels[a], labels[b]}] = {labels[(a + b) % 4]};
        CHECK(detect_simple_currents(labels, rows).size() == 4);
    }
    SUBCASE("missing rows") {
        FusionRows rows = {{{"0", "0"}, {"0"}}};
        CHECK_THROWS_WITH_AS(detect_simple_currents({"0", "1"}, rows), doctest::Contains("insufficient data"),
                             InputError);
    }
}

TEST_CASE("orbit") {
    FusionModel w = triplet(3);
    const auto& J = w.current("X1-");
    for (int s = 1; s <= 3; ++s) {
        auto o = orbit(w, J, triplet_label(s, true));
        CHECK(o.elements == std::vector<std::string>{triplet_label(s, true), triplet_label(s, false)});
        CHECK_FALSE(o.fixed_point);
    }
    CHECK(orbit(w, J, "X1+").elements == std::vector<std::string>{"X1+", "X1-"});
    CHECK(orbit(w, J, "P2+").elements == std::vector<std::string>{"P2+", "P2-"});

    FusionModel a = affine_sl2(2);
    const auto& K = a.currents.front();
    auto o = orbit(a, K, affine_label(2, 1));
    CHECK(o.fixed_point);
    CHECK(o.elements.size() == 1);
    CHECK_FALSE(orbit(a, K, affine_label(2, 0)).fixed_point);
    CHECK_THROWS_AS(orbit(a, K, "nope"), InputError);
}

TEST_CASE("orbit of infinite order current") {
    FusionModel m;
    m.vacuum = "V0";
    SimpleCurrent J;
    J.name = "V1";
    for (int i = -3; i <= 3; ++i) {
        std::string n = "V" + std::to_string(i);
        m.labels.push_back({n, Rational(i * i, 2), std::nullopt});
        if (i < 3) J.action[n] = "V" + std::to_string(i + 1);
    }
    J.weight = Rational(1, 2);
    m.currents.push_back(J);
    CHECK(validate_model(m).empty());
    CHECK_THROWS_WITH_AS(orbit(m, m.currents[0], "V0"), doctest::Contains("truncation"), InputError);
    auto o = orbit(m, m.currents[0], "V0", 3);
    CHECK(o.elements == std::vector<std::string>{"V0", "V1", "V2"});
    CHECK(o.truncated);
    CHECK_THROWS_WITH_AS(orbit(m, m.currents[0], "V0", 6), doctest::Contains("truncation exceeded"), InputError);

    m.currents[0].action["V3"] = "V0";
    CHECK(has_code(validate_model(m), "infinite-order-cycle"));
}

TEST_CASE("orbit lengths divide the order across built-ins") {
    for (int p = 2; p <= 12; ++p) {
        for (const FusionModel& m : {triplet(p), lattice_rank1(p), affine_sl2(p)}) {
            for (const auto& J : m.currents) {
                for (const auto& l : m.labels) {
                    auto o = orbit(m, J, l.name);
                    CHECK(*J.order % static_cast<std::int64_t>(o.elements.size()) == 0);
                }
            }
        }
    }
}

TEST_CASE("validate_model accepts built-ins") {
    for (int p = 2; p <= 12; ++p) {
        CHECK(validate_model(triplet(p)).empty());
        CHECK(validate_model(lattice_rank1(p)).empty());
    }
    for (int k = 1; k <= 10; ++k) CHECK(validate_model(affine_sl2(k)).empty());
    CHECK(validate_model(virasoro_minimal(3, 5)).empty());
    CHECK(validate_model(betagamma_fixture()).empty());
}

TEST_CASE("json round trip") {
    for (const FusionModel& m : {triplet(3), affine_sl2(2), tensor_model(triplet(2), affine_sl2(1))}) {
        auto j = to_json(m);
        FusionModel back = model_from_json(j);
        CHECK(to_json(back) == j);
        CHECK(validate_model(back).empty());
    }
    CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"({"labels": 3})")), InputError);
}

}
