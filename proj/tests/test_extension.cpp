#include <doctest.h>

#include "scext/extension.hpp"
#include "scext/library.hpp"

#include <set>

using namespace scext;

TEST_SUITE("extension") {

TEST_CASE("twist_sign_pattern") {
    CHECK(twist_sign_pattern({Rational(0), Rational(1)}).ok);
    auto bad = twist_sign_pattern({Rational(0), Rational(3, 4)});
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.offending);
    CHECK(*bad.offending == 1);
    CHECK(twist_sign_pattern({Rational(0), Rational(1, 2), Rational(0), Rational(1, 2)}).ok);
    // signs at k and k + 2 disagree
    auto flip = twist_sign_pattern({Rational(0), Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    CHECK_FALSE(flip.ok);
}

TEST_CASE("twist_sign_pattern odd order wraps") {
    // N = 3: k + 2 wraps through every residue, so all signs must agree
    CHECK(twist_sign_pattern({Rational(0), Rational(1), Rational(2)}).ok);
    CHECK_FALSE(twist_sign_pattern({Rational(0), Rational(1, 2), Rational(1, 2)}).ok);
    CHECK_FALSE(twist_sign_pattern({Rational(0), Rational(1, 2), Rational(1, 2)}, false).ok);
    CHECK(twist_sign_pattern({Rational(0), Rational(1, 2)}, false).ok);
}

TEST_CASE("braiding_from_spin_statistics") {
    CHECK(braiding_from_spin_statistics(Rational(1), Phase::from_sign(-1)) == Phase::from_sign(-1));
    CHECK(braiding_from_spin_statistics(Rational(0), Phase::from_sign(1)) == Phase::from_sign(1));
    // A_3 current: h = p - 1 = 2, qdim = -(-1)^3 * 1 = +1
    CHECK(braiding_from_spin_statistics(Rational(2), Phase::from_sign(1)) == Phase::from_sign(1));
}

TEST_CASE("qdim_from_ope_order") {
    for (int p = 2; p <= 10; ++p) {
        Rational d(3 * p - 2, 4);
        // -2d + N = p/2
        Rational N = Rational(p, 2) + Rational(2) * d;
        REQUIRE(N.is_integer());
        CHECK(N == Rational(triplet_current_ope_order(p)));
        auto r = qdim_from_ope_order(d, static_cast<std::int64_t>(N.numerator()));
        CHECK(r.qdim == Phase::from_sign(p % 2 == 0 ? -1 : 1));
        CHECK(r.braiding == r.qdim * phase_from_weight(d));
    }
    auto vac = qdim_from_ope_order(Rational(0), 0);
    CHECK(vac.qdim.is_identity());
    CHECK(vac.braiding.is_identity());
}

TEST_CASE("balancing_check") {
    CHECK(balancing_check(Rational(1), Phase::from_sign(-1)));
    CHECK(balancing_check(Rational(1, 2), Phase::from_sign(1)));
    CHECK_FALSE(balancing_check(Rational(1, 4), Phase::from_sign(1)));
    CHECK(balancing_check(Rational(1, 4), Phase(3, 4)));
}

TEST_CASE("classify_extension") {
    CHECK(classify_extension(1, -1) == ParityClass::IntegerGradedSVOA_WrongStatistics);
    CHECK(classify_extension(-1, -1) == ParityClass::VOSA);
    CHECK(classify_extension(1, 1) == ParityClass::IntegerGradedVOA);
    CHECK(classify_extension(-1, 1) == ParityClass::HalfIntegerGradedVOA_WrongStatistics);
    std::set<ParityClass> all;
    for (int t : {1, -1})
        for (int c : {1, -1}) all.insert(classify_extension(t, c));
    CHECK(all.size() == 4);
    CHECK_THROWS_AS(classify_extension(0, 1), std::domain_error);
    for (auto p : all) CHECK(parity_from_string(to_string(p)) == p);
}

TEST_CASE("build_extension triplet(2)") {
    auto r = build_extension(triplet(2), "X1-");
    CHECK(r.grading_group == "Z_2");
    REQUIRE(r.sectors.size() == 2);
    CHECK(r.sectors[0].label == "X1+");
    CHECK(r.sectors[1].label == "X1-");
    CHECK(r.sectors[1].parity == 1);
    CHECK(r.even_part == std::vector<std::string>{"X1+"});
    REQUIRE(r.parity);
    CHECK(*r.parity == ParityClass::IntegerGradedSVOA_WrongStatistics);
    CHECK(r.route == BraidingRoute::SpinStatistics);
    CHECK(r.violations.empty());
}

TEST_CASE("build_extension route precedence") {
    FusionModel m = triplet(2);
    SUBCASE("user value wins") {
        m.currents[0].braiding = Phase::from_sign(1);
        m.currents[0].qdim.reset();
        m.currents[0].ope.reset();
        for (auto& l : m.labels) l.qdim.reset();
        auto r = build_extension(m, "X1-");
        CHECK(r.route == BraidingRoute::UserSupplied);
        REQUIRE(r.parity);
        CHECK(*r.parity == ParityClass::IntegerGradedVOA);
    }
    SUBCASE("ope route without qdim") {
        m.currents[0].qdim.reset();
        for (auto& l : m.labels) l.qdim.reset();
        auto r = build_extension(m, "X1-");
        CHECK(r.route == BraidingRoute::OpeOrder);
        CHECK(*r.parity == ParityClass::IntegerGradedSVOA_WrongStatistics);
    }
    SUBCASE("user value contradicting the OPE order") {
        m.currents[0].braiding = Phase::from_sign(1);
        m.currents[0].qdim.reset();
        for (auto& l : m.labels) l.qdim.reset();
        auto r = build_extension(m, "X1-");
        CHECK(r.route == BraidingRoute::UserSupplied);
        CHECK_FALSE(r.violations.empty());
        CHECK_FALSE(r.parity);
    }
    SUBCASE("undetermined") {
        m.currents[0].qdim.reset();
        m.currents[0].ope.reset();
        for (auto& l : m.labels) l.qdim.reset();
        auto r = build_extension(m, "X1-");
        CHECK(r.route == BraidingRoute::Undetermined);
        CHECK_FALSE(r.parity);
        CHECK_FALSE(r.diagnostics.empty());
    }
}

TEST_CASE("build_extension reports inconsistent data") {
    FusionModel m = triplet(2);
    m.currents[0].braiding = Phase(1, 4);
    auto r = build_extension(m, "X1-");
    CHECK_FALSE(r.violations.empty());
    CHECK_FALSE(r.parity);
    CHECK_THROWS_AS(build_extension(m, "nope"), InputError);
}

TEST_CASE("family parities") {
    CHECK(*build_extension(family_C(4).model, family_C(4).current).parity == ParityClass::IntegerGradedVOA);
    auto B = family_B(5);
    CHECK(*build_extension(B.model, B.current).parity == ParityClass::IntegerGradedSVOA_WrongStatistics);
}

TEST_CASE("lattice extension Z4 sectors") {
    FusionModel m = lattice_rank1(2);
    auto r = build_extension(m, "V(1)");
    CHECK(r.grading_group == "Z_4");
    CHECK(r.sectors.size() == 4);
    CHECK(r.even_part == std::vector<std::string>{"V(0)", "V(2)"});
    // h_{J^k} = k^2/8 is not in Z/2 for k = 1
    CHECK_FALSE(r.violations.empty());
}

}
