#pragma once

/**
 * @file library.hpp
 * @brief Built-in models: triplet, Virasoro, affine sl2 and lattice building
 * blocks, their tensor products, and the composite families.
 *
 * Label names: triplet "X1+", "X2-", indecomposables "P1+"; Virasoro
 * "phi(1,s)"; affine sl2 "L(k-t,t)"; lattice "V(j)"; the k = -1/2 fixture
 * "S+" (vacuum) and "S-". Tensor products join names with '*'.
 */

#include "scext/extension.hpp"
#include "scext/fusion_model.hpp"
#include "scext/lifting.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scext {

FusionModel triplet(int p);
/// Vir(u,v), u,v >= 3 coprime. The full phi(1,s) ladder is built for u = 3;
/// otherwise only the vacuum and the current J_{u,v} = phi(1,v-1).
FusionModel virasoro_minimal(int u, int v);
FusionModel affine_sl2(int k);
/// V_{sqrt(2p) Z}: labels V(j), j mod 2p, all of them simple currents.
FusionModel lattice_rank1(int p);
/// L_{-1/2}(sl2) sector data: vacuum S+ and the current S- of weight 1/2.
FusionModel betagamma_fixture();
/// One label, no currents; a unit for tensor_model.
FusionModel trivial_model();

/// Pairs of labels, weights add, qdims multiply. Currents are all pairs of
/// currents or identities except (id, id); indecomposables are P x b, a x Q
/// and P x Q with product Loewy diagrams.
FusionModel tensor_model(const FusionModel& a, const FusionModel& b);

std::string triplet_label(int s, bool plus);
std::string triplet_projective(int s, bool plus);
std::string affine_label(int k, int t);
std::string virasoro_label(int s);
std::string tensor_name(const std::string& a, const std::string& b);

/// Weight formulas, as pure functions of the parameters.
Rational triplet_weight(int p, int s, bool plus);
Rational affine_weight(int k, int t);
Rational virasoro_weight(int u, int v, int s);
/// Leading order N of the X1- self-OPE: -2 (3p-2)/4 + N = p/2.
std::int64_t triplet_current_ope_order(int p);

/// What the text states about a family, kept verbatim for comparison.
struct PrintedExpectations {
    std::optional<ParityClass> parity;
    /// Only "some VOA" is claimed, without the grading.
    std::optional<bool> is_voa;
    std::optional<std::set<std::string>> simple_lifts;
    std::optional<std::set<std::string>> indecomposable_lifts;
    /// Printed isomorphism classes among the lifts.
    std::vector<std::vector<std::string>> lift_classes;
    std::optional<Rational> current_weight;
    std::optional<Phase> current_qdim;
};

struct FamilySetup {
    std::string family;
    FusionModel model;
    std::string current;
    PrintedExpectations printed;
    std::vector<std::string> notes;
};

FamilySetup family_A(int p);
FamilySetup family_B(int p);
FamilySetup family_C(int p);
FamilySetup osp_level1();
FamilySetup n4_c_minus3();
FamilySetup walgebra_candidate(int r);

struct FamilyComparison {
    std::string family;
    std::string current;
    ExtensionReport extension;
    std::vector<std::string> derived_simple;
    std::vector<std::string> derived_indecomposable;
    /// Lifting simples grouped by the isomorphism class of their lift.
    std::vector<std::vector<std::string>> derived_classes;
    bool vacuum_lifts = false;
    PrintedExpectations printed;
    std::vector<std::string> divergences;
    /// Flagged lift decisions (unattested hypotheses).
    std::vector<std::string> flagged;
};

/// Sweeps every simple and indecomposable through the lifting criterion and
/// compares with the printed data.
FamilyComparison compare_family(const FamilySetup& f);

/// The 8-node W(p) x W(p) diagram with A = X_s^e, B = X_{p-s}^{-e},
/// C = X_t^e, D = X_{p-t}^{-e}, inside the ambient P_s^e x P_t^e.
struct FigureFixture {
    std::string ambient;
    LoewyDiagram diagram;
};
FigureFixture figure_cp_fixture(int p, int s, int t, bool plus = true);

struct BuiltinParams {
    std::optional<int> p, u, v, k, r;
};

struct BuiltinInfo {
    std::string name;
    std::string parameters;
    std::string description;
};

const std::vector<BuiltinInfo>& builtin_models();
/// Throws InputError for unknown names (listing the built-ins) or missing
/// and out-of-range parameters.
FusionModel build_builtin(const std::string& name, const BuiltinParams& params);
FamilySetup build_family(const std::string& family, const BuiltinParams& params);

}  // namespace scext
