#pragma once

/**
 * @file extension.hpp
 * @brief Algebraic type of a simple current extension V_e = (+)_{j in G} J^j.
 *
 * The type is decided by two signs: the twist theta_J = e^{2 pi i h_J} and the
 * self-braiding c_{J,J}. The self-braiding comes from one of three routes, in
 * order of precedence: a value supplied with the current, the spin-statistics
 * relation c_{J,J} qdim(J) = theta_J, or the leading order of the J-J OPE.
 */

#include "scext/fusion_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scext {

enum class ParityClass {
    IntegerGradedVOA,
    HalfIntegerGradedVOA_WrongStatistics,
    VOSA,
    IntegerGradedSVOA_WrongStatistics,
};

std::string to_string(ParityClass p);
/// Inverse of to_string; throws InputError.
ParityClass parity_from_string(const std::string& s);
/// Commutative (c = +1) rather than super-commutative.
bool is_voa(ParityClass p);

/// (+1,+1) VOA, (-1,+1) half-integer graded VOA, (-1,-1) VOSA,
/// (+1,-1) integer graded SVOA. Throws std::domain_error off {+1,-1}.
ParityClass classify_extension(int theta_sign, int c_sign);

struct SignPatternResult {
    bool ok = true;
    /// First offending power k when !ok.
    std::optional<std::size_t> offending;
    std::string reason;
    /// Remarks on wrap-around for odd or tiny orders.
    std::vector<std::string> notes;
};

/// Weights h_{J^k}, k = 0..N-1 must lie in Z/2 and theta_{J^{k+2}} must
/// have the sign of theta_{J^k}. With `cyclic` the indices wrap mod N;
/// otherwise the list is a prefix of an infinite orbit and only pairs inside
/// it are compared.
SignPatternResult twist_sign_pattern(const std::vector<Rational>& weights, bool cyclic = true);

/// c_{J,J} = e^{2 pi i h_J} qdim(J)^{-1}.
Phase braiding_from_spin_statistics(const Rational& h_J, const Phase& qdim_J);

struct OpeRoute {
    Phase qdim;
    Phase braiding;
};

/// qdim = (-1)^N e^{-4 pi i d}, c = (-1)^N e^{-2 pi i d}.
OpeRoute qdim_from_ope_order(const Rational& d, std::int64_t leading_order);

/// c^2 e^{4 pi i h_J} = 1.
bool balancing_check(const Rational& h_J, const Phase& c);

enum class BraidingRoute { UserSupplied, SpinStatistics, OpeOrder, Undetermined };
std::string to_string(BraidingRoute r);

struct SectorInfo {
    std::string label;
    Rational weight;
    /// Z2 parity of the sector in the extension (0 even, 1 odd).
    int parity = 0;
};

struct ExtensionReport {
    std::string current;
    /// "Z_N" or "Z".
    std::string grading_group;
    std::vector<SectorInfo> sectors;
    std::vector<std::string> even_part;
    bool sectors_truncated = false;
    std::optional<int> theta_sign;
    std::optional<Phase> braiding_c;
    std::optional<Phase> qdim_J;
    BraidingRoute route = BraidingRoute::Undetermined;
    std::optional<ParityClass> parity;
    /// Mathematical inconsistencies in the supplied data.
    std::vector<std::string> violations;
    std::vector<std::string> diagnostics;

    bool determined() const { return parity.has_value(); }
};

/// Full report for the extension of `m` by current `current_name`.
/// `bound` truncates the sector list of an infinite order current.
/// Throws InputError for unknown names or unusable orbits; failed
/// mathematical checks end up in `violations` with parity left unset.
ExtensionReport build_extension(const FusionModel& m, const std::string& current_name,
                                std::optional<std::int64_t> bound = std::nullopt);

}  // namespace scext
