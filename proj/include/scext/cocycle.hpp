#pragma once

/**
 * @file cocycle.hpp
 * @brief Normalized abelian 3-cocycles (F, Omega) on small finite abelian groups.
 *
 * Values live in the m-th roots of unity and are stored as exponents mod m,
 * so e^{2 pi i x/m} is kept as x. Group elements are indexed 0..|G|-1 with
 * index 0 the identity; FiniteAbelianGroup converts between indices and
 * component tuples.
 */

#include "scext/phase.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace scext {

class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{1}) {}
    explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);

    static FiniteAbelianGroup cyclic(int n) { return FiniteAbelianGroup(std::vector<int>{n}); }
    /// "Z4", "Z2xZ2", "Z2 x Z3". Throws InputError.
    static FiniteAbelianGroup parse(const std::string& text);

    const std::vector<int>& cyclic_orders() const { return orders_; }
    int size() const { return size_; }
    bool is_cyclic() const { return orders_.size() == 1; }

    std::vector<int> element(int index) const;
    int index(const std::vector<int>& components) const;
    int add(int a, int b) const { return add_[a * size_ + b]; }
    int neg(int a) const { return neg_[a]; }
    /// n * a for any integer n.
    int multiple(std::int64_t n, int a) const;
    /// Order of the element.
    int order(int a) const;

    /// "1" for cyclic groups, "(1,0)" otherwise.
    std::string element_string(int index) const;
    int parse_element(const std::string& text) const;
    std::string name() const;

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.orders_ == b.orders_;
    }

private:
    std::vector<int> orders_;
    int size_ = 1;
    std::vector<int> add_;
    std::vector<int> neg_;
};

struct AbelianCocycle {
    FiniteAbelianGroup group;
    /// Values are m-th roots of unity.
    int m = 1;
    /// F(i,j,k) at (i*n + j)*n + k, exponents mod m.
    std::vector<int> F;
    /// Omega(i,j) at i*n + j, exponents mod m.
    std::vector<int> Omega;

    static AbelianCocycle trivial(const FiniteAbelianGroup& g, int m = 1);

    int n() const { return group.size(); }
    int& f(int i, int j, int k) { return F[(i * n() + j) * n() + k]; }
    int f(int i, int j, int k) const { return F[(i * n() + j) * n() + k]; }
    int& omega(int i, int j) { return Omega[i * n() + j]; }
    int omega(int i, int j) const { return Omega[i * n() + j]; }

    Phase f_phase(int i, int j, int k) const { return Phase(f(i, j, k), m); }
    Phase omega_phase(int i, int j) const { return Phase(omega(i, j), m); }

    /// Same cocycle with values read in the m'-th roots of unity; m must
    /// divide m'.
    AbelianCocycle rescaled(int m_new) const;

    friend bool operator==(const AbelianCocycle&, const AbelianCocycle&) = default;
};

struct IdentityCheck {
    std::string name;
    bool ok = true;
    /// Element indices of the first failing instance.
    std::vector<int> counterexample;
};

struct CocycleReport {
    std::vector<IdentityCheck> checks;
    bool ok() const;
};

/// Normalization, pentagon and both hexagons, exhaustively.
CocycleReport verify(const AbelianCocycle& c);

/// Number of cocycles enumerate() would return, computed without listing.
std::uint64_t count_cocycles(const FiniteAbelianGroup& g, int m);

/// Visits every cocycle with values in mu_m exactly once, in a fixed order.
/// Guard: |G| <= 4, m <= 8 (InputError otherwise).
void for_each_cocycle(const FiniteAbelianGroup& g, int m,
                      const std::function<void(const AbelianCocycle&)>& visit);

/// Materialized for_each_cocycle; additionally refuses lists longer than
/// `max_results`.
std::vector<AbelianCocycle> enumerate(const FiniteAbelianGroup& g, int m,
                                      std::uint64_t max_results = 1u << 18);

/// F(1,1,1) = Omega(1,1)^2 on Z2. Throws InputError for other groups.
bool key_identity_Z2(const AbelianCocycle& c);

struct QuadraticForm {
    /// q(i) = Omega(i,i)
    std::vector<Phase> q;
    /// B(i,j) = Omega(i,j) Omega(j,i), row major
    std::vector<Phase> B;
    /// Failed assertions (bimultiplicativity, q(i+j) = q(i)q(j)B(i,j),
    /// q(-i) = q(i)); empty for a valid cocycle.
    std::vector<std::string> violations;
};

QuadraticForm quadratic_form(const AbelianCocycle& c);

/// Scalar monodromy table M(a,b) = Omega(a,b) Omega(b,a), exponents mod m.
struct MonodromyTable {
    FiniteAbelianGroup group;
    int m = 1;
    std::vector<int> M;

    int at(int a, int b) const { return M[a * group.size() + b]; }
};

MonodromyTable monodromy_table(const AbelianCocycle& c);

struct SuiteItem {
    std::string name;
    bool ok = true;
    std::uint64_t instances = 0;
    std::vector<int> counterexample;
};

struct SuiteReport {
    std::vector<SuiteItem> items;
    bool ok() const;
};

/// Pointed-case specializations of the monodromy theorem, checked for every
/// choice of elements.
SuiteReport monodromy_theorem_suite(const MonodromyTable& t);
SuiteReport monodromy_theorem_suite(const AbelianCocycle& c);

/// F and Omega are constant on cosets of 2G in every argument.
bool pullback_check(const AbelianCocycle& c);

/// Normalized 2-cochain b: G^2 -> mu_m, exponents mod m, row major.
using Cochain = std::vector<int>;

/// F'(i,j,k) = F(i,j,k) b(j,k) b(i,j+k) / (b(i+j,k) b(i,j)),
/// Omega'(i,j) = Omega(i,j) b(i,j) / b(j,i). The result lives in mu_lcm.
AbelianCocycle apply_coboundary(const AbelianCocycle& c, const Cochain& b, int m_b);

/// Brute-force search for b with c1 * db = c2. Guard: |G| <= 3, m <= 8.
std::optional<Cochain> coboundary_equivalent(const AbelianCocycle& c1, const AbelianCocycle& c2,
                                             int m);

/// {"group", "m", "F": {"i,j,k": phase}, "Omega": {"i,j": phase}}; only
/// entries off the identity are written.
nlohmann::json to_json(const AbelianCocycle& c);
/// Inverse of to_json; "m" may be omitted and is then the lcm of the value
/// denominators. Missing entries are 1.
AbelianCocycle cocycle_from_json(const nlohmann::json& j);

}  // namespace scext
