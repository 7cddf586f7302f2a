#pragma once

// Unit-circle phases e^{2 pi i q}, stored as q reduced into [0, 1).

#include "scext/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace scext {

class Phase {
public:
    Phase() = default;
    explicit Phase(const Rational& q) : q_(q.fractional_part()) {}
    Phase(std::int64_t num, std::int64_t den) : Phase(Rational(num, den)) {}

    /// Representative in [0, 1). Accepts anything Rational::parse does.
    static Phase parse(std::string_view text);

    static Phase identity() { return Phase(); }
    /// Phase(0) for +1, Phase(1/2) for -1.
    static Phase from_sign(int sign);

    const Rational& value() const { return q_; }

    Phase operator*(const Phase& rhs) const { return Phase(q_ + rhs.q_); }
    Phase& operator*=(const Phase& rhs) { return *this = *this * rhs; }
    Phase operator/(const Phase& rhs) const { return Phase(q_ - rhs.q_); }
    Phase inverse() const { return Phase(-q_); }
    Phase pow(const Integer& n) const { return Phase(q_ * Rational(n)); }
    Phase pow(std::int64_t n) const { return Phase(q_ * Rational(n)); }

    bool is_identity() const { return q_.is_zero(); }
    bool is_sign() const { return q_.is_half_integer(); }
    /// +1 or -1. Throws std::domain_error when the phase is not a sign.
    int as_sign() const;
    /// Multiplicative order; the reduced denominator of q.
    const Integer& order() const { return q_.denominator(); }

    friend bool operator==(const Phase&, const Phase&) = default;

    std::string to_string() const { return q_.to_string(); }

private:
    Rational q_;
};

/// Twist scalar e^{2 pi i h} of a module of conformal weight h.
inline Phase phase_from_weight(const Rational& h) { return Phase(h); }

inline Phase phase_pow(const Phase& x, std::int64_t n) { return x.pow(n); }

std::ostream& operator<<(std::ostream& os, const Phase& p);

}  // namespace scext
