#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Values are kept in canonical form: gcd(|num|, den) = 1 and den >= 1, so
 * structural equality is numeric equality. Zero is 0/1.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace scext {

using Integer = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(implicit)
    Rational(Integer n, Integer d);

    /// Parses "a/b", "a" or "-a/b". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_half_integer() const { return den_ == 1 || den_ == 2; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    /// Largest integer not exceeding the value.
    Integer floor() const;
    /// Representative of the value modulo 1 in [0, 1).
    Rational fractional_part() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "num/den", or just "num" when the denominator is one.
    std::string to_string() const;

private:
    void normalize();

    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace scext
