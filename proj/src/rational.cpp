#include "scext/rational.hpp"
#include "scext/phase.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace scext {

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
}

void Rational::normalize() {
    if (den_ == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(t, text));
    }
    Integer d = parse_integer(trim(t.substr(slash + 1)), text);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_integer(trim(t.substr(0, slash)), text), d);
}

Integer Rational::floor() const {
    // cpp_int division truncates toward zero
    Integer q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) {
        q -= 1;
    }
    return q;
}

Rational Rational::fractional_part() const {
    if (den_ == 1) {
        return Rational();
    }
    return Rational(num_ - floor() * den_, den_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) {
        throw std::domain_error("division by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Phase Phase::parse(std::string_view text) { return Phase(Rational::parse(text)); }

Phase Phase::from_sign(int sign) {
    if (sign == 1) return Phase();
    if (sign == -1) return Phase(1, 2);
    throw std::domain_error("sign must be +1 or -1");
}

int Phase::as_sign() const {
    if (q_.is_zero()) return 1;
    if (q_.denominator() == 2) return -1;
    throw std::domain_error("phase " + q_.to_string() + " is not a sign");
}

std::ostream& operator<<(std::ostream& os, const Phase& p) { return os << p.to_string(); }

}  // namespace scext
