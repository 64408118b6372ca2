#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace signdet {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin wrapper around boost::multiprecision::cpp_rational
/// that adds exact-decimal parsing and canonical "p/q" formatting.
class Rational {
public:
    using Rep = boost::multiprecision::cpp_rational;

    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                // NOLINT: implicit by design
    Rational(long long n) : v_(n) {}          // NOLINT
    Rational(long long num, long long den);
    explicit Rational(Rep v) : v_(std::move(v)) {}

    /// Accepts an optionally signed integer, "p/q" fraction, or plain
    /// decimal with at most 18 fractional digits. Throws ParseError on
    /// anything else (including exponents and division by zero).
    static Rational parse(const std::string& text);

    const Rep& rep() const { return v_; }

    Rational operator-() const { return Rational(Rep(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    bool is_zero() const { return v_.is_zero(); }

    /// -1, 0, or +1.
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    /// "p" for integers, "p/q" otherwise; the sign sits on the numerator.
    std::string str() const;

private:
    Rep v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace signdet
