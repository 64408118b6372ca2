#include "signdet/rational.hpp"

#include "signdet/errors.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace signdet {

namespace {

using BigInt = boost::multiprecision::cpp_int;

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt pow10(std::size_t k) {
    BigInt p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= 10;
    return p;
}

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    v_ = Rep(BigInt(num), BigInt(den));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw ParseError("empty numeric field");
    std::string s = text.substr(begin, end - begin + 1);

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }
    if (s.empty()) throw ParseError("sign with no digits");

    auto signed_value = [negative](Rep v) {
        return Rational(negative ? Rep(-v) : v);
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw ParseError("malformed fraction '" + text + "'");
        }
        BigInt d(den);
        if (d == 0) throw ParseError("fraction with zero denominator");
        return signed_value(Rep(BigInt(num), d));
    }

    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (frac.empty()) throw ParseError("decimal with no fractional digits");
        if (!all_digits(whole) || !all_digits(frac)) {
            throw ParseError("malformed decimal '" + text + "'");
        }
        if (frac.size() > 18) {
            throw ParseError("decimal with more than 18 fractional digits");
        }
        BigInt scale = pow10(frac.size());
        BigInt scaled = BigInt(whole) * scale + BigInt(frac);
        return signed_value(Rep(scaled, scale));
    }

    if (!all_digits(s)) throw ParseError("malformed number '" + text + "'");
    return signed_value(Rep(BigInt(s)));
}

std::string Rational::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.rep();
}

}  // namespace signdet
