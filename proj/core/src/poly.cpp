#include "signdet/poly.hpp"

#include "signdet/errors.hpp"

#include <algorithm>

namespace signdet {

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.t_degree != b.t_degree) return a.t_degree < b.t_degree;
    return std::lexicographical_compare(a.vars.begin(), a.vars.end(),
                                        b.vars.begin(), b.vars.end());
}

Monomial Monomial::product(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.t_degree = a.t_degree + b.t_degree;
    out.vars.reserve(a.vars.size() + b.vars.size());
    std::merge(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(),
               std::back_inserter(out.vars));
    for (std::size_t i = 1; i < out.vars.size(); ++i) {
        if (out.vars[i - 1] == out.vars[i]) {
            throw Error("product repeats variable " + out.vars[i].str() +
                        "; expansion would not be multilinear");
        }
    }
    return out;
}

MultilinearPoly MultilinearPoly::constant(const Rational& c) {
    MultilinearPoly p;
    p.add_term(Monomial{}, c);
    return p;
}

MultilinearPoly MultilinearPoly::variable(const VarId& v, const Rational& coeff) {
    MultilinearPoly p;
    p.add_term(Monomial{0, {v}}, coeff);
    return p;
}

MultilinearPoly MultilinearPoly::t_term(const Rational& coeff) {
    MultilinearPoly p;
    p.add_term(Monomial{1, {}}, coeff);
    return p;
}

void MultilinearPoly::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultilinearPoly MultilinearPoly::operator*(const MultilinearPoly& o) const {
    MultilinearPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            out.add_term(Monomial::product(ma, mb), ca * cb);
    return out;
}

MultilinearPoly MultilinearPoly::scaled(const Rational& c) const {
    MultilinearPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

MultilinearPoly MultilinearPoly::coefficient_of_t(int t_degree) const {
    MultilinearPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.t_degree == t_degree) out.terms_.emplace(Monomial{0, m.vars}, c);
    }
    return out;
}

int MultilinearPoly::min_t_degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
        if (best < 0 || m.t_degree < best) best = m.t_degree;
    }
    return best;
}

MultilinearPoly MultilinearPoly::eval_t(const Rational& value) const {
    MultilinearPoly out;
    for (const auto& [m, c] : terms_) {
        Rational scaled = c;
        for (int k = 0; k < m.t_degree; ++k) scaled *= value;
        out.add_term(Monomial{0, m.vars}, scaled);
    }
    return out;
}

SignCounts sign_counts(const MultilinearPoly& p) {
    SignCounts out;
    for (const auto& [m, c] : p.terms()) {
        ++out.t;
        if (c.sign() > 0) ++out.m_plus;
        else ++out.m_minus;
    }
    return out;
}

std::int64_t count_terms_with_sign(const MultilinearPoly& p, int sign) {
    std::int64_t n = 0;
    for (const auto& [m, c] : p.terms()) {
        if (c.sign() == sign) ++n;
    }
    return n;
}

}  // namespace signdet
