#pragma once

#include "signdet/rational.hpp"
#include "signdet/types.hpp"

#include <map>
#include <vector>

namespace signdet {

/// Product of distinct variables times a power of the scalar t. Variables
/// are kept sorted; monomials order first by t-degree, then by variables,
/// which fixes the canonical term order everywhere.
struct Monomial {
    int t_degree = 0;
    std::vector<VarId> vars;  // sorted, no repeats

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.t_degree == b.t_degree && a.vars == b.vars;
    }
    friend bool operator<(const Monomial& a, const Monomial& b);

    /// Union of factors. Throws Error if the two share a variable, since
    /// squared variables cannot occur in a multilinear expansion.
    static Monomial product(const Monomial& a, const Monomial& b);
};

/// Sparse multilinear polynomial with exact rational coefficients.
/// Zero-coefficient terms are never stored.
class MultilinearPoly {
public:
    MultilinearPoly() = default;

    /// The constant c as a polynomial.
    static MultilinearPoly constant(const Rational& c);

    /// A single signed variable.
    static MultilinearPoly variable(const VarId& v, const Rational& coeff);

    /// coeff * t.
    static MultilinearPoly t_term(const Rational& coeff);

    void add_term(const Monomial& m, const Rational& coeff);

    MultilinearPoly& operator+=(const MultilinearPoly& o);
    MultilinearPoly& operator-=(const MultilinearPoly& o);

    MultilinearPoly operator*(const MultilinearPoly& o) const;
    MultilinearPoly scaled(const Rational& c) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    /// Terms with the given t-degree, re-expressed with t stripped out.
    MultilinearPoly coefficient_of_t(int t_degree) const;

    /// Smallest t-degree present, or -1 for the zero polynomial.
    int min_t_degree() const;

    /// Substitutes a numeric value for t, collapsing t-degrees.
    MultilinearPoly eval_t(const Rational& value) const;

    friend bool operator==(const MultilinearPoly& a, const MultilinearPoly& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Monomial, Rational> terms_;
};

/// Counts terms by coefficient sign.
SignCounts sign_counts(const MultilinearPoly& p);

/// Number of terms whose coefficient sign equals the given sign (+1 or -1).
std::int64_t count_terms_with_sign(const MultilinearPoly& p, int sign);

}  // namespace signdet
