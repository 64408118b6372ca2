#pragma once

#include "signdet/bigraph.hpp"
#include "signdet/matrix.hpp"

#include <optional>
#include <vector>

namespace signdet {

/// Dependence pattern of the rate functions: entry (i, j) says whether
/// rate i is allowed to vary with species j.
using DependencePattern = std::vector<std::vector<bool>>;

/// Canonical flux derivative pattern of a stoichiometric matrix S (species
/// by reactions): a d' x d pattern whose (i, j) cell is a fresh positive
/// variable U_i_j exactly when reaction i consumes species j, that is when
/// S(j, i) < 0, and a structural zero otherwise.
SignPattern flux_pattern(const RationalMatrix& s);

/// The dependence pattern matching flux_pattern exactly: rate i depends on
/// species j precisely when reaction i consumes species j.
DependencePattern canonical_dependence(const RationalMatrix& s);

enum class ReactionForm { RF, WeakRF, Neither };

/// How a dependence pattern relates to the stoichiometry. Weak form: no
/// rate increases with a species its reaction produces (S(j,i) > 0 forces
/// independence). Full form additionally requires dependence on every
/// consumed species. Violations list the offending (reaction, species)
/// cells, 1-based. Throws ShapeMismatch when d is d x d' but the
/// dependence pattern is not d' x d.
struct ReactionFormResult {
    ReactionForm form = ReactionForm::Neither;
    std::vector<std::pair<int, int>> weak_violations;
    std::vector<std::pair<int, int>> full_violations;
};
ReactionFormResult classify_reaction_form(const RationalMatrix& s,
                                          const DependencePattern& d);

/// Whether the Jacobian S*U has an unambiguous sign pattern for every
/// positive choice of the flux derivatives U given by flux_pattern(s).
/// Ambiguity happens exactly when two rows i, j and two columns k, l of S
/// show the sign square S(i,k) > 0, S(i,l) < 0, S(j,k) < 0, S(j,l) < 0,
/// equivalently when the graph of S has a 4-cycle with exactly three
/// negative edges. On success the pattern of S*U is returned: cell (i, j)
/// is nonzero iff some reaction k consumed by species j has S(i,k) != 0,
/// and then carries sign(S(i,k)).
struct JacobianSignResult {
    std::optional<SignPattern> pattern;  // set on success
    struct Witness {
        int i, j, k, l;  // 1-based rows i, j and columns k, l of S
        Cycle cycle;
    };
    std::optional<Witness> witness;  // set on failure
    bool has_pattern() const { return pattern.has_value(); }
};
JacobianSignResult jacobian_sign_pattern(const RationalMatrix& s);

/// Stricter question: does S*U keep one sign pattern under every weak-form
/// dependence pattern, not just the canonical one? False exactly when rows
/// i != j and columns k != l satisfy S(i,k) > 0, S(i,l) < 0, S(j,k) <= 0,
/// S(j,l) <= 0, since the two j-row slots then admit fluxes that mix signs
/// in cell (i, j) of the product.
bool wrf_sign_pattern_sufficient(const RationalMatrix& s);

}  // namespace signdet
