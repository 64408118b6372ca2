#pragma once

#include "signdet/detsign.hpp"
#include "signdet/matrix.hpp"
#include "signdet/poly.hpp"
#include "signdet/symexpand.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace signdet {

/// Stoichiometric matrix with reversible reaction columns folded away,
/// plus the matching flux derivative pattern. Columns that are exact
/// negations pair up greedily from the left; the lower-indexed column of
/// each pair is kept. u_red is k x d over the original variable ids: cell
/// (i, j) is +U_c_j when kept column c consumes species j, and -U_c'_j
/// when it produces species j and its reverse c' exists. With that
/// convention the symbolic products S*U and s_red*u_red agree literally,
/// term for term.
struct ReducedSystem {
    RationalMatrix s_red;
    SignPattern u_red;

    struct ColumnOrigin {
        int kept_col;                 // 0-based column of the original S
        std::optional<int> reverse_col;  // its dropped negation, if any
    };
    std::vector<ColumnOrigin> columns;

    /// True when some kept column is still the exact negation of another
    /// kept column (possible with repeated columns); reduced-form
    /// determinant sums are not used in that case.
    bool irreducible_clean = true;
};

ReducedSystem reduce(const RationalMatrix& s);

/// Genericity of the reduced stoichiometry: do minor ranks match what the
/// zero pattern alone predicts?
enum class Genericity { Generic, WeaklyGeneric, NotGeneric, Unverified };

struct GenericityResult {
    Genericity level = Genericity::Unverified;
    /// For WeaklyGeneric: an r x r selection with zero determinant despite
    /// a perfect matching in its support.
    std::optional<VertexSelection> witness;
    std::string detail;
};

inline constexpr std::int64_t kGenericityCap = 20000;

/// NotGeneric when rank(s_red) falls short of the component bound of its
/// graph. Otherwise every r x r submatrix is checked to be either
/// invertible or free of perfect matchings; all pass gives Generic, a
/// failure gives WeaklyGeneric with the first failing selection, and more
/// than `cap` submatrices gives Unverified without scanning.
GenericityResult genericity_check(const ReducedSystem& r,
                                  std::int64_t cap = kGenericityCap);

/// Core determinant of S: the coefficient of t^(d-r) in det(S*U - tI),
/// where d counts species and r = rank(S), as a multilinear polynomial in
/// the flux variables. Computed as the rank-sized minor sum
/// (-1)^(d-r) * sum det(s_red(a|b)) * det(u_red(b|a)) over row sets a and
/// column sets b of size r, skipping column sets whose support has no
/// perfect matching. Rank 0 yields the constant (-1)^d.
MultilinearPoly core_determinant(const RationalMatrix& s);

/// Same value computed the slow way: expand det(S*U - tI) over the full
/// unreduced flux pattern and extract the t^(d-r) coefficient. Also checks
/// that no lower power of t appears. Throws TooLarge past the expansion
/// cap. Intended as a cross-check for core_determinant.
MultilinearPoly core_determinant_oracle(const RationalMatrix& s,
                                        int cap = kDetExpansionCap);

/// Full characteristic-style minor sum with the scalar substituted:
/// sum over sizes s = 0..r of (-t)^(d-s) * sum det(s_red(a|b)) *
/// det(u_red(b|a)), evaluated at the given t. The s = 0 layer contributes
/// the constant (-1)^d at t = 1.
MultilinearPoly cf_determinant(const RationalMatrix& s,
                               const Rational& t_value = Rational(1));

/// Census of one size-r minor pair.
struct MinorPairData {
    std::vector<int> rows;  // a: row selection of s_red
    std::vector<int> cols;  // b: column selection of s_red
    Rational s_det;         // det(s_red(a|b))
    SignCounts u_counts;    // term census of det(u_red(b|a))
    bool s_pattern_sd = false;  // sign pattern of the minor is one-signed
    bool u_pattern_sd = false;  // flux determinant is one-signed
    /// For a one-signed nonzero flux determinant with s_det != 0: the sign
    /// of s_det times the flux terms' common sign. 0 when undefined.
    int flag = 0;
};

/// All size-r minor pairs with a nonzero flux determinant, in
/// lexicographic (rows, cols) order.
std::vector<MinorPairData> minor_pair_census(const RationalMatrix& s);

/// Counts of anomalous-sign terms in the core determinant. With d species
/// and rank r, a term is anomalous when its coefficient sign is
/// (-1)^(d-1), the opposite of the sign every term takes in systems that
/// cannot lose injectivity. Each minor pair contributes its terms intact
/// (distinct variable sets keep pairs from merging or cancelling), so
/// summing per-pair minority and majority counts bounds the minority count
/// of the whole polynomial, and restricting to sign-mixed stoichiometric
/// minors bounds the anomalous count exactly.
struct AnomalousBounds {
    std::int64_t lower = 0;      // sum of per-pair minority counts
    std::int64_t upper = 0;      // sum of per-pair majority counts
    std::int64_t n_lower = 0;    // anomalous lower bound over mixed minors
    std::int64_t n_upper = 0;    // anomalous upper bound over mixed minors
    std::int64_t n_set_size = 0; // number of sign-mixed minor pairs
    bool advisory = false;       // set when s_red is not even weakly generic
};
AnomalousBounds anomalous_bounds(const RationalMatrix& s);

/// Census of the core determinant when the reduced stoichiometry is square
/// and invertible and the system is Generic: then exactly one minor pair
/// survives and the counts come straight from the flux pattern's graph.
/// The m_plus/m_minus split is adjusted by the sign of det(s_red).
struct SquareCaseResult {
    std::optional<SignCounts> counts;
    std::string not_applicable;  // names the failed clause when empty result
};
SquareCaseResult square_case_counts(const RationalMatrix& s);

/// Decision on the number of anomalous core determinant terms.
enum class ZeroOneVerdict { Zero, One, MoreThanOne, Inapplicable };

struct ZeroOneResult {
    ZeroOneVerdict verdict = ZeroOneVerdict::Inapplicable;
    std::string reason;
    /// Set when the usual sign orientation (anomalous side is the smaller
    /// one) failed and the verdict fell back to direct term counting.
    bool advisory = false;
};

/// Case split over the sign-mixed stoichiometric minors: none at all means
/// no anomalous terms; with all flux determinants one-signed the anomalous
/// terms are tallied from the flagged pairs; a single sign-mixed flux
/// determinant reduces to its minority count and orientation; two or more
/// force more than one anomalous term. Requires at least weak genericity,
/// otherwise Inapplicable.
ZeroOneResult zero_one_algorithm(const RationalMatrix& s);

struct CoreDetOptions {
    bool with_cfd = false;
    bool with_bounds = true;
    bool with_zero_one = true;
};

/// Everything the core determinant analysis produces for one matrix.
struct CoreDetReport {
    int d = 0;  // species count (rows of S)
    int rank_r = 0;
    MultilinearPoly cd;
    SignCounts counts;
    std::int64_t anomalous = 0;  // terms with coefficient sign (-1)^(d-1)
    GenericityResult genericity;
    CoreDetOptions options;  // which optional sections were filled in
    AnomalousBounds bounds;
    ZeroOneResult zero_one;
    std::optional<MultilinearPoly> cfd;       // at t = 1, on request
    std::optional<SignCounts> cfd_counts;
    std::int64_t cfd_anomalous = 0;
};

CoreDetReport core_det_report(const RationalMatrix& s,
                              const CoreDetOptions& options = {});

}  // namespace signdet
