#pragma once

#include "signdet/bigraph.hpp"
#include "signdet/matrix.hpp"
#include "signdet/poly.hpp"

#include <optional>

namespace signdet {

/// Sign census of a square pattern's determinant plus a truncation flag;
/// partial results are lower bounds obtained before a limit was hit.
struct CountResult {
    SignCounts counts;
    bool partial = false;
};

/// Term-sign census of det(P) computed through the bipartite graph rather
/// than by expanding the determinant: permute rows to a nonzero diagonal,
/// take the diagonal matching, and count sets of pairwise disjoint
/// interlacing cycles grouped by how many even-parity cycles they contain.
/// A pattern with no perfect matching yields (0,0,0). Throws NotSquare.
CountResult count_signs_graph(const SignPattern& p,
                              std::int64_t limit = kEnumerationCap);

/// Closed-form census for the two easy interlacing-cycle layouts, given a
/// square pattern that already has a nonzero diagonal (throws
/// PreconditionViolated otherwise): all cycles pairwise intersecting gives
/// t = 1 + #cycles, all pairwise disjoint gives t = 2^#cycles. Returns
/// nullopt when the layout is mixed and no closed form applies.
std::optional<SignCounts> fast_counts(const SignPattern& p);

/// Determinant-sign classification of a square pattern.
enum class PatternClass {
    SNS,      // at least one term, all of one sign: never singular
    SD,       // all terms share a sign but the determinant can vanish
    ZeroDet,  // no perfect matching: determinant identically zero
    General,  // terms of both signs
};

struct Classification {
    PatternClass kind = PatternClass::General;
    SignCounts counts;
    bool partial = false;
};

/// Classifies det(P) by its term signs. With every nonzero cell carrying
/// its own variable, one-signed patterns with a term are exactly the SNS
/// ones, so SD is reported only as ZeroDet here; the enumerator exists for
/// vocabulary shared with derived, possibly tied, systems. Throws NotSquare.
Classification classify(const SignPattern& p);

/// Strong sign-determinacy probe for a pattern of any shape: holds exactly
/// when every square submatrix is SNS or singular, equivalently when the
/// graph has no even-parity cycle. The witness is the first even-parity
/// cycle found when the property fails.
struct SsdResult {
    bool ssd = false;
    std::optional<Cycle> witness;
};
SsdResult is_ssd(const SignPattern& p);

/// Maximum, over balanced square vertex selections, of the minority term
/// count m of the selected submatrix. Zero with no witness when the graph
/// has no balanced selection. The witness is the first maximizer in the
/// size-descending, lexicographic enumeration; selections whose term
/// count t cannot beat the current maximum (m never exceeds t/2) are
/// skipped without a full census.
struct JSignResult {
    std::int64_t j = 0;
    std::optional<VertexSelection> witness;
    bool partial = false;
};
JSignResult j_sign_bound(const SignPattern& p,
                         std::int64_t limit = kEnumerationCap);

/// Three-way verdict on the number of determinant terms carrying the
/// minority-against-diagonal sign, read straight off the graph: the count
/// of disjoint interlacing-cycle sets with an odd number of even-parity
/// cycles, bucketed as 0, 1, or more. This graph count is the exact number
/// of terms opposing the diagonal's sign; whichever side it lands on, the
/// other side always has at least the diagonal term. Throws NotSquare, and
/// NoPerfectMatching when no diagonal normalization exists.
enum class ZeroOneSquare { Zero, One, More };
ZeroOneSquare zero_one_square(const SignPattern& p,
                              std::int64_t limit = kEnumerationCap);

}  // namespace signdet
