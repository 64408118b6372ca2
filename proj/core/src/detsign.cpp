#include "signdet/detsign.hpp"

#include "signdet/symexpand.hpp"

#include <algorithm>

namespace signdet {

namespace {

/// Shared engine: permute to a nonzero diagonal and tally the disjoint
/// interlacing-cycle sets. Returns nothing when no diagonal exists.
struct GraphTally {
    std::int64_t t = 0;          // 1 + number of nonempty disjoint sets
    std::int64_t odd_e_sets = 0; // sets with an odd number of even-parity cycles
    int epsilon = 0;             // sign of the permuted diagonal product
    int perm_sign = 0;           // parity of the row permutation
    bool partial = false;
};

std::optional<GraphTally> graph_tally(const SignPattern& p, std::int64_t limit) {
    auto normalized = normalize_diagonal(p);
    if (!normalized) return std::nullopt;

    const SignPattern& a = normalized->pattern;
    SignedBipartiteGraph g = build_graph(a);
    Matching diagonal;
    for (int i = 0; i < a.rows(); ++i) diagonal.emplace_back(i, i);

    auto cycles = interlacing_cycles(g, diagonal, limit);
    auto tally = tally_disjoint_cycle_sets(cycles.items, limit);

    GraphTally out;
    out.t = 1 + tally.total_sets;
    out.odd_e_sets = tally.odd_e_sets;
    out.partial = cycles.limit_exceeded || tally.limit_exceeded;
    out.epsilon = 1;
    for (int i = 0; i < a.rows(); ++i) out.epsilon *= a.sign(i, i);
    out.perm_sign = normalized->permutation_sign();
    return out;
}

}  // namespace

CountResult count_signs_graph(const SignPattern& p, std::int64_t limit) {
    if (p.rows() != p.cols()) {
        throw NotSquare("sign census needs a square pattern");
    }
    auto tally = graph_tally(p, limit);
    if (!tally) return CountResult{SignCounts{0, 0, 0}, false};

    // Terms carrying the sign opposite the permuted diagonal's product are
    // exactly the odd sets; translate back through the row permutation,
    // which flips every term's sign when odd.
    std::int64_t against = tally->odd_e_sets;
    std::int64_t with = tally->t - against;
    std::int64_t plus = tally->epsilon > 0 ? with : against;
    std::int64_t minus = tally->t - plus;
    if (tally->perm_sign < 0) std::swap(plus, minus);
    return CountResult{SignCounts{tally->t, plus, minus}, tally->partial};
}

std::optional<SignCounts> fast_counts(const SignPattern& p) {
    if (p.rows() != p.cols()) {
        throw NotSquare("closed-form census needs a square pattern");
    }
    if (!p.diagonal_nonzero()) {
        throw PreconditionViolated("closed-form census needs a nonzero diagonal");
    }
    SignedBipartiteGraph g = build_graph(p);
    Matching diagonal;
    for (int i = 0; i < p.rows(); ++i) diagonal.emplace_back(i, i);
    auto cycles = interlacing_cycles(g, diagonal).items;

    int epsilon = 1;
    for (int i = 0; i < p.rows(); ++i) epsilon *= p.sign(i, i);

    bool all_disjoint = true, all_intersect = true;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            if (Cycle::disjoint(cycles[i], cycles[j])) all_intersect = false;
            else all_disjoint = false;
        }
    }

    std::int64_t e_count = 0;
    for (const auto& c : cycles) e_count += c.is_e() ? 1 : 0;

    auto from_split = [epsilon](std::int64_t t, std::int64_t against) {
        std::int64_t with = t - against;
        std::int64_t plus = epsilon > 0 ? with : against;
        return SignCounts{t, plus, t - plus};
    };

    if (all_intersect) {
        // Only singleton sets exist: one term per cycle plus the diagonal.
        std::int64_t t = 1 + static_cast<std::int64_t>(cycles.size());
        return from_split(t, e_count);
    }
    if (all_disjoint) {
        // Every subset of cycles is a set; with any even-parity cycle the
        // odd and even halves split evenly.
        if (cycles.size() > 62) return std::nullopt;
        std::int64_t t = std::int64_t{1} << cycles.size();
        std::int64_t against = e_count > 0 ? t / 2 : 0;
        return from_split(t, against);
    }
    return std::nullopt;
}

Classification classify(const SignPattern& p) {
    if (p.rows() != p.cols()) {
        throw NotSquare("classification needs a square pattern");
    }
    CountResult counts = count_signs_graph(p);
    Classification out;
    out.counts = counts.counts;
    out.partial = counts.partial;
    if (counts.counts.t == 0) out.kind = PatternClass::ZeroDet;
    else if (counts.counts.m() == 0) out.kind = PatternClass::SNS;
    else out.kind = PatternClass::General;
    return out;
}

SsdResult is_ssd(const SignPattern& p) {
    auto cycles = enumerate_cycles(build_graph(p));
    for (const auto& c : cycles.items) {
        if (c.is_e()) return SsdResult{false, c};
    }
    return SsdResult{true, std::nullopt};
}

JSignResult j_sign_bound(const SignPattern& p, std::int64_t limit) {
    SignedBipartiteGraph g = build_graph(p);
    auto balanced = balanced_square_submatrices(g, limit);
    JSignResult out;
    out.partial = balanced.limit_exceeded;
    for (const auto& sel : balanced.items) {
        SignPattern sub = p.submatrix(sel.rows, sel.cols);
        // A census cannot put more than half its terms in the minority,
        // so skip the full count when the term total cannot beat the
        // current maximum. The term total equals the matching count.
        auto matchings = enumerate_perfect_matchings(build_graph(sub), limit);
        if (matchings.limit_exceeded) out.partial = true;
        std::int64_t t_cap = static_cast<std::int64_t>(matchings.items.size());
        if (t_cap / 2 <= out.j && out.witness) continue;

        CountResult counts = count_signs_graph(sub, limit);
        if (counts.partial) out.partial = true;
        if (counts.counts.m() > out.j || !out.witness) {
            out.j = counts.counts.m();
            out.witness = sel;
        }
    }
    if (out.j == 0 && balanced.items.empty()) out.witness.reset();
    return out;
}

ZeroOneSquare zero_one_square(const SignPattern& p, std::int64_t limit) {
    if (p.rows() != p.cols()) {
        throw NotSquare("zero-one test needs a square pattern");
    }
    auto tally = graph_tally(p, limit);
    if (!tally) {
        throw NoPerfectMatching("zero-one test needs a nonzero determinant expansion");
    }
    if (tally->odd_e_sets == 0) return ZeroOneSquare::Zero;
    if (tally->odd_e_sets == 1) return ZeroOneSquare::One;
    return ZeroOneSquare::More;
}

}  // namespace signdet
