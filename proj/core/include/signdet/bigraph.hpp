#pragma once

#include "signdet/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace signdet {

/// Undirected signed bipartite graph of a pattern: one circle node per
/// matrix row, one box node per matrix column, and an edge per nonzero
/// cell carrying that cell's sign. Node ids are the 0-based row and
/// column indices of the pattern.
struct SignedBipartiteGraph {
    int row_count = 0;
    int col_count = 0;

    struct Edge {
        int row;
        int col;
        int sign;  // +1 or -1
    };
    std::vector<Edge> edges;

    /// sign_of(i, j): edge sign, or 0 when the edge is absent.
    int sign_of(int row, int col) const;
    bool has_edge(int row, int col) const { return sign_of(row, col) != 0; }
};

SignedBipartiteGraph build_graph(const SignPattern& p);
SignedBipartiteGraph build_graph(const RationalMatrix& m);

/// Simple cycle, stored as the alternating closed sequence
/// col[0], row[0], col[1], row[1], ..., closing from row[k-1] back to
/// col[0]. Canonical form: col[0] is the smallest column on the cycle and
/// row[0] is the smaller of the two row neighbours of col[0].
struct Cycle {
    std::vector<int> cols;
    std::vector<int> rows;

    /// Vertices where both incident cycle edges carry the same sign.
    int cpair_count = 0;

    /// Even c-pair count. Cycles with even parity flip a determinant term's
    /// sign when walked; odd ones preserve it.
    bool is_e() const { return cpair_count % 2 == 0; }

    int length() const { return 2 * static_cast<int>(cols.size()); }

    bool contains_row(int r) const;
    bool contains_col(int c) const;

    /// True when the two cycles share no vertex.
    static bool disjoint(const Cycle& a, const Cycle& b);

    friend bool operator==(const Cycle& a, const Cycle& b) {
        return a.cols == b.cols && a.rows == b.rows;
    }
    friend bool operator<(const Cycle& a, const Cycle& b);
};

/// Injective assignment of columns to rows, kept sorted by column.
using Matching = std::vector<std::pair<int, int>>;

/// Enumeration result that may have been cut off at a limit. When
/// limit_exceeded is set, items holds the first `limit` findings in the
/// deterministic enumeration order.
template <typename T>
struct Enumerated {
    std::vector<T> items;
    bool limit_exceeded = false;
};

inline constexpr std::int64_t kEnumerationCap = 1000000;

/// All simple cycles in canonical form, ordered by (anchor column,
/// discovery order of the depth-first search).
Enumerated<Cycle> enumerate_cycles(const SignedBipartiteGraph& g,
                                   std::int64_t limit = kEnumerationCap);

/// All matchings that cover the smaller vertex side, in the order produced
/// by assigning that side's nodes one by one, lowest partner first.
Enumerated<Matching> enumerate_perfect_matchings(const SignedBipartiteGraph& g,
                                                 std::int64_t limit = kEnumerationCap);

/// Cycles that alternate between edges of the matching w and edges outside
/// it. Throws NotPerfectMatching if w is not an injective cover of the
/// smaller side using present edges.
Enumerated<Cycle> interlacing_cycles(const SignedBipartiteGraph& g,
                                     const Matching& w,
                                     std::int64_t limit = kEnumerationCap);

/// All nonempty sets of pairwise vertex-disjoint cycles, as index vectors
/// into `cycles`. The empty set is not reported.
Enumerated<std::vector<int>> disjoint_cycle_sets(const std::vector<Cycle>& cycles,
                                                 std::int64_t limit = kEnumerationCap);

/// Streaming tally of the nonempty pairwise-disjoint sets: total number of
/// sets and how many contain an odd number of cycles with even parity.
struct DisjointSetTally {
    std::int64_t total_sets = 0;
    std::int64_t odd_e_sets = 0;
    bool limit_exceeded = false;
};
DisjointSetTally tally_disjoint_cycle_sets(const std::vector<Cycle>& cycles,
                                           std::int64_t limit = kEnumerationCap);

/// Square vertex selections (equal numbers of rows and columns) whose
/// induced subgraph has every vertex on at least one cycle. Listed largest
/// size first, lexicographically within a size.
struct VertexSelection {
    std::vector<int> rows;
    std::vector<int> cols;
};
Enumerated<VertexSelection> balanced_square_submatrices(const SignedBipartiteGraph& g,
                                                        std::int64_t limit = kEnumerationCap);

/// Connected components, each as sorted row and column id lists; isolated
/// nodes form their own components. Ordered by smallest contained node.
std::vector<VertexSelection> connected_components(const SignedBipartiteGraph& g);

/// Sum over components of min(#rows, #cols): the rank the pattern's
/// support attains for generic entry magnitudes whenever connectivity is
/// the only obstruction. Never smaller than the true generic rank.
int generic_rank(const SignedBipartiteGraph& g);

/// Smallest 4-cycle (two rows, two columns) with exactly three negative
/// edges, or nullopt. Scanned in lexicographic (row, row, col, col) order.
std::optional<Cycle> has_four_cycle_three_negative(const SignedBipartiteGraph& g);

/// True when the graph is connected, has at most one cycle, and every
/// vertex off that cycle is a leaf hanging directly on a cycle vertex.
/// With no cycle at all, this reduces to "connected and acyclic".
bool single_cycle_with_short_hair(const SignedBipartiteGraph& g);

/// Graphviz rendering: columns as boxes, rows as circles, negative edges
/// solid, positive edges dashed. Node names are C1..Cn and R1..Rm.
std::string to_dot(const SignedBipartiteGraph& g);

}  // namespace signdet
