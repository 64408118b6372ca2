#include "signdet/bigraph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace signdet {

namespace {

/// Dense adjacency view used by every traversal in this file.
struct Adjacency {
    int rows, cols;
    std::vector<std::vector<int>> sign;       // [row][col], 0 = no edge
    std::vector<std::vector<int>> row_nbrs;   // columns adjacent to a row
    std::vector<std::vector<int>> col_nbrs;   // rows adjacent to a column

    explicit Adjacency(const SignedBipartiteGraph& g)
        : rows(g.row_count),
          cols(g.col_count),
          sign(g.row_count, std::vector<int>(g.col_count, 0)),
          row_nbrs(g.row_count),
          col_nbrs(g.col_count) {
        for (const auto& e : g.edges) sign[e.row][e.col] = e.sign;
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (sign[r][c]) {
                    row_nbrs[r].push_back(c);
                    col_nbrs[c].push_back(r);
                }
    }
};

int cpair_count_of(const Adjacency& a, const std::vector<int>& cols,
                   const std::vector<int>& rows) {
    // Pairs are counted at box (column) vertices only.  Each edge of the
    // cycle meets exactly one box, so the parity of this count equals the
    // parity of (#columns + #negative edges), which is what decides whether
    // rerouting the matching along the cycle flips the term sign.
    int k = static_cast<int>(cols.size());
    int cpairs = 0;
    for (int i = 0; i < k; ++i) {
        int entering = a.sign[rows[(i + k - 1) % k]][cols[i]];
        int leaving = a.sign[rows[i]][cols[i]];
        if (entering == leaving) ++cpairs;
    }
    return cpairs;
}

}  // namespace

int SignedBipartiteGraph::sign_of(int row, int col) const {
    for (const auto& e : edges) {
        if (e.row == row && e.col == col) return e.sign;
    }
    return 0;
}

SignedBipartiteGraph build_graph(const SignPattern& p) {
    SignedBipartiteGraph g{p.rows(), p.cols(), {}};
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j)
            if (int s = p.sign(i, j); s != 0) g.edges.push_back({i, j, s});
    return g;
}

SignedBipartiteGraph build_graph(const RationalMatrix& m) {
    SignedBipartiteGraph g{m.rows(), m.cols(), {}};
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (int s = m.at(i, j).sign(); s != 0) g.edges.push_back({i, j, s});
    return g;
}

bool Cycle::contains_row(int r) const {
    return std::find(rows.begin(), rows.end(), r) != rows.end();
}

bool Cycle::contains_col(int c) const {
    return std::find(cols.begin(), cols.end(), c) != cols.end();
}

bool Cycle::disjoint(const Cycle& a, const Cycle& b) {
    for (int r : a.rows)
        if (b.contains_row(r)) return false;
    for (int c : a.cols)
        if (b.contains_col(c)) return false;
    return true;
}

bool operator<(const Cycle& a, const Cycle& b) {
    if (a.cols != b.cols) return a.cols < b.cols;
    return a.rows < b.rows;
}

Enumerated<Cycle> enumerate_cycles(const SignedBipartiteGraph& g, std::int64_t limit) {
    Adjacency a(g);
    Enumerated<Cycle> out;
    std::vector<bool> row_used(a.rows, false), col_used(a.cols, false);
    std::vector<int> col_path, row_path;
    bool done = false;

    // Anchored search: every cycle is reported exactly once, rooted at its
    // smallest column, walking first toward the smaller row neighbour.
    std::function<void(int)> extend = [&](int anchor) {
        if (done) return;
        int cur_col = col_path.back();
        for (int r : a.col_nbrs[cur_col]) {
            if (done) return;
            if (row_used[r]) continue;
            row_path.push_back(r);
            row_used[r] = true;
            if (row_path.size() >= 2 && a.sign[r][anchor] != 0 &&
                row_path.front() < r) {
                if (static_cast<std::int64_t>(out.items.size()) >= limit) {
                    out.limit_exceeded = true;
                    done = true;
                } else {
                    Cycle c{col_path, row_path, 0};
                    c.cpair_count = cpair_count_of(a, c.cols, c.rows);
                    out.items.push_back(std::move(c));
                }
            }
            if (!done) {
                for (int c : a.row_nbrs[r]) {
                    if (done) break;
                    if (c <= anchor || col_used[c]) continue;
                    col_path.push_back(c);
                    col_used[c] = true;
                    extend(anchor);
                    col_path.pop_back();
                    col_used[c] = false;
                }
            }
            row_path.pop_back();
            row_used[r] = false;
        }
    };

    for (int c0 = 0; c0 < a.cols && !done; ++c0) {
        col_path.assign(1, c0);
        col_used[c0] = true;
        extend(c0);
        col_used[c0] = false;
    }
    return out;
}

Enumerated<Matching> enumerate_perfect_matchings(const SignedBipartiteGraph& g,
                                                 std::int64_t limit) {
    Adjacency a(g);
    Enumerated<Matching> out;
    bool rows_smaller = a.rows <= a.cols;
    int side = rows_smaller ? a.rows : a.cols;
    std::vector<bool> used(rows_smaller ? a.cols : a.rows, false);
    std::vector<int> partner(side, -1);
    bool done = false;

    std::function<void(int)> assign = [&](int i) {
        if (done) return;
        if (i == side) {
            if (static_cast<std::int64_t>(out.items.size()) >= limit) {
                out.limit_exceeded = true;
                done = true;
                return;
            }
            Matching m;
            for (int v = 0; v < side; ++v) {
                if (rows_smaller) m.emplace_back(partner[v], v);
                else m.emplace_back(v, partner[v]);
            }
            std::sort(m.begin(), m.end());
            out.items.push_back(std::move(m));
            return;
        }
        const auto& nbrs = rows_smaller ? a.row_nbrs[i] : a.col_nbrs[i];
        for (int p : nbrs) {
            if (used[p] || done) continue;
            used[p] = true;
            partner[i] = p;
            assign(i + 1);
            used[p] = false;
        }
        partner[i] = -1;
    };
    assign(0);
    return out;
}

Enumerated<Cycle> interlacing_cycles(const SignedBipartiteGraph& g,
                                     const Matching& w, std::int64_t limit) {
    Adjacency a(g);
    int side = std::min(a.rows, a.cols);
    if (static_cast<int>(w.size()) != side) {
        throw NotPerfectMatching("matching must cover the smaller side (" +
                                 std::to_string(side) + " nodes)");
    }
    std::set<int> cols_seen, rows_seen;
    for (const auto& [c, r] : w) {
        if (c < 0 || c >= a.cols || r < 0 || r >= a.rows || a.sign[r][c] == 0) {
            throw NotPerfectMatching("matching uses an absent edge");
        }
        if (!cols_seen.insert(c).second || !rows_seen.insert(r).second) {
            throw NotPerfectMatching("matching repeats a vertex");
        }
    }

    std::set<std::pair<int, int>> in_w(w.begin(), w.end());
    auto matched = [&](int col, int row) {
        return in_w.count({col, row}) != 0;
    };

    Enumerated<Cycle> all = enumerate_cycles(g, limit);
    Enumerated<Cycle> out;
    out.limit_exceeded = all.limit_exceeded;
    for (auto& c : all.items) {
        int k = static_cast<int>(c.cols.size());
        bool ok = true;
        bool first = matched(c.cols[0], c.rows[0]);
        for (int i = 0; i < k && ok; ++i) {
            // Edges alternate (c_i, r_i), (r_i, c_{i+1}) around the cycle,
            // so matched edges must be exactly every other one: each
            // (c_i, r_i) agrees with the first edge, each (r_i, c_{i+1})
            // disagrees.
            bool m1 = matched(c.cols[i], c.rows[i]);
            bool m2 = matched(c.cols[(i + 1) % k], c.rows[i]);
            if (m1 != first || m2 == first) ok = false;
        }
        if (ok) out.items.push_back(std::move(c));
    }
    return out;
}

namespace {

struct CycleMasks {
    std::uint64_t rows;
    std::uint64_t cols;
    bool e;
};

std::vector<CycleMasks> cycle_masks(const std::vector<Cycle>& cycles) {
    std::vector<CycleMasks> masks;
    masks.reserve(cycles.size());
    for (const auto& c : cycles) {
        CycleMasks m{0, 0, c.is_e()};
        for (int r : c.rows) m.rows |= std::uint64_t{1} << r;
        for (int col : c.cols) m.cols |= std::uint64_t{1} << col;
        masks.push_back(m);
    }
    return masks;
}

}  // namespace

Enumerated<std::vector<int>> disjoint_cycle_sets(const std::vector<Cycle>& cycles,
                                                 std::int64_t limit) {
    for (const auto& c : cycles) {
        for (int r : c.rows)
            if (r >= 64) throw TooLarge("disjoint-set masks support 64 rows");
        for (int col : c.cols)
            if (col >= 64) throw TooLarge("disjoint-set masks support 64 columns");
    }
    auto masks = cycle_masks(cycles);
    Enumerated<std::vector<int>> out;
    std::vector<int> current;
    bool done = false;

    std::function<void(std::size_t, std::uint64_t, std::uint64_t)> rec =
        [&](std::size_t start, std::uint64_t rmask, std::uint64_t cmask) {
            for (std::size_t i = start; i < masks.size() && !done; ++i) {
                if ((masks[i].rows & rmask) || (masks[i].cols & cmask)) continue;
                current.push_back(static_cast<int>(i));
                if (static_cast<std::int64_t>(out.items.size()) >= limit) {
                    out.limit_exceeded = true;
                    done = true;
                } else {
                    out.items.push_back(current);
                    rec(i + 1, rmask | masks[i].rows, cmask | masks[i].cols);
                }
                current.pop_back();
            }
        };
    rec(0, 0, 0);
    return out;
}

DisjointSetTally tally_disjoint_cycle_sets(const std::vector<Cycle>& cycles,
                                           std::int64_t limit) {
    for (const auto& c : cycles) {
        for (int r : c.rows)
            if (r >= 64) throw TooLarge("disjoint-set masks support 64 rows");
        for (int col : c.cols)
            if (col >= 64) throw TooLarge("disjoint-set masks support 64 columns");
    }
    auto masks = cycle_masks(cycles);
    DisjointSetTally tally;

    std::function<void(std::size_t, std::uint64_t, std::uint64_t, int)> rec =
        [&](std::size_t start, std::uint64_t rmask, std::uint64_t cmask, int e_parity) {
            for (std::size_t i = start; i < masks.size() && !tally.limit_exceeded; ++i) {
                if ((masks[i].rows & rmask) || (masks[i].cols & cmask)) continue;
                if (tally.total_sets >= limit) {
                    tally.limit_exceeded = true;
                    return;
                }
                int parity = e_parity ^ (masks[i].e ? 1 : 0);
                ++tally.total_sets;
                tally.odd_e_sets += parity;
                rec(i + 1, rmask | masks[i].rows, cmask | masks[i].cols, parity);
            }
        };
    rec(0, 0, 0, 0);
    return tally;
}

namespace {

/// True when every vertex of the graph lies on at least one cycle.
bool all_vertices_on_cycles(const SignedBipartiteGraph& g, std::int64_t limit) {
    if (g.row_count != g.col_count) return false;
    int need = g.row_count + g.col_count;
    auto cycles = enumerate_cycles(g, limit);
    std::vector<bool> row_on(g.row_count, false), col_on(g.col_count, false);
    int covered = 0;
    for (const auto& c : cycles.items) {
        for (int r : c.rows) {
            if (!row_on[r]) { row_on[r] = true; ++covered; }
        }
        for (int col : c.cols) {
            if (!col_on[col]) { col_on[col] = true; ++covered; }
        }
        if (covered == need) return true;
    }
    return covered == need;
}

void selections_of(int n, int k, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int next, int depth) {
        if (depth == k) {
            emit(pick);
            return;
        }
        for (int v = next; v <= n - (k - depth); ++v) {
            pick[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

Enumerated<VertexSelection> balanced_square_submatrices(const SignedBipartiteGraph& g,
                                                        std::int64_t limit) {
    Adjacency a(g);
    Enumerated<VertexSelection> out;
    bool done = false;
    for (int k = std::min(a.rows, a.cols); k >= 1 && !done; --k) {
        selections_of(a.rows, k, [&](const std::vector<int>& rows) {
            if (done) return;
            selections_of(a.cols, k, [&](const std::vector<int>& cols) {
                if (done) return;
                SignedBipartiteGraph sub{k, k, {}};
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        if (int s = a.sign[rows[i]][cols[j]]; s != 0)
                            sub.edges.push_back({i, j, s});
                if (!all_vertices_on_cycles(sub, limit)) return;
                if (static_cast<std::int64_t>(out.items.size()) >= limit) {
                    out.limit_exceeded = true;
                    done = true;
                    return;
                }
                out.items.push_back(VertexSelection{rows, cols});
            });
        });
    }
    return out;
}

std::vector<VertexSelection> connected_components(const SignedBipartiteGraph& g) {
    Adjacency a(g);
    int n = a.rows + a.cols;  // rows first, then columns
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> stack{start};
        comp[start] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v < a.rows) {
                for (int c : a.row_nbrs[v]) {
                    if (comp[a.rows + c] < 0) {
                        comp[a.rows + c] = next;
                        stack.push_back(a.rows + c);
                    }
                }
            } else {
                for (int r : a.col_nbrs[v - a.rows]) {
                    if (comp[r] < 0) {
                        comp[r] = next;
                        stack.push_back(r);
                    }
                }
            }
        }
        ++next;
    }
    std::vector<VertexSelection> components(next);
    for (int r = 0; r < a.rows; ++r) components[comp[r]].rows.push_back(r);
    for (int c = 0; c < a.cols; ++c) components[comp[a.rows + c]].cols.push_back(c);
    return components;
}

int generic_rank(const SignedBipartiteGraph& g) {
    int total = 0;
    for (const auto& comp : connected_components(g)) {
        total += static_cast<int>(std::min(comp.rows.size(), comp.cols.size()));
    }
    return total;
}

std::optional<Cycle> has_four_cycle_three_negative(const SignedBipartiteGraph& g) {
    Adjacency a(g);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = i + 1; j < a.rows; ++j) {
            for (int k = 0; k < a.cols; ++k) {
                for (int l = k + 1; l < a.cols; ++l) {
                    int s1 = a.sign[i][k], s2 = a.sign[i][l];
                    int s3 = a.sign[j][k], s4 = a.sign[j][l];
                    if (!s1 || !s2 || !s3 || !s4) continue;
                    int negatives = (s1 < 0) + (s2 < 0) + (s3 < 0) + (s4 < 0);
                    if (negatives != 3) continue;
                    Cycle c{{k, l}, {i, j}, 0};
                    c.cpair_count = cpair_count_of(a, c.cols, c.rows);
                    return c;
                }
            }
        }
    }
    return std::nullopt;
}

bool single_cycle_with_short_hair(const SignedBipartiteGraph& g) {
    if (connected_components(g).size() != 1) return false;
    auto cycles = enumerate_cycles(g, 2);
    if (cycles.items.size() >= 2) return false;
    if (cycles.items.empty()) return true;  // a connected tree

    const Cycle& gamma = cycles.items.front();
    Adjacency a(g);
    for (int r = 0; r < a.rows; ++r) {
        if (gamma.contains_row(r)) continue;
        if (a.row_nbrs[r].size() != 1) return false;
        if (!gamma.contains_col(a.row_nbrs[r].front())) return false;
    }
    for (int c = 0; c < a.cols; ++c) {
        if (gamma.contains_col(c)) continue;
        if (a.col_nbrs[c].size() != 1) return false;
        if (!gamma.contains_row(a.col_nbrs[c].front())) return false;
    }
    return true;
}

std::string to_dot(const SignedBipartiteGraph& g) {
    std::ostringstream os;
    os << "graph pattern {\n";
    for (int c = 0; c < g.col_count; ++c) {
        os << "  C" << (c + 1) << " [shape=box];\n";
    }
    for (int r = 0; r < g.row_count; ++r) {
        os << "  R" << (r + 1) << " [shape=circle];\n";
    }
    std::vector<SignedBipartiteGraph::Edge> edges = g.edges;
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.col, a.row) < std::tie(b.col, b.row);
    });
    for (const auto& e : edges) {
        os << "  C" << (e.col + 1) << " -- R" << (e.row + 1)
           << (e.sign > 0 ? " [style=dashed];\n" : " [style=solid];\n");
    }
    os << "}\n";
    return os.str();
}

}  // namespace signdet
