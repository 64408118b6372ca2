#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>

namespace signdet {

/// Identity of one symbolic matrix entry. Row and column are 1-based so the
/// rendered form ("U_3_1") matches the mathematical indexing of the entry.
struct VarId {
    std::string tag;
    int row = 0;
    int col = 0;

    friend bool operator==(const VarId& a, const VarId& b) {
        return a.row == b.row && a.col == b.col && a.tag == b.tag;
    }
    friend bool operator<(const VarId& a, const VarId& b) {
        return std::tie(a.tag, a.row, a.col) < std::tie(b.tag, b.row, b.col);
    }

    std::string str() const {
        return tag + "_" + std::to_string(row) + "_" + std::to_string(col);
    }
};

/// Builds a VarId from 0-based matrix indices.
inline VarId make_var(std::string tag, int row0, int col0) {
    return VarId{std::move(tag), row0 + 1, col0 + 1};
}

/// Term-sign census of a multilinear determinant expansion: t terms in
/// total, m_plus with positive and m_minus with negative coefficient.
struct SignCounts {
    std::int64_t t = 0;
    std::int64_t m_plus = 0;
    std::int64_t m_minus = 0;

    std::int64_t m() const { return m_plus < m_minus ? m_plus : m_minus; }

    friend bool operator==(const SignCounts& a, const SignCounts& b) {
        return a.t == b.t && a.m_plus == b.m_plus && a.m_minus == b.m_minus;
    }
};

}  // namespace signdet
