#pragma once

#include "signdet/errors.hpp"
#include "signdet/rational.hpp"
#include "signdet/types.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace signdet {

/// Dense matrix of exact rationals. Indices are 0-based; dimensions are
/// at least 1x1. Instances are value types and all operations on them
/// are pure, so they can be shared freely across threads.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int i, int j) const;
    Rational& at(int i, int j);

    RationalMatrix transpose() const;

    /// Submatrix on the given 0-based row and column index lists.
    RationalMatrix submatrix(const std::vector<int>& rows,
                             const std::vector<int>& cols) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
    int rows_;
    int cols_;
    std::vector<Rational> a_;
};

/// One cell of a sign pattern: zero, or a signed symbolic variable.
struct PatternEntry {
    int sign = 0;  // -1, 0, +1
    VarId var;     // meaningful only when sign != 0
};

/// Matrix of signed symbolic variables with structural zeros. Every nonzero
/// cell owns a distinct variable, so determinant expansions over a pattern
/// are multilinear with no repeated factors.
class SignPattern {
public:
    SignPattern(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const PatternEntry& at(int i, int j) const;
    PatternEntry& at(int i, int j);

    int sign(int i, int j) const { return at(i, j).sign; }

    SignPattern transpose() const;
    SignPattern submatrix(const std::vector<int>& rows,
                          const std::vector<int>& cols) const;

    /// True when no cell is a structural zero on the main diagonal.
    bool diagonal_nonzero() const;

private:
    int rows_;
    int cols_;
    std::vector<PatternEntry> e_;
};

enum class MatrixFormat { Csv, Json };

/// Parses CSV (comma-separated rows, one row per line) or JSON
/// ({"rows", "cols", "entries"}) into an exact matrix. Decimal literals
/// convert exactly; JSON numeric entries must be integers, anything
/// fractional has to be spelled as a "p/q" or decimal string.
RationalMatrix parse_matrix(const std::string& text, MatrixFormat format);

/// Serializes a matrix back to the given format with entries as exact
/// "p/q" strings (CSV keeps integer cells as plain integers).
std::string format_matrix(const RationalMatrix& m, MatrixFormat format);

/// Sign pattern of a matrix; nonzero cells get fresh variables named
/// tag_row_col with 1-based indices.
SignPattern sign_pattern_of(const RationalMatrix& m, const std::string& tag = "A");

/// Exact rank via fraction-free (Bareiss-style) elimination.
int rank(const RationalMatrix& m);

/// Exact determinant of a square matrix. Throws NotSquare.
Rational determinant(const RationalMatrix& m);

enum class TransformOp { SwapRows, SwapCols, NegateRow, NegateCol };

/// Elementary pattern transform. Swap ops take two indices, negate ops use
/// only the first. Variables travel with their cells; negation flips the
/// sign and keeps the variable.
SignPattern transform(const SignPattern& p, TransformOp op, int i, int j = -1);
RationalMatrix transform(const RationalMatrix& m, TransformOp op, int i, int j = -1);

/// Result of permuting rows so that the whole main diagonal is nonzero.
struct NormalizedDiagonal {
    SignPattern pattern;        // row-permuted copy of the input
    std::vector<int> row_perm;  // row_perm[i] = source row now at position i
    /// The diagonal matching in source coordinates: (column j, row row_perm[j]).
    std::vector<std::pair<int, int>> matching;

    /// +1 for an even row permutation, -1 for odd.
    int permutation_sign() const;
};

/// Finds a row permutation putting a nonzero in every diagonal cell, via
/// augmenting-path bipartite matching that scans columns in order and
/// prefers lower row indices. Returns nullopt when the pattern has no
/// perfect matching (equivalently, its determinant is identically zero).
/// Throws NotSquare for rectangular input.
std::optional<NormalizedDiagonal> normalize_diagonal(const SignPattern& p);

}  // namespace signdet
