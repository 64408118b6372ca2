#include "signdet/matrix.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace signdet {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw EmptyMatrix("matrix dimensions must be positive");
    a_.resize(static_cast<std::size_t>(rows) * cols);
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RationalMatrix(static_cast<int>(rows.size()),
                     rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) {
            throw ParseError("ragged initializer row", i + 1);
        }
        int j = 0;
        for (const auto& v : row) at(i, j++) = v;
        ++i;
    }
}

const Rational& RationalMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw IndexOutOfRange("matrix index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of range");
    }
    return a_[static_cast<std::size_t>(i) * cols_ + j];
}

Rational& RationalMatrix::at(int i, int j) {
    return const_cast<Rational&>(std::as_const(*this).at(i, j));
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<int>& rows,
                                         const std::vector<int>& cols) const {
    RationalMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return s;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

SignPattern::SignPattern(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw EmptyMatrix("pattern dimensions must be positive");
    e_.resize(static_cast<std::size_t>(rows) * cols);
}

const PatternEntry& SignPattern::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw IndexOutOfRange("pattern index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of range");
    }
    return e_[static_cast<std::size_t>(i) * cols_ + j];
}

PatternEntry& SignPattern::at(int i, int j) {
    return const_cast<PatternEntry&>(std::as_const(*this).at(i, j));
}

SignPattern SignPattern::transpose() const {
    SignPattern t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

SignPattern SignPattern::submatrix(const std::vector<int>& rows,
                                   const std::vector<int>& cols) const {
    SignPattern s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return s;
}

bool SignPattern::diagonal_nonzero() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        if (sign(i, i) == 0) return false;
    return true;
}

namespace {

RationalMatrix parse_csv(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) {
            if (rows.empty()) continue;  // leading blank lines
            // Blank lines are only tolerated at the end of the file.
            std::string rest;
            while (std::getline(in, rest)) {
                if (!rest.empty() && rest.back() == '\r') rest.pop_back();
                if (rest.find_first_not_of(" \t") != std::string::npos) {
                    throw ParseError("blank line inside CSV body", lineno);
                }
            }
            break;
        }
        std::vector<Rational> row;
        std::size_t pos = 0;
        int field = 0;
        while (true) {
            std::size_t comma = line.find(',', pos);
            std::string cell = line.substr(pos, comma == std::string::npos
                                                    ? std::string::npos
                                                    : comma - pos);
            ++field;
            try {
                row.push_back(Rational::parse(cell));
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()), lineno, field);
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("row has " + std::to_string(row.size()) +
                                 " fields, expected " +
                                 std::to_string(rows.front().size()),
                             lineno, static_cast<int>(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw EmptyMatrix("CSV input holds no rows");
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

RationalMatrix parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("entries")) {
        throw ParseError("JSON matrix needs keys rows, cols, entries");
    }
    if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer()) {
        throw ParseError("rows and cols must be integers");
    }
    int rows = doc["rows"].get<int>();
    int cols = doc["cols"].get<int>();
    if (rows < 1 || cols < 1) throw EmptyMatrix("JSON matrix dimensions must be positive");
    const auto& entries = doc["entries"];
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows) {
        throw ParseError("entries must be an array of " + std::to_string(rows) + " rows");
    }
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            throw ParseError("entry row has wrong length", i + 1);
        }
        for (int j = 0; j < cols; ++j) {
            const auto& cell = row[j];
            try {
                if (cell.is_number_integer()) {
                    m.at(i, j) = Rational(cell.get<long long>());
                } else if (cell.is_string()) {
                    m.at(i, j) = Rational::parse(cell.get<std::string>());
                } else {
                    // Float JSON numbers round-trip through binary floating
                    // point and lose exactness; insist on strings instead.
                    throw ParseError("non-integer numeric entries must be strings");
                }
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()), i + 1, j + 1);
            }
        }
    }
    return m;
}

}  // namespace

RationalMatrix parse_matrix(const std::string& text, MatrixFormat format) {
    return format == MatrixFormat::Csv ? parse_csv(text) : parse_json(text);
}

std::string format_matrix(const RationalMatrix& m, MatrixFormat format) {
    if (format == MatrixFormat::Csv) {
        std::ostringstream os;
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) {
                if (j) os << ',';
                os << m.at(i, j);
            }
            os << '\n';
        }
        return os.str();
    }
    nlohmann::ordered_json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    auto entries = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        entries.push_back(std::move(row));
    }
    doc["entries"] = std::move(entries);
    return doc.dump();
}

SignPattern sign_pattern_of(const RationalMatrix& m, const std::string& tag) {
    SignPattern p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            int s = m.at(i, j).sign();
            if (s != 0) p.at(i, j) = PatternEntry{s, make_var(tag, i, j)};
        }
    }
    return p;
}

int rank(const RationalMatrix& m) {
    // One-step fraction-free elimination: row-reduce a working copy,
    // dividing each 2x2 update by the previous pivot. All intermediate
    // values stay exact.
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rational>> w(rows, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) w[i][j] = m.at(i, j);

    Rational prev_pivot(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (!w[i][c].is_zero()) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        std::swap(w[r], w[pivot]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                w[i][j] = (w[r][c] * w[i][j] - w[i][c] * w[r][j]) / prev_pivot;
            }
            w[i][c] = Rational(0);
        }
        prev_pivot = w[r][c];
        ++r;
    }
    return r;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("determinant needs a square matrix");
    int n = m.rows();
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = m.at(i, j);

    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i) {
            if (!w[i][c].is_zero()) { pivot = i; break; }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != c) {
            std::swap(w[pivot], w[c]);
            det = -det;
        }
        det *= w[c][c];
        for (int i = c + 1; i < n; ++i) {
            Rational factor = w[i][c] / w[c][c];
            for (int j = c; j < n; ++j) w[i][j] -= factor * w[c][j];
        }
    }
    return det;
}

namespace {

void check_transform_indices(int rows, int cols, TransformOp op, int i, int j) {
    bool needs_pair = op == TransformOp::SwapRows || op == TransformOp::SwapCols;
    bool row_scope = op == TransformOp::SwapRows || op == TransformOp::NegateRow;
    int bound = row_scope ? rows : cols;
    if (i < 0 || i >= bound || (needs_pair && (j < 0 || j >= bound))) {
        throw IndexOutOfRange("transform index out of range");
    }
}

}  // namespace

SignPattern transform(const SignPattern& p, TransformOp op, int i, int j) {
    check_transform_indices(p.rows(), p.cols(), op, i, j);
    SignPattern out = p;
    switch (op) {
        case TransformOp::SwapRows:
            for (int c = 0; c < p.cols(); ++c) std::swap(out.at(i, c), out.at(j, c));
            break;
        case TransformOp::SwapCols:
            for (int r = 0; r < p.rows(); ++r) std::swap(out.at(r, i), out.at(r, j));
            break;
        case TransformOp::NegateRow:
            for (int c = 0; c < p.cols(); ++c) out.at(i, c).sign = -out.at(i, c).sign;
            break;
        case TransformOp::NegateCol:
            for (int r = 0; r < p.rows(); ++r) out.at(r, i).sign = -out.at(r, i).sign;
            break;
    }
    return out;
}

RationalMatrix transform(const RationalMatrix& m, TransformOp op, int i, int j) {
    check_transform_indices(m.rows(), m.cols(), op, i, j);
    RationalMatrix out = m;
    switch (op) {
        case TransformOp::SwapRows:
            for (int c = 0; c < m.cols(); ++c) std::swap(out.at(i, c), out.at(j, c));
            break;
        case TransformOp::SwapCols:
            for (int r = 0; r < m.rows(); ++r) std::swap(out.at(r, i), out.at(r, j));
            break;
        case TransformOp::NegateRow:
            for (int c = 0; c < m.cols(); ++c) out.at(i, c) = -out.at(i, c);
            break;
        case TransformOp::NegateCol:
            for (int r = 0; r < m.rows(); ++r) out.at(r, i) = -out.at(r, i);
            break;
    }
    return out;
}

int NormalizedDiagonal::permutation_sign() const {
    std::vector<bool> seen(row_perm.size(), false);
    int sign = 1;
    for (std::size_t start = 0; start < row_perm.size(); ++start) {
        if (seen[start]) continue;
        std::size_t len = 0;
        for (std::size_t v = start; !seen[v]; v = static_cast<std::size_t>(row_perm[v])) {
            seen[v] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::optional<NormalizedDiagonal> normalize_diagonal(const SignPattern& p) {
    if (p.rows() != p.cols()) {
        throw NotSquare("diagonal normalization needs a square pattern");
    }
    int n = p.rows();
    // match_row[c] = row assigned to column c. Columns are processed in
    // order and augmenting paths try rows in increasing index, so the
    // resulting matching is the lexicographically least one.
    std::vector<int> match_row(n, -1), row_owner(n, -1);
    std::function<bool(int, std::vector<bool>&)> augment =
        [&](int col, std::vector<bool>& visited) {
            for (int r = 0; r < n; ++r) {
                if (p.sign(r, col) == 0 || visited[r]) continue;
                visited[r] = true;
                if (row_owner[r] < 0 || augment(row_owner[r], visited)) {
                    row_owner[r] = col;
                    match_row[col] = r;
                    return true;
                }
            }
            return false;
        };
    for (int c = 0; c < n; ++c) {
        std::vector<bool> visited(n, false);
        if (!augment(c, visited)) return std::nullopt;
    }

    NormalizedDiagonal out{SignPattern(n, n), std::vector<int>(n), {}};
    for (int c = 0; c < n; ++c) {
        out.row_perm[c] = match_row[c];
        out.matching.emplace_back(c, match_row[c]);
        for (int j = 0; j < n; ++j) out.pattern.at(c, j) = p.at(match_row[c], j);
    }
    return out;
}

}  // namespace signdet
