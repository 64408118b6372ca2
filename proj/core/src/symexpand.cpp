#include "signdet/symexpand.hpp"

#include "signdet/errors.hpp"

#include <bit>
#include <cstdint>

namespace signdet {

PolyMatrix symbolic_product(const RationalMatrix& s, const SignPattern& u) {
    if (s.cols() != u.rows()) {
        throw DimensionMismatch("product needs " + std::to_string(s.cols()) +
                                " pattern rows, got " + std::to_string(u.rows()));
    }
    PolyMatrix out(s.rows(), std::vector<MultilinearPoly>(u.cols()));
    for (int i = 0; i < s.rows(); ++i) {
        for (int j = 0; j < u.cols(); ++j) {
            MultilinearPoly cell;
            for (int k = 0; k < s.cols(); ++k) {
                const PatternEntry& e = u.at(k, j);
                if (e.sign == 0 || s.at(i, k).is_zero()) continue;
                cell.add_term(Monomial{0, {e.var}},
                              s.at(i, k) * Rational(e.sign));
            }
            out[i][j] = std::move(cell);
        }
    }
    return out;
}

MultilinearPoly det_poly_matrix(const PolyMatrix& m, bool minus_t_diagonal, int cap) {
    int n = static_cast<int>(m.size());
    if (n == 0) throw EmptyMatrix("determinant of an empty matrix");
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n) {
            throw NotSquare("polynomial determinant needs a square matrix");
        }
    }
    if (n > cap) {
        throw TooLarge("determinant expansion capped at " + std::to_string(cap) +
                       "x" + std::to_string(cap) + ", got " + std::to_string(n));
    }

    auto entry = [&](int i, int j) {
        MultilinearPoly e = m[i][j];
        if (minus_t_diagonal && i == j) e += MultilinearPoly::t_term(Rational(-1));
        return e;
    };

    // Column-subset dynamic programming: after processing row i, f[mask]
    // holds the determinant of the first i+1 rows on the columns in mask.
    // Signs follow Laplace expansion along the last row added.
    std::uint32_t full = (n >= 32) ? 0 : (std::uint32_t{1} << n) - 1;
    std::vector<MultilinearPoly> f(full + 1);
    f[0] = MultilinearPoly::constant(Rational(1));
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int row = std::popcount(mask) - 1;
        MultilinearPoly acc;
        int position = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (std::uint32_t{1} << j))) continue;
            MultilinearPoly cell = entry(row, j);
            if (!cell.is_zero()) {
                MultilinearPoly sub = f[mask & ~(std::uint32_t{1} << j)] * cell;
                if ((row + position) % 2 == 0) acc += sub;
                else acc -= sub;
            }
            ++position;
        }
        f[mask] = std::move(acc);
    }
    return f[full];
}

MultilinearPoly det_expansion(const SignPattern& p, int cap) {
    if (p.rows() != p.cols()) {
        throw NotSquare("pattern determinant needs a square pattern");
    }
    if (p.rows() > cap) {
        throw TooLarge("determinant expansion capped at " + std::to_string(cap) +
                       "x" + std::to_string(cap) + ", got " + std::to_string(p.rows()));
    }
    PolyMatrix m(p.rows(), std::vector<MultilinearPoly>(p.cols()));
    for (int i = 0; i < p.rows(); ++i) {
        for (int j = 0; j < p.cols(); ++j) {
            const PatternEntry& e = p.at(i, j);
            if (e.sign != 0) {
                m[i][j] = MultilinearPoly::variable(e.var, Rational(e.sign));
            }
        }
    }
    return det_poly_matrix(m, false, cap);
}

}  // namespace signdet
