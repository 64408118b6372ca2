#pragma once

#include "signdet/matrix.hpp"
#include "signdet/poly.hpp"

#include <vector>

namespace signdet {

/// Dense matrix whose entries are polynomials.
using PolyMatrix = std::vector<std::vector<MultilinearPoly>>;

/// Hard ceiling on the side length of symbolic determinant expansions.
inline constexpr int kDetExpansionCap = 9;

/// Full determinant of a square sign pattern as a multilinear polynomial;
/// every coefficient is +1 or -1. Throws NotSquare, and TooLarge past the
/// cap (the expansion is exponential in the side length).
MultilinearPoly det_expansion(const SignPattern& p, int cap = kDetExpansionCap);

/// Entrywise symbolic product S * U of a rational matrix with a sign
/// pattern: result(i,j) = sum_k S(i,k) * U(k,j). Throws DimensionMismatch.
PolyMatrix symbolic_product(const RationalMatrix& s, const SignPattern& u);

/// Determinant of a square polynomial matrix, optionally with -t added to
/// each diagonal cell first (giving det(M - tI)). Subset dynamic
/// programming over columns; throws TooLarge past the cap and Error if a
/// product would repeat a variable.
MultilinearPoly det_poly_matrix(const PolyMatrix& m, bool minus_t_diagonal,
                                int cap = kDetExpansionCap);

}  // namespace signdet
