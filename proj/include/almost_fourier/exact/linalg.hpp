#pragma once

#include <optional>
#include <string>
#include <vector>

#include "almost_fourier/exact/matrix.hpp"

namespace almost_fourier::exact {

/// Reduced row echelon form computed by Gauss-Jordan elimination.
struct Echelon {
  ScalarMat reduced;
  std::vector<std::size_t> pivot_cols;
};

Echelon rref(const ScalarMat& m);

/// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(const ScalarMat& m);

/// Determinant by fraction-free (Bareiss) elimination. Throws NonSquare.
Scalar det(const ScalarMat& m);

/// Exact basis of the right null space {v : m v = 0}; one vector per free
/// column, with a 1 in that column. Empty iff m has full column rank.
std::vector<Vec> kernel_basis(const ScalarMat& m);

/// Greedy left-to-right choice of columns: the lexicographically first
/// maximal linearly independent subset of the columns of m.
std::vector<std::size_t> independent_columns(const ScalarMat& m);

/// Monic characteristic polynomial det(t I - m), via Hessenberg reduction.
Poly char_poly(const ScalarMat& m);

/// One exact solution of a x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve_exact(const ScalarMat& a, const Vec& b);

/// True iff prod (m - r I) over roots is the zero matrix.
bool min_poly_divides(const ScalarMat& m, const std::vector<Scalar>& roots);

/// p(m) by Horner's rule.
ScalarMat evaluate_at(const Poly& p, const ScalarMat& m);

/// Factorization of p over the candidate roots, "(t-1)^1(t-2)^6(t-4)^3";
/// any cofactor that is not 1 is appended in brackets.
std::string factor_over(const Poly& p, const std::vector<Scalar>& roots);

Vec mat_vec(const ScalarMat& m, const Vec& v);

}  // namespace almost_fourier::exact
