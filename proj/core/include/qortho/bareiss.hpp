#ifndef QORTHO_BAREISS_HPP
#define QORTHO_BAREISS_HPP

#include <qortho/scalar.hpp>

#include <optional>
#include <vector>

namespace qortho {

using Matrix = std::vector<std::vector<Scalar>>;

/// Solves the square system A x = b by fraction-free elimination. Rows are
/// cleared of denominators first; pivots are the first nonzero entry in row
/// order. Returns nullopt when A is singular.
std::optional<std::vector<Scalar>> bareiss_solve(const Matrix& a, const std::vector<Scalar>& b);

/// Exact determinant of a square matrix.
Scalar determinant(const Matrix& a);

/// Unique solution of an m x n system with m >= n, or nullopt when the
/// columns are dependent or the system is inconsistent.
std::optional<std::vector<Scalar>> solve_consistent(const Matrix& a, const std::vector<Scalar>& b);

} // namespace qortho

#endif // QORTHO_BAREISS_HPP
