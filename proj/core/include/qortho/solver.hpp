#ifndef QORTHO_SOLVER_HPP
#define QORTHO_SOLVER_HPP

#include <qortho/bareiss.hpp>
#include <qortho/poly.hpp>
#include <qortho/weights.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qortho {

/// Multi-index (n_1, ..., n_r), stored 0-based.
struct MultiIndex {
    std::vector<long> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<long> e) : entries(std::move(e)) {}
    MultiIndex(std::initializer_list<long> e) : entries(e) {}

    std::size_t size() const { return entries.size(); }
    long operator[](std::size_t i) const { return entries[i]; }
    long& operator[](std::size_t i) { return entries[i]; }

    long norm() const;
    /// n_0 + ... + n_(i-1).
    long prefix(std::size_t i) const;
    bool is_zero() const { return norm() == 0; }
    /// Copy with entry i shifted by delta.
    MultiIndex shifted(std::size_t i, long delta) const;
    std::string str() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// All multi-indices of length r with norm at most max_norm, ordered by
/// norm and then lexicographically.
std::vector<MultiIndex> multi_indices(std::size_t r, long max_norm);

/// Orthogonality conditions for a multi-index: one row per (component i,
/// order k < n_i); columns are the unknowns followed by the right-hand side.
struct OrthoSystem {
    Matrix matrix;
    std::vector<std::pair<std::size_t, long>> rows;
};

/// sum_{s=0}^{N} f(x(s)) [s]^(k) weight_i(s) Delta x(s - 1/2).
Scalar inner_sum_q(const KravchukParams& params, std::size_t i, const Poly& f, long k);

/// Monic type II polynomial in X = x(s) with unknowns on the q-Stirling basis.
OrthoSystem build_system_q(const KravchukParams& params, const MultiIndex& n);
Poly solve_type2_q(const KravchukParams& params, const MultiIndex& n);

/// (-x)_j = (-x)(-x+1)...(-x+j-1).
Poly rising_neg(long j);
/// x(x-1)...(x-j+1).
Poly falling(long j);

/// sum_{x=0}^{N} f(x) (-x)_k weight_i(x).
Scalar inner_sum_classical(const ClassicalParams& params, std::size_t i, const Poly& f, long k);

/// Monic type II polynomial in x with unknowns on the falling-factorial basis.
OrthoSystem build_system_classical(const ClassicalParams& params, const MultiIndex& n);
Poly solve_type2_classical(const ClassicalParams& params, const MultiIndex& n);

/// The |n| inner sums of K, in row order.
std::vector<Scalar> orthogonality_residuals(const KravchukParams& params, const MultiIndex& n,
                                            const Poly& K);
std::vector<Scalar> orthogonality_residuals(const ClassicalParams& params, const MultiIndex& n,
                                            const Poly& K);

/// Determinant of the coefficient block of the orthogonality system.
Scalar normality_determinant(const KravchukParams& params, const MultiIndex& n);

} // namespace qortho

#endif // QORTHO_SOLVER_HPP
