#include <qortho/bareiss.hpp>

#include <qortho/errors.hpp>

#include <utility>

namespace qortho {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

struct Elimination {
    IntMatrix m;
    std::size_t rank = 0;
    int swaps = 0;
    Scalar row_scale = 1;  // product of the factors used to clear denominators
};

// Rows of [a | b] scaled to integers.
Elimination to_integer(const Matrix& a, const std::vector<Scalar>* b) {
    Elimination e;
    e.m.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Integer l = 1;
        auto absorb = [&l](const Scalar& x) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        };
        for (const auto& x : a[i]) absorb(x);
        if (b) absorb((*b)[i]);
        std::vector<Integer> row;
        row.reserve(a[i].size() + (b ? 1 : 0));
        for (const auto& x : a[i]) row.emplace_back(x.get_num() * (l / x.get_den()));
        if (b) row.emplace_back((*b)[i].get_num() * (l / (*b)[i].get_den()));
        e.m.push_back(std::move(row));
        e.row_scale *= Scalar(l);
    }
    return e;
}

// Fraction-free forward elimination over the first `cols` columns.
void eliminate(Elimination& e, std::size_t cols) {
    auto& m = e.m;
    const std::size_t rows = m.size();
    if (rows == 0) return;
    const std::size_t width = m[0].size();
    Integer prev = 1;
    std::size_t k = 0;
    for (std::size_t col = 0; col < cols && k < rows; ++col) {
        std::size_t piv = k;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            ++e.swaps;
        }
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < width; ++j) {
                Integer t = m[i][j] * m[k][col] - m[i][col] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[k][col];
        ++k;
    }
    e.rank = k;
}

void check_shape(const Matrix& a, const std::vector<Scalar>* b, bool square) {
    for (const auto& row : a) {
        if (row.size() != a.front().size()) throw ParameterError("ragged matrix");
    }
    if (square && !a.empty() && a.front().size() != a.size()) {
        throw ParameterError("matrix is not square");
    }
    if (b && b->size() != a.size()) throw ParameterError("right-hand side length mismatch");
}

// Back substitution on an upper-triangular leading n x n block.
std::vector<Scalar> back_substitute(const IntMatrix& m, std::size_t n) {
    std::vector<Scalar> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Scalar acc(m[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Scalar(m[ii][j]) * x[j];
        x[ii] = acc / Scalar(m[ii][ii]);
    }
    return x;
}

} // namespace

std::optional<std::vector<Scalar>> bareiss_solve(const Matrix& a, const std::vector<Scalar>& b) {
    check_shape(a, &b, true);
    const std::size_t n = a.size();
    if (n == 0) return std::vector<Scalar>{};
    Elimination e = to_integer(a, &b);
    eliminate(e, n);
    if (e.rank < n) return std::nullopt;
    return back_substitute(e.m, n);
}

Scalar determinant(const Matrix& a) {
    check_shape(a, nullptr, true);
    const std::size_t n = a.size();
    if (n == 0) return Scalar(1);
    Elimination e = to_integer(a, nullptr);
    eliminate(e, n);
    if (e.rank < n) return Scalar(0);
    Scalar det(e.m[n - 1][n - 1]);
    if (e.swaps % 2 != 0) det = -det;
    return det / e.row_scale;
}

std::optional<std::vector<Scalar>> solve_consistent(const Matrix& a, const std::vector<Scalar>& b) {
    check_shape(a, &b, false);
    if (a.empty()) return std::vector<Scalar>{};
    const std::size_t n = a.front().size();
    if (a.size() < n) return std::nullopt;
    Elimination e = to_integer(a, &b);
    eliminate(e, n);
    if (e.rank < n) return std::nullopt;
    for (std::size_t i = n; i < e.m.size(); ++i) {
        if (e.m[i][n] != 0) return std::nullopt;
    }
    return back_substitute(e.m, n);
}

} // namespace qortho
