#include "doctest.h"

#include "oracle.hpp"

#include <qortho/bareiss.hpp>

#include <random>

using namespace qortho;

TEST_CASE("fraction-free solve on small systems") {
    const Matrix a{{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(3)}};
    const auto x = bareiss_solve(a, {Scalar(3), Scalar(5)});
    REQUIRE(x);
    CHECK((*x)[0] == Scalar(4, 5));
    CHECK((*x)[1] == Scalar(7, 5));
    CHECK(determinant(a) == 5);
    CHECK(determinant(Matrix{}) == 1);
}

TEST_CASE("zero leading entry needs a row swap") {
    const Matrix a{{Scalar(0), Scalar(1)}, {Scalar(1, 2), Scalar(0)}};
    const auto x = bareiss_solve(a, {Scalar(7), Scalar(3)});
    REQUIRE(x);
    CHECK((*x)[0] == 6);
    CHECK((*x)[1] == 7);
    CHECK(determinant(a) == Scalar(-1, 2));
}

TEST_CASE("singular systems are reported") {
    const Matrix a{{Scalar(1), Scalar(2)}, {Scalar(1, 2), Scalar(1)}};
    CHECK_FALSE(bareiss_solve(a, {Scalar(1), Scalar(1)}));
    CHECK(determinant(a) == 0);
}

TEST_CASE("overdetermined systems") {
    const Matrix a{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1)}};
    const auto ok = solve_consistent(a, {Scalar(2), Scalar(3), Scalar(5)});
    REQUIRE(ok);
    CHECK((*ok)[0] == 2);
    CHECK((*ok)[1] == 3);
    CHECK_FALSE(solve_consistent(a, {Scalar(2), Scalar(3), Scalar(6)}));
    const Matrix dep{{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}, {Scalar(3), Scalar(3)}};
    CHECK_FALSE(solve_consistent(dep, {Scalar(1), Scalar(2), Scalar(3)}));
}

TEST_CASE("random rational systems agree with dense Gauss-Jordan") {
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        Matrix a(n, std::vector<Scalar>(n));
        std::vector<Scalar> b(n);
        for (auto& row : a) {
            for (auto& e : row) {
                e = Scalar(num(rng), den(rng));
                e.canonicalize();
            }
        }
        for (auto& e : b) {
            e = Scalar(num(rng), den(rng));
            e.canonicalize();
        }
        const auto ours = bareiss_solve(a, b);
        const auto ref = oracle::gauss_jordan(a, b);
        REQUIRE(ours.has_value() == ref.has_value());
        if (ours) CHECK(*ours == *ref);
        if (!ours) CHECK(determinant(a) == 0);
    }
}
