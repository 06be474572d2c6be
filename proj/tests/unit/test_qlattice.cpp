#include "doctest.h"

#include "oracle.hpp"

#include <qortho/errors.hpp>
#include <qortho/grid.hpp>
#include <qortho/qlattice.hpp>

using namespace qortho;

namespace {
const std::vector<Scalar> kVs{Scalar(2), Scalar(1, 2), Scalar(4, 5), Scalar(5, 4), Scalar(3)};
}

TEST_CASE("context rejects v <= 0 and v = 1") {
    CHECK_THROWS_AS(QContext(Scalar(1)), ParameterError);
    CHECK_THROWS_AS(QContext(Scalar(0)), ParameterError);
    CHECK_THROWS_AS(QContext(Scalar(-2)), ParameterError);
    QContext c(Scalar(3, 2));
    CHECK(c.q() == Scalar(9, 4));
    CHECK(c.vpow(-3) == Scalar(8, 27));
}

TEST_CASE("lattice values") {
    QContext c(Scalar(2));
    CHECK(lattice_x(c, 0) == 0);
    CHECK(lattice_x(c, 1) == 1);
    CHECK(lattice_x(c, 2) == 5);
    for (const auto& v : kVs) {
        QContext ctx(v);
        for (long s = -4; s <= 10; ++s) CHECK(lattice_x(ctx, s) == oracle::lattice(v, s));
    }
}

TEST_CASE("half-step increments telescope") {
    CHECK(delta_x_half(QContext(Scalar(2)), 1) == 2);
    CHECK(delta_x_half(QContext(Scalar(1, 2)), 0) == 2);
    for (const auto& v : kVs) {
        QContext ctx(v);
        for (long s = -3; s <= 10; ++s) CHECK(lattice_x(ctx, s) - lattice_x(ctx, s - 1) == delta_x_half(ctx, s) / ctx.v());
    }
}

TEST_CASE("q-Stirling values and polynomials") {
    QContext c(Scalar(2));
    CHECK(q_stirling_value(c, 7, 0) == 1);
    CHECK(q_stirling_value(c, 3, 1) == lattice_x(c, 3));
    CHECK(q_stirling_value(c, 2, 2) == 5);
    CHECK(q_stirling_poly(c, 0) == Poly::constant(1));
    CHECK(q_stirling_poly(c, 1) == Poly::identity());
    CHECK(q_stirling_poly(c, 2) == Poly({Scalar(0), Scalar(-1, 4), Scalar(1, 4)}));
    CHECK(q_stirling_poly(c, 2)(lattice_x(c, 2)) == 5);
    for (const auto& v : kVs) {
        QContext ctx(v);
        for (int k = 0; k <= 6; ++k) {
            const Poly S = q_stirling_poly(ctx, k);
            CHECK(S.leading() == ctx.qpow(-static_cast<long>(k) * (k - 1) / 2));
            for (long s = -2; s <= 12; ++s) CHECK(S(lattice_x(ctx, s)) == q_stirling_value(ctx, s, k));
        }
    }
}

TEST_CASE("symmetric q-numbers") {
    QContext c(Scalar(2));
    CHECK(q_number_sym(c, 1) == 1);
    CHECK(q_number_sym(c, 0) == 0);
    CHECK(q_number_sym(c, 2) == Scalar(5, 2));
    for (const auto& v : kVs) {
        QContext ctx(v);
        for (long n = -3; n <= 8; ++n) {
            CHECK(q_number_sym(ctx, n) == ctx.vpow(1 - n) * lattice_x(ctx, n));
            if (n >= 1) CHECK(q_number_sym(ctx, n) == oracle::qnum_gamma(v, n));
        }
    }
}

TEST_CASE("Gamma_q at positive integers agrees with both branch formulas") {
    QContext c(Scalar(2));
    CHECK(q_gamma_int(c, 1) == 1);
    CHECK(q_gamma_int(c, 2) == 1);
    CHECK(q_gamma_int(c, 3) == 5);
    CHECK_THROWS_AS(q_gamma_int(c, 0), ParameterError);
    CHECK_THROWS_AS(q_gamma_int(c, -2), ParameterError);
    for (const auto& v : kVs) {
        QContext ctx(v);
        for (long n = 1; n <= 8; ++n) CHECK(q_gamma_int(ctx, n) == oracle::gamma_branch(v, n));
    }
}

TEST_CASE("q-factorial") {
    QContext c(Scalar(2));
    CHECK(q_factorial_sym(c, 0) == 1);
    CHECK(q_factorial_sym(c, 1) == 1);
    CHECK(q_factorial_sym(c, 2) == Scalar(5, 2));
    for (const auto& v : kVs) {
        QContext ctx(v);
        for (long n = 0; n <= 10; ++n) {
            CHECK(q_factorial_sym(ctx, n) * ctx.vpow(n * (n - 1) / 2) == q_gamma_int(ctx, n + 1));
        }
    }
}

TEST_CASE("Gaussian binomials") {
    QContext c(Scalar(2));
    CHECK(q_binomial_bracket(c, 5, 0) == 1);
    CHECK(q_binomial_bracket(c, 2, 1) == 5);
    CHECK(q_binomial_bracket(c, 3, -1) == 0);
    CHECK(q_binomial_bracket(c, 3, 4) == 0);
    for (const auto& v : kVs) {
        QContext ctx(v);
        for (long m = 0; m <= 8; ++m) {
            for (long k = 0; k <= m; ++k) {
                CHECK(q_binomial_bracket(ctx, m, k) == q_binomial_bracket(ctx, m, m - k));
                if (m >= 1) {
                    CHECK(q_binomial_bracket(ctx, m, k) ==
                          q_binomial_bracket(ctx, m - 1, k - 1) + ctx.qpow(k) * q_binomial_bracket(ctx, m - 1, k));
                }
            }
        }
    }
}

TEST_CASE("q-Pochhammer") {
    QContext c(Scalar(2));
    CHECK(q_pochhammer(c, Scalar(3), 0) == 1);
    CHECK(q_pochhammer(c, Scalar(1), 3) == 0);
    CHECK(q_pochhammer(c, Scalar(1, 2), 2) == Scalar(-1, 2));
}

TEST_CASE("Stirling basis conversion round-trips") {
    QContext c(Scalar(4, 5));
    const Poly p({Scalar(3), Scalar(-1, 2), Scalar(0), Scalar(7), Scalar(2, 9)});
    const auto coeffs = to_stirling_basis(c, p);
    CHECK(coeffs.size() == 5);
    CHECK(from_stirling_basis(c, coeffs) == p);
    CHECK(to_stirling_basis(c, q_stirling_poly(c, 3)) == std::vector<Scalar>{0, 0, 0, 1});
}

TEST_CASE("grid functions") {
    GridFunction g = tabulate(-2, 3, [](long s) { return Scalar(s * s); });
    CHECK(g.first() == -2);
    CHECK(g.last() == 3);
    CHECK(g.at(-2) == 4);
    CHECK(g.max_abs() == 9);
    CHECK_FALSE(g.all_zero());
    CHECK_THROWS_AS(g.at(4), RangeError);
}
