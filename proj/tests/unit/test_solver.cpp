#include "doctest.h"

#include "oracle.hpp"

#include <qortho/errors.hpp>
#include <qortho/solver.hpp>

using namespace qortho;

namespace {

KravchukParams make(const Scalar& v, std::vector<Scalar> p, std::vector<Scalar> beta, long N) {
    return KravchukParams{QContext(v), std::move(p), std::move(beta), N};
}

std::vector<Scalar> as_coeffs(const Poly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

} // namespace

TEST_CASE("multi-index basics") {
    MultiIndex n{2, 0, 3};
    CHECK(n.norm() == 5);
    CHECK(n.prefix(0) == 0);
    CHECK(n.prefix(2) == 2);
    CHECK(n.shifted(1, 1) == MultiIndex{2, 1, 3});
    CHECK(n.str() == "(2,0,3)");
    CHECK_FALSE(n.is_zero());
    const auto all = multi_indices(2, 2);
    REQUIRE(all.size() == 6);
    CHECK(all[0] == MultiIndex{0, 0});
    CHECK(all[1] == MultiIndex{1, 0});
    CHECK(all[2] == MultiIndex{0, 1});
    CHECK(all[3] == MultiIndex{2, 0});
    CHECK(multi_indices(3, 4).size() == 35);
}

TEST_CASE("inner sums") {
    auto params = make(Scalar(2), {Scalar(1, 3)}, {Scalar(2, 3)}, 1);
    CHECK(inner_sum_q(params, 0, Poly::constant(1), 0) == measure_mass(params, 0, 0) + measure_mass(params, 0, 1));
    CHECK(inner_sum_q(params, 0, Poly::constant(1), 0) > 0);
}

TEST_CASE("q solver: trivial and one-step cases") {
    auto params = make(Scalar(2), {Scalar(1, 3), Scalar(1, 2)}, {Scalar(2, 3), Scalar(1, 2)}, 4);
    CHECK(solve_type2_q(params, MultiIndex{0, 0}) == Poly::constant(1));
    CHECK(orthogonality_residuals(params, MultiIndex{0, 0}, Poly::constant(1)).empty());
    CHECK(normality_determinant(params, MultiIndex{0, 0}) == 1);

    auto one = make(Scalar(2), {Scalar(1, 3)}, {Scalar(2, 3)}, 4);
    const Scalar m0 = inner_sum_q(one, 0, Poly::constant(1), 0);
    const Scalar m1 = inner_sum_q(one, 0, Poly::identity(), 0);
    CHECK(solve_type2_q(one, MultiIndex{1}) == Poly({-m1 / m0, Scalar(1)}));
}

TEST_CASE("q solver: (1,1) example has vanishing residuals") {
    auto params = make(Scalar(2), {Scalar(1, 3), Scalar(1, 2)}, {Scalar(2, 3), Scalar(1, 2)}, 4);
    const MultiIndex n{1, 1};
    const Poly K = solve_type2_q(params, n);
    CHECK(K.degree() == 2);
    CHECK(K.is_monic());
    const auto res = orthogonality_residuals(params, n, K);
    REQUIRE(res.size() == 2);
    CHECK(res[0] == 0);
    CHECK(res[1] == 0);
    const auto raw = orthogonality_residuals(params, n, Poly::monomial(Scalar(1), 2));
    CHECK((raw[0] != 0 || raw[1] != 0));
}

TEST_CASE("q solver agrees with the monomial-basis oracle") {
    for (const Scalar& v : {Scalar(2), Scalar(4, 5), Scalar(5, 4)}) {
        const std::vector<Scalar> p{Scalar(1, 5), Scalar(1, 2), Scalar(2, 3)};
        const std::vector<Scalar> beta{Scalar(4, 5), Scalar(3, 7), Scalar(1, 3)};
        for (std::size_t r = 1; r <= 3; ++r) {
            const std::vector<Scalar> pr(p.begin(), p.begin() + static_cast<long>(r));
            const std::vector<Scalar> br(beta.begin(), beta.begin() + static_cast<long>(r));
            for (const auto& n : multi_indices(r, 3)) {
                for (long N : {n.norm(), n.norm() + 2}) {
                    auto params = make(v, pr, br, N);
                    const auto ref = oracle::q_type2(v, pr, br, N, n.entries);
                    REQUIRE(ref);
                    CHECK(as_coeffs(solve_type2_q(params, n)) == *ref);
                    CHECK(normality_determinant(params, n) != 0);
                }
            }
        }
    }
}

TEST_CASE("q solver: perturbing a coefficient breaks orthogonality") {
    auto params = make(Scalar(5, 4), {Scalar(1, 3), Scalar(1, 2)}, {Scalar(2, 3), Scalar(1, 2)}, 5);
    const MultiIndex n{2, 1};
    const Poly K = solve_type2_q(params, n);
    for (int k = 0; k < 3; ++k) {
        const Poly bumped = K + Poly::monomial(Scalar(1, k + 2), k);
        bool any = false;
        for (const auto& r : orthogonality_residuals(params, n, bumped)) any = any || r != 0;
        CHECK(any);
    }
}

TEST_CASE("q solver: every index is normal for valid parameters") {
    for (long N = 0; N <= 8; ++N) {
        auto params = make(Scalar(3, 2), {Scalar(1, 4), Scalar(1, 2)}, {Scalar(3, 4), Scalar(1, 2)}, N);
        for (const auto& n : multi_indices(2, N)) CHECK(normality_determinant(params, n) != 0);
    }
}

TEST_CASE("q solver: duplicated measures are singular") {
    auto params = make(Scalar(2), {Scalar(1, 3), Scalar(1, 3)}, {Scalar(2, 3), Scalar(2, 3)}, 4);
    CHECK(normality_determinant(params, MultiIndex{1, 1}) == 0);
    CHECK_THROWS_AS(solve_type2_q(params, MultiIndex{1, 1}), ParameterError);
}

TEST_CASE("q solver rejects out-of-range indices") {
    auto params = make(Scalar(2), {Scalar(1, 3)}, {Scalar(2, 3)}, 2);
    CHECK_THROWS(solve_type2_q(params, MultiIndex{3}));
    CHECK_THROWS(solve_type2_q(params, MultiIndex{1, 1}));
}

TEST_CASE("classical solver") {
    CHECK(rising_neg(0) == Poly::constant(1));
    CHECK(rising_neg(2) == Poly({Scalar(0), Scalar(-1), Scalar(1)}));
    CHECK(falling(2) == Poly({Scalar(0), Scalar(-1), Scalar(1)}));

    ClassicalParams one{{Scalar(1, 3)}, 6};
    CHECK(solve_type2_classical(one, MultiIndex{1}) == Poly({Scalar(-2), Scalar(1)}));
    CHECK(solve_type2_classical(one, MultiIndex{0}) == Poly::constant(1));

    for (std::size_t r = 1; r <= 3; ++r) {
        const std::vector<Scalar> all{Scalar(1, 4), Scalar(1, 2), Scalar(2, 3)};
        const std::vector<Scalar> p(all.begin(), all.begin() + static_cast<long>(r));
        for (const auto& n : multi_indices(r, 4)) {
            for (long N : {n.norm(), n.norm() + 3}) {
                ClassicalParams params{p, N};
                const Poly K = solve_type2_classical(params, n);
                const auto ref = oracle::classical_type2(p, N, n.entries);
                REQUIRE(ref);
                CHECK(as_coeffs(K) == *ref);
                for (const auto& res : orthogonality_residuals(params, n, K)) CHECK(res == 0);
            }
        }
    }
}

TEST_CASE("q solver: ratios differing by a power of q make some indices singular") {
    // p/beta = 1/4 and 1 with q = 4: the first measure is the second divided by 1 + (q-1)X.
    auto params = make(Scalar(2), {Scalar(1, 5), Scalar(1, 2)}, {Scalar(4, 5), Scalar(1, 2)}, 3);
    CHECK(normality_determinant(params, MultiIndex{2, 1}) == 0);
    CHECK_FALSE(oracle::q_type2(Scalar(2), params.p, params.beta, 3, {2, 1}));
    CHECK_THROWS_AS(solve_type2_q(params, MultiIndex{2, 1}), NormalityError);
    CHECK(normality_determinant(params, MultiIndex{1, 1}) != 0);
    CHECK(normality_determinant(params, MultiIndex{1, 2}) != 0);
}
