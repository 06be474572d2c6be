#include "doctest.h"

#include <qortho/analysis.hpp>
#include <qortho/errors.hpp>
#include <qortho/qlattice.hpp>

using namespace qortho;

TEST_CASE("Sturm counts") {
    const Poly lin({Scalar(-3), Scalar(1)});
    CHECK(sturm_count(lin, Scalar(0), Scalar(10)) == 1);
    CHECK(sturm_count(lin, Scalar(0), Scalar(3)) == 1);
    CHECK(sturm_count(lin, Scalar(3, 2), Scalar(2)) == 0);
    CHECK(sturm_count(Poly::constant(1), Scalar(-100), Scalar(100)) == 0);
    CHECK_THROWS_AS(sturm_count(Poly(), Scalar(0), Scalar(1)), ParameterError);
    CHECK_THROWS_AS(sturm_count(lin, Scalar(2), Scalar(1)), ParameterError);
    CHECK_THROWS_AS(sturm_count(lin, Scalar(3), Scalar(4)), ParameterError);
    // (x-1)^2 (x+2): two distinct roots.
    const Poly rep = Poly({Scalar(-1), Scalar(1)}) * Poly({Scalar(-1), Scalar(1)}) * Poly({Scalar(2), Scalar(1)});
    CHECK(sturm_count(rep, Scalar(-5), Scalar(5)) == 2);
    CHECK_FALSE(has_simple_roots(rep));
    CHECK(square_free_part(rep) == Poly({Scalar(-1), Scalar(1)}) * Poly({Scalar(2), Scalar(1)}));
    CHECK(sturm_sequence(lin).size() == 2);
}

TEST_CASE("Cauchy bound") {
    const Poly p({Scalar(-6), Scalar(1), Scalar(2)});
    CHECK(cauchy_bound(p) == 4);
    CHECK(sturm_count(p, -cauchy_bound(p), cauchy_bound(p)) == 2);
}

TEST_CASE("root isolation") {
    const QContext ctx(Scalar(2));
    const Poly p({Scalar(0), Scalar(-lattice_x(ctx, 2)), Scalar(1)});
    const auto rep = isolate_roots(p, 6);
    REQUIRE(rep.intervals.size() == 2);
    CHECK(rep.intervals[0].first == 0);
    CHECK(rep.intervals[0].second == 0);
    CHECK(rep.intervals[1].first <= 5);
    CHECK(rep.intervals[1].second >= 5);
    CHECK(rep.count_positive == 1);
    CHECK(rep.simple);
    CHECK(rep.decimals[0] == "0.000000");

    const auto lin = isolate_roots(Poly({Scalar(-2, 3), Scalar(1)}), 4);
    REQUIRE(lin.intervals.size() == 1);
    CHECK(lin.intervals[0].first == Scalar(2, 3));
    CHECK(lin.intervals[0].second == Scalar(2, 3));
    CHECK(lin.decimals[0] == "0.6667");

    // x^2 - 2: irrational roots, intervals narrower than 10^-5.
    const auto irr = isolate_roots(Poly({Scalar(-2), Scalar(0), Scalar(1)}), 5);
    REQUIRE(irr.intervals.size() == 2);
    for (const auto& [lo, hi] : irr.intervals) {
        CHECK(hi - lo < Scalar(1, 100000));
        CHECK(hi * hi - 2 != 0);
    }
    CHECK(irr.count_positive == 1);
    CHECK(irr.decimals[1] == "1.41421");
    CHECK(isolate_roots(Poly::constant(1), 3).intervals.empty());
}

TEST_CASE("solved polynomials have simple positive zeros") {
    KravchukParams params{QContext(Scalar(2)), {Scalar(1, 3), Scalar(1, 2)}, {Scalar(2, 3), Scalar(1, 2)}, 4};
    const Poly K = solve_type2_q(params, MultiIndex{1, 1});
    CHECK(sturm_count(K, Scalar(0), 2 * lattice_x(params.ctx, 4)) == 2);
    CHECK(sturm_count(K, Scalar(0), cauchy_bound(K)) == 2);
    CHECK(has_simple_roots(K));
    const auto rep = isolate_roots(K, 8);
    CHECK(rep.count_positive == 2);
}

TEST_CASE("limit scan") {
    ClassicalParams one{{Scalar(1, 3)}, 4};
    const auto r1 = limit_scan(one, MultiIndex{1}, Scalar(1, 8), 6);
    REQUIRE(r1.deviations.size() == 6);
    CHECK(r1.v_sequence[0] == Scalar(9, 8));
    CHECK(r1.v_sequence[5] == 1 + Scalar(1, 8 * 32));
    REQUIRE(r1.ratios.size() == 5);
    for (std::size_t k = 1; k < 6; ++k) CHECK(r1.deviations[k] < r1.deviations[k - 1]);
    CHECK(*r1.ratios[4] > Scalar(17, 10));
    CHECK(*r1.ratios[4] < Scalar(23, 10));

    ClassicalParams two{{Scalar(1, 4), Scalar(1, 2)}, 6};
    const auto scan = limit_scan(two, MultiIndex{1, 1}, Scalar(1, 8), 5);
    REQUIRE(scan.ratios.size() == 4);
    // Ratios fall toward 2 from above; the second one is still just over 23/10.
    for (std::size_t k = 1; k < 4; ++k) CHECK(*scan.ratios[k] < *scan.ratios[k - 1]);
    for (std::size_t k = 0; k < 4; ++k) CHECK(*scan.ratios[k] > 2);
    CHECK(*scan.ratios[1] > Scalar(23, 10));
    CHECK(*scan.ratios[1] < Scalar(231, 100));
    CHECK(*scan.ratios[3] < Scalar(21, 10));
    for (std::size_t k = 1; k < 5; ++k) CHECK(scan.deviations[k] < scan.deviations[k - 1]);
    const auto shifted = limit_scan(two, MultiIndex{1, 1}, Scalar(1, 8), 5, LimitSource::rodrigues_shifted);
    CHECK(shifted.deviations == scan.deviations);

    const auto single = limit_scan(one, MultiIndex{1}, Scalar(1, 8), 1);
    CHECK(single.ratios.empty());
    CHECK(limit_scan(one, MultiIndex{0}, Scalar(1, 8), 3).deviations[2] == 0);
    CHECK_THROWS_AS(limit_scan(one, MultiIndex{1}, Scalar(-1), 3), ParameterError);
}
