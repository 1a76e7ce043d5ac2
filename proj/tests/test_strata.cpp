#include <doctest.h>

#include <algorithm>

#include "ym/strata.hpp"

using namespace ym;

namespace {

AtiyahBottPoint pt(Family f, std::vector<int> c, std::vector<long> k, PointTail tail = PointTail::None) {
    return {f, std::move(c), std::move(k), tail};
}

/* The SO(3) strata of bundle w: the flat part plus degree-k U(1) strata with k = w mod 2, k >= 1, d = k + l - 1. */
CoeffVector so3_rhs_by_hand(long l, int w, std::size_t order) {
    RatFun s = so_odd_flat(1, l, w);
    const RatFun u1 = zagier_un(1, 0, l);
    for (long k = w == 0 ? 2 : 1; 2 * (k + l - 1) <= static_cast<long>(order); k += 2)
        s += t_pow(static_cast<std::size_t>(2 * (k + l - 1))) * u1;
    return series_expand(s, order);
}

}  // namespace

TEST_CASE("strata: codimension examples") {
    CHECK(codim({Family::U, 2}, pt(Family::U, {1, 1}, {1, -1}), 2) == 3);
    CHECK(codim({Family::U, 3}, pt(Family::U, {3}, {2}), 4) == 0);
    CHECK(codim({Family::Sp, 1}, pt(Family::Sp, {1}, {1}), 2) == 3);
    CHECK(codim({Family::Sp, 2}, pt(Family::Sp, {2}, {0}, PointTail::ZeroBlock), 3) == 0);
    /* Sum over i<j of n_i n_j (slope gap + l - 1), written out for U(n). */
    for (int n = 2; n <= 4; ++n)
        for (long l = 1; l <= 3; ++l)
            for (const auto& rp : enumerate_ab_points({Family::U, n}, {1}, l, 12)) {
                const auto& c = rp.point.composition;
                const auto& k = rp.point.labels;
                BigRat d = 0;
                for (std::size_t i = 0; i < c.size(); ++i)
                    for (std::size_t j = i + 1; j < c.size(); ++j)
                        d += BigRat(c[i] * c[j]) * (make_rat(k[i], c[i]) - make_rat(k[j], c[j]) + l - 1);
                CHECK(d == rp.codim);
            }
}

TEST_CASE("strata: enumeration examples") {
    auto u2 = enumerate_ab_points({Family::U, 2}, {0}, 2, 4);
    REQUIRE(u2.size() == 2);
    CHECK(u2[0].point == pt(Family::U, {2}, {0}));
    CHECK(u2[0].codim == 0);
    CHECK(u2[1].point == pt(Family::U, {1, 1}, {1, -1}));
    CHECK(u2[1].codim == 3);

    auto sp1 = enumerate_ab_points({Family::Sp, 1}, {0}, 2, 6);
    REQUIRE(sp1.size() == 3);
    CHECK(sp1[0].point == pt(Family::Sp, {1}, {0}, PointTail::ZeroBlock));
    CHECK(sp1[1].point == pt(Family::Sp, {1}, {1}));
    CHECK(sp1[1].codim == 3);
    CHECK(sp1[2].point == pt(Family::Sp, {1}, {2}));
    CHECK(sp1[2].codim == 5);

    auto u1 = enumerate_ab_points({Family::U, 1}, {7}, 3, 50);
    REQUIRE(u1.size() == 1);
    CHECK(u1[0].point == pt(Family::U, {1}, {7}));

    /* Raising the bound never removes points. */
    for (GroupSpec g : {GroupSpec{Family::U, 3}, GroupSpec{Family::SOeven, 3}, GroupSpec{Family::Sp, 2}}) {
        auto small = enumerate_ab_points(g, {1}, 2, 8);
        auto large = enumerate_ab_points(g, {1}, 2, 12);
        for (const auto& rp : small)
            CHECK(std::find_if(large.begin(), large.end(), [&](const RankedPoint& q) { return q.point == rp.point; }) != large.end());
    }
}

TEST_CASE("strata: stratum series") {
    for (long l = 1; l <= 3; ++l) {
        const RatFun u1 = zagier_un(1, 0, l);
        CHECK(stratum_series({Family::Sp, 2}, pt(Family::Sp, {1, 1}, {2, 1}), l) == u1 * u1);
        CHECK(stratum_series({Family::Sp, 2}, pt(Family::Sp, {1, 1}, {1, 0}, PointTail::ZeroBlock), l) == u1 * sp_flat(1, l));
        CHECK(stratum_series({Family::SOodd, 2}, pt(Family::SOodd, {2}, {0}, PointTail::ZeroBlock), l, ComponentTag::Plus) ==
              so_odd_flat(2, l, 0));
    }
    try {
        stratum_series({Family::SOodd, 2}, pt(Family::SOodd, {2}, {0}, PointTail::ZeroBlock), 2);
        FAIL("expected AmbiguousComponent");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AmbiguousComponent);
    }
    try {
        validate_point({Family::U, 2}, pt(Family::U, {1, 1}, {0, 1}));
        FAIL("expected InvalidPoint");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidPoint);
    }
}

TEST_CASE("strata: recursion") {
    for (int w = 0; w <= 1; ++w) {
        auto rep = verify_recursion({Family::SOodd, 1}, {w}, 2, 30);
        CHECK(rep.holds);
        /* The right-hand side assembled by hand from the SO(3) strata. */
        const CoeffVector lhs = series_expand(bg_orientable(betti_degrees({Family::SOodd, 1}), 2), 30);
        CHECK(so3_rhs_by_hand(2, w, 30) == lhs);
    }
    CHECK(verify_recursion({Family::U, 1}, {3}, 2, 30).holds);
    CHECK(verify_recursion({Family::U, 1}, {3}, 2, 30).strata.size() == 1);
    CHECK(verify_recursion({Family::U, 2}, {1}, 2, 40).holds);
    CHECK(verify_recursion({Family::Sp, 1}, {0}, 2, 40).holds);
}
