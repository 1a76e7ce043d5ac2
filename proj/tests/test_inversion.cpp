#include <doctest.h>

#include <random>

#include "ym/closedforms.hpp"
#include "ym/inversion.hpp"

using namespace ym;

namespace {

CoeffVector coeffs(std::initializer_list<int> xs) {
    CoeffVector out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

RatVec rats(std::initializer_list<long> xs) {
    RatVec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

/* Random off-wall samples; points on a wall are redrawn. */
std::vector<RatVec> samples(int rank, std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 7);
    std::vector<RatVec> out;
    while (out.size() < count) {
        RatVec y;
        for (int i = 0; i <= rank; ++i) y.push_back(make_rat(num(rng), den(rng)));
        try {
            verify_langlands(rank, {y});
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::WallPoint) continue;
            throw;
        }
        out.push_back(std::move(y));
    }
    return out;
}

}  // namespace

TEST_CASE("inversion: cone sums") {
    CHECK(cone_sum_truncated({{2}, {make_rat(1, 2)}}, 7) == coeffs({0, 1, 0, 1, 0, 1, 0, 1}));
    CHECK(cone_sum_truncated({{2}, {0}}, 6) == coeffs({0, 0, 1, 0, 1, 0, 1}));
    CHECK(cone_sum_closed({{2}, {make_rat(1, 2)}}) == parse_ratfun("(t)/(1 - t^2)"));
    CHECK(cone_sum_closed({{4}, {0}}) == parse_ratfun("(t^4)/(1 - t^4)"));
    CHECK(cone_sum_closed({{2, 3}, {make_rat(1, 2), make_rat(1, 3)}}) == parse_ratfun("(t^2)/(1 - t^2 - t^3 + t^5)"));

    /* Fractional single terms are fine when their sum is integral. */
    CHECK(cone_sum_closed({{4, 2}, {make_rat(2, 3), make_rat(2, 3)}}) == parse_ratfun("(t^4)/(1 - t^2 - t^4 + t^6)"));

    /* Double lattice loop for p = (2, 3), x = (1/2, 1/3): exponents 2(1/2 + a) + 3(1/3 + b), a, b >= 0. */
    CoeffVector direct(11, BigInt(0));
    for (int a = 0; 1 + 2 * a <= 10; ++a)
        for (int b = 0; 1 + 2 * a + 1 + 3 * b <= 10; ++b) direct[static_cast<std::size_t>(2 + 2 * a + 3 * b)] += 1;
    CHECK(cone_sum_truncated({{2, 3}, {make_rat(1, 2), make_rat(1, 3)}}, 10) == direct);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> pick(1, 6), count(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
        ConeSumSpec spec;
        for (long j = count(rng); j > 0; --j) {
            const long p = pick(rng);
            spec.weights.push_back(p);
            /* Classes with denominator dividing p keep every exponent integral. */
            spec.classes.push_back(make_rat(std::uniform_int_distribution<long>(-2 * p, 2 * p)(rng), p));
        }
        CHECK(cone_sum_truncated(spec, 40) == series_expand(cone_sum_closed(spec), 40));
    }
    try {
        cone_sum_closed({{2}, {make_rat(1, 3)}});
        FAIL("expected NonIntegerExponent");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonIntegerExponent);
    }
}

TEST_CASE("inversion: Langlands identities") {
    CHECK(verify_langlands(1, {rats({3, -1})}));
    CHECK(verify_langlands(1, {rats({-2, 5})}));
    for (int rank = 1; rank <= 3; ++rank) CHECK(verify_langlands(rank, samples(rank, 100, 11u + static_cast<unsigned>(rank))));
    try {
        verify_langlands(1, {rats({1, 1})});
        FAIL("expected WallPoint");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WallPoint);
    }
}

TEST_CASE("inversion: posets") {
    const auto u2 = standard_poset({Family::U, 2}, 2);
    REQUIRE(u2.elements.size() == 2);
    CHECK(u2.labels == std::vector<std::string>{"B", "G"});
    CHECK(u2.n_weight == std::vector<long>{2, 0});
    CHECK(poset_leq(u2, 0, 1));
    CHECK(!poset_leq(u2, 1, 0));

    const auto sp2 = standard_poset({Family::Sp, 2}, 3);
    CHECK(sp2.labels == std::vector<std::string>{"B", "P{1}", "P{2}", "G"});
    /* Sp(2) has 4 positive roots, each maximal Levi keeps one of them. */
    CHECK(sp2.n_weight == std::vector<long>{16, 12, 12, 0});

    try {
        standard_poset({Family::U, 5}, 2);
        FAIL("expected UnsupportedRank");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedRank);
    }
}

TEST_CASE("inversion: round trips") {
    for (long l = 1; l <= 3; ++l) {
        const auto u1 = standard_poset({Family::U, 1}, l);
        const auto a_u1 = levi_gauge_series(u1);
        const auto triv = invert_abstract(u1, a_u1, rats({4}), 30);
        CHECK(triv.b0[0] == a_u1[0]);
        CHECK(triv.round_trip);

        const auto u2 = standard_poset({Family::U, 2}, l);
        for (long k = 0; k <= 1; ++k) {
            const auto res = invert_abstract(u2, levi_gauge_series(u2), pi1_representative({Family::U, 2}, {k}), 40);
            CHECK(res.b0[poset_top(u2)] == zagier_un(2, k, l));
            CHECK(res.round_trip);
        }
        const auto sp1 = standard_poset({Family::Sp, 1}, l);
        const auto res = invert_abstract(sp1, levi_gauge_series(sp1), rats({0}), 40);
        CHECK(res.b0[poset_top(sp1)] == sp_flat(1, l));
        CHECK(res.round_trip);
    }
    /* Larger posets against the closed forms at the top element. */
    for (long l = 2; l <= 3; ++l) {
        const auto u3 = standard_poset({Family::U, 3}, l);
        for (long k = 0; k <= 2; ++k) {
            const auto res = invert_abstract(u3, levi_gauge_series(u3), pi1_representative({Family::U, 3}, {k}), 30);
            CHECK(res.b0[poset_top(u3)] == zagier_un(3, k, l));
            CHECK(res.round_trip);
        }
        const auto so5 = standard_poset({Family::SOodd, 2}, l);
        for (long w = 0; w <= 1; ++w) {
            const auto res = invert_abstract(so5, levi_gauge_series(so5), pi1_representative({Family::SOodd, 2}, {w}), 30);
            CHECK(res.b0[poset_top(so5)] == so_odd_flat(2, l, static_cast<int>(w)));
            CHECK(res.round_trip);
        }
        const auto sp2 = standard_poset({Family::Sp, 2}, l);
        const auto res = invert_abstract(sp2, levi_gauge_series(sp2), rats({0, 0}), 30);
        CHECK(res.b0[poset_top(sp2)] == sp_flat(2, l));
        CHECK(res.round_trip);
    }
}

TEST_CASE("inversion: rank 3 posets") {
    for (GroupSpec g : {GroupSpec{Family::U, 4}, GroupSpec{Family::SOodd, 3}, GroupSpec{Family::Sp, 3}})
        for (long c = 0; c <= 1; ++c) {
            const auto poset = standard_poset(g, 2);
            REQUIRE(poset.elements.size() == 8);
            const auto res = invert_abstract(poset, levi_gauge_series(poset), pi1_representative(g, {c}), 30);
            CHECK(res.b0[poset_top(poset)] == specialized_flat({g, {c}, {2, 0}}));
            CHECK(res.round_trip);
        }
}
