#include <doctest.h>

#include <algorithm>

#include "ym/rootsys.hpp"

using namespace ym;

namespace {

RatVec vec(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

/* Textbook positive roots, written out independently of the string construction. */
std::vector<RatVec> explicit_positive_roots(RootType type, int n) {
    std::vector<RatVec> out;
    auto e = [&](int i, long s) { return unit_vector(n, i, s); };
    auto sum = [](RatVec a, const RatVec& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            out.push_back(sum(e(i, 1), e(j, -1)));
            if (type != RootType::A) out.push_back(sum(e(i, 1), e(j, 1)));
        }
    for (int i = 0; i < n; ++i) {
        if (type == RootType::B) out.push_back(e(i, 1));
        if (type == RootType::C) out.push_back(e(i, 2));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("rootsys: small examples") {
    auto u2 = build_root_system({Family::U, 2});
    CHECK(u2.simple_roots == std::vector<RatVec>{vec({1, -1})});
    CHECK(u2.simple_coroots == std::vector<RatVec>{vec({1, -1})});
    CHECK(u2.positive_roots == std::vector<RatVec>{vec({1, -1})});

    auto sp1 = build_root_system({Family::Sp, 1});
    CHECK(sp1.simple_roots == std::vector<RatVec>{vec({2})});
    CHECK(sp1.simple_coroots == std::vector<RatVec>{vec({1})});
    CHECK(sp1.positive_roots == std::vector<RatVec>{vec({2})});

    auto so5 = build_root_system({Family::SOodd, 2});
    CHECK(so5.simple_roots == std::vector<RatVec>{vec({1, -1}), vec({0, 1})});
    CHECK(so5.simple_coroots[1] == vec({0, 2}));
    auto roots = so5.positive_roots;
    std::sort(roots.begin(), roots.end());
    CHECK(roots == explicit_positive_roots(RootType::B, 2));
    CHECK(roots.size() == 4);
}

TEST_CASE("rootsys: pairing") {
    CHECK(pairing(vec({1, -1}), vec({1, -1})) == 2);
    CHECK(pairing(RatVec{make_rat(1, 2), make_rat(1, 2)}, vec({0, 1})) == make_rat(1, 2));
    auto u3 = build_root_system({Family::U, 3});
    CHECK(pairing(u3.fundamental_weights[0], u3.simple_coroots[1]) == 0);
    try {
        pairing(vec({1}), vec({1, 2}));
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
}

TEST_CASE("rootsys: duality, root counts, expansions for all families n <= 6") {
    for (Family f : {Family::U, Family::SOodd, Family::SOeven, Family::Sp}) {
        for (int n = f == Family::SOeven ? 2 : 1; n <= 6; ++n) {
            CAPTURE(group_name({f, n}));
            auto rs = build_root_system({f, n});
            for (int i = 0; i < rs.rank; ++i)
                for (int j = 0; j < rs.rank; ++j)
                    CHECK(pairing(rs.fundamental_weights[i], rs.simple_coroots[j]) == (i == j ? 1 : 0));
            std::size_t expected = 0;
            switch (rs.type) {
                case RootType::A: expected = static_cast<std::size_t>(n * (n - 1) / 2); break;
                case RootType::B:
                case RootType::C: expected = static_cast<std::size_t>(n * n); break;
                case RootType::D: expected = static_cast<std::size_t>(n * (n - 1)); break;
            }
            CHECK(rs.positive_roots.size() == expected);
            auto sorted = rs.positive_roots;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == explicit_positive_roots(rs.type, n));
            for (const auto& e : rs.expansions)
                for (long x : e) CHECK(x >= 0);
        }
    }
}

TEST_CASE("rootsys: weight_on_pi1") {
    CHECK(weight_on_pi1({Family::SOodd, 2}, 2, {1}) == make_rat(1, 2));
    CHECK(weight_on_pi1({Family::SOodd, 2}, 1, {1}) == 0);
    CHECK(weight_on_pi1({Family::SOeven, 3}, 2, {1}) == make_rat(1, 2));
    CHECK(weight_on_pi1({Family::SOeven, 3}, 3, {1}) == make_rat(1, 2));
    CHECK(weight_on_pi1({Family::SOeven, 3}, 1, {1}) == 0);
    /* The centre-free fundamental weight of U(n) is theta_1 + .. + theta_i - (i/n) sum theta, so it takes -ik/n on k e_1. */
    CHECK(weight_on_pi1({Family::U, 3}, 1, {2}) == make_rat(1, 3));
    CHECK(weight_on_pi1({Family::U, 3}, 2, {2}) == make_rat(2, 3));
    CHECK(weight_on_pi1({Family::U, 4}, 2, {1}) == make_rat(1, 2));
    CHECK(weight_on_pi1({Family::Sp, 3}, 3, {1}) == 0);
    /* Additivity modulo Z. */
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i)
            for (long a = -3; a <= 3; ++a)
                for (long b = -3; b <= 3; ++b)
                    CHECK(weight_on_pi1({Family::U, n}, i, {a + b}) ==
                          mod_one(weight_on_pi1({Family::U, n}, i, {a}) + weight_on_pi1({Family::U, n}, i, {b})));
}

TEST_CASE("rootsys: degrees and rank checks") {
    CHECK(betti_degrees({Family::U, 3}) == DegreeProfile{{1, 2, 3}, 1});
    CHECK(betti_degrees({Family::SU, 3}) == DegreeProfile{{2, 3}, 0});
    CHECK(betti_degrees({Family::Sp, 2}) == DegreeProfile{{2, 4}, 0});
    CHECK(betti_degrees({Family::SOeven, 3}) == DegreeProfile{{2, 3, 4}, 0});
    CHECK(betti_degrees({Family::SOeven, 1}) == DegreeProfile{{1}, 1});
    try {
        build_root_system({Family::SOeven, 1});
        FAIL("expected UnsupportedRank");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedRank);
    }
    CHECK(parse_family("so-odd") == Family::SOodd);
}
