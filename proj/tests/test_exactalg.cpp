#include "doctest.h"

#include <random>

#include "ym/exactalg.hpp"

using namespace ym;

namespace {

Poly P(std::initializer_list<long> c) {
    std::vector<BigInt> v;
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
}

std::vector<long> ints(const CoeffVector& c) {
    std::vector<long> v;
    for (const auto& x : c) v.push_back(x.get_si());
    return v;
}

Poly random_poly(std::mt19937& rng, int max_deg, long bound) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<BigInt> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) x = coef(rng);
    return Poly(std::move(v));
}

}  // namespace

TEST_CASE("poly arithmetic examples") {
    CHECK(poly_arith(P({1, 1}), P({1, -1}), PolyOp::Mul) == P({1, 0, -1}));
    CHECK(poly_arith(Poly(), P({3, 0, 2}), PolyOp::Add) == P({3, 0, 2}));
    CHECK(poly_arith(P({1, 2, 1}), P({1, 2, 1}), PolyOp::Mul) == P({1, 4, 6, 4, 1}));
    CHECK(poly_arith(P({1, 2}), P({1, 2}), PolyOp::Sub).is_zero());
    CHECK(P({0, 0, 0}).is_zero());
    CHECK(P({1, 0, 0}).degree() == 0);
}

TEST_CASE("poly_pow examples") {
    CHECK(poly_pow(P({1, 0, 0, 1}), 4) == P({1, 0, 0, 4, 0, 0, 6, 0, 0, 4, 0, 0, 1}));
    CHECK(poly_pow(P({5, 7}), 0) == Poly(1));
    CHECK(poly_pow(P({1, 0, -1}), 2) == P({1, 0, -2, 0, 1}));
}

TEST_CASE("poly ring axioms on random instances") {
    std::mt19937 rng(12345);
    for (int it = 0; it < 200; ++it) {
        Poly a = random_poly(rng, 6, 9), b = random_poly(rng, 6, 9), c = random_poly(rng, 6, 9);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("exact division and gcd") {
    Poly a = P({1, 0, -1}), b = P({1, 1});
    CHECK(poly_div_exact(a, b) == P({1, -1}));
    CHECK_THROWS_AS(poly_div_exact(P({1, 0, 1}), b), Error);
    std::mt19937 rng(7);
    for (int it = 0; it < 100; ++it) {
        Poly g = random_poly(rng, 4, 5), x = random_poly(rng, 5, 5), y = random_poly(rng, 5, 5);
        if (g.is_zero() || x.is_zero() || y.is_zero()) continue;
        Poly d = poly_gcd(g * x, g * y);
        /* The gcd must be divisible by the primitive part of g and divide both inputs. */
        CHECK_NOTHROW(poly_div_exact(g * x, d));
        CHECK_NOTHROW(poly_div_exact(g * y, d));
        CHECK_NOTHROW(poly_div_exact(d, g.primitive_part()));
    }
}

TEST_CASE("ratfun_make examples") {
    RatFun f = ratfun_make(P({1, 0, 0, 0, -1}), P({1, 0, -1}));
    CHECK(f.num() == P({1, 0, 1}));
    CHECK(f.den() == Poly(1));
    RatFun z = ratfun_make(Poly(), P({1, 0, -1}));
    CHECK(z.is_zero());
    CHECK(z.den() == Poly(1));
    RatFun h = ratfun_make(P({2, 2}), Poly(4));
    CHECK(h.num() == P({1, 1}));
    CHECK(h.den() == Poly(2));
    CHECK_THROWS_AS(ratfun_make(P({1}), Poly()), Error);
    try {
        ratfun_make(P({1}), Poly());
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroDenominator);
    }
}

TEST_CASE("ratfun normal form invariants") {
    RatFun f = ratfun_make(P({-2, 0, 2}), P({-4, 4}));  /* (2t^2-2)/(4t-4) = (t+1)/2 */
    CHECK(f.num() == P({1, 1}));
    CHECK(f.den() == Poly(2));
    RatFun g = ratfun_make(P({1}), P({1, -1}));
    CHECK(g.den().leading() > 0);
    CHECK(g.num() == Poly(-1));
    /* Idempotence. */
    RatFun h = ratfun_make(f.num(), f.den());
    CHECK(h.num() == f.num());
    CHECK(h.den() == f.den());
}

TEST_CASE("ratfun arithmetic examples") {
    RatFun a = ratfun_make(1, P({1, -1}));
    RatFun b = ratfun_make(1, P({1, 1}));
    RatFun prod = ratfun_arith(a, b, RatOp::Mul);
    /* Normal form keeps the leading denominator coefficient positive: 1/(1-t^2) = -1/(t^2-1). */
    CHECK(prod.num() == Poly(-1));
    CHECK(prod.den() == P({-1, 0, 1}));
    CHECK(ratfun_arith(a, RatFun(), RatOp::Add) == a);
    RatFun s = ratfun_arith(ratfun_make(1, P({1, 0, -1})), ratfun_make(P({0, 0, 1}), P({1, 0, -1})), RatOp::Add);
    CHECK(s.num() == P({-1, 0, -1}));
    CHECK(s.den() == P({-1, 0, 1}));
    CHECK_THROWS_AS(ratfun_arith(a, RatFun(), RatOp::Div), Error);
    CHECK(ratfun_arith(prod, b, RatOp::Div) == a);
    CHECK(ratfun_arith(a, a, RatOp::Sub).is_zero());
}

TEST_CASE("ratfun_eq examples") {
    CHECK(ratfun_eq(ratfun_make(P({1, 0, 1}), P({1, 0, -1})), ratfun_make(P({1, 0, 0, 0, -1}), poly_pow(P({1, 0, -1}), 2))));
    CHECK(ratfun_eq(RatFun(), ratfun_make(Poly(), P({1, -1}))));
    CHECK_FALSE(ratfun_eq(ratfun_make(1, P({1, -1})), ratfun_make(1, P({1, 1}))));
}

TEST_CASE("series_expand examples") {
    CHECK(ints(series_expand(ratfun_make(1, P({1, 0, -1})), 6)) == std::vector<long>{1, 0, 1, 0, 1, 0, 1});
    CHECK(ints(series_expand(ratfun_make(poly_pow(P({1, 1}), 4), P({1, 0, -1})), 4)) == std::vector<long>{1, 4, 7, 8, 8});
    CHECK(ints(series_expand(ratfun_make(P({0, 1}), P({1, 0, -1})), 5)) == std::vector<long>{0, 1, 0, 1, 0, 1});
    try {
        series_expand(ratfun_make(1, P({0, 1})), 3);
        FAIL("expected PoleAtZero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PoleAtZero);
    }
    try {
        series_expand(ratfun_make(1, P({2, 1})), 3);
        FAIL("expected NonIntegerCoefficient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonIntegerCoefficient);
    }
}

TEST_CASE("series of a product is the Cauchy product, and equality matches series") {
    std::mt19937 rng(99);
    for (int it = 0; it < 60; ++it) {
        Poly n1 = random_poly(rng, 5, 4), n2 = random_poly(rng, 5, 4);
        Poly d1 = random_poly(rng, 4, 3), d2 = random_poly(rng, 4, 3);
        d1 = Poly(1) + d1.shifted(1);
        d2 = Poly(1) - d2.shifted(1);
        RatFun f = ratfun_make(n1, d1), g = ratfun_make(n2, d2);
        const std::size_t N = 25;
        CHECK(series_expand(f * g, N) == series_mul(series_expand(f, N), series_expand(g, N), N));
        RatFun diff = f - g;
        const std::size_t M = static_cast<std::size_t>(std::max<long>(0, diff.num().degree()) + std::max<long>(0, diff.den().degree()) + 1);
        bool all_zero = true;
        for (const auto& c : series_expand(diff, M)) all_zero = all_zero && c == 0;
        CHECK(all_zero == ratfun_eq(f, g));
    }
}

TEST_CASE("text rendering round-trips") {
    RatFun f = ratfun_make(P({1, 4, 0, -1}), P({1, 0, -1}));
    CHECK(render_text(f) == "(-1 - 4*t + t^3)/(-1 + t^2)");
    CHECK(render_text(ratfun_make(P({1, 4, 0, -1}), P({-1, 0, 1}))) == "(1 + 4*t - t^3)/(-1 + t^2)");
    CHECK(parse_ratfun(render_text(f)) == f);
    CHECK(render_text(RatFun()) == "(0)/(1)");
    CHECK(parse_ratfun("(0)/(1)").is_zero());
    CHECK(render_latex(f) == "\\frac{-1 - 4t + t^{3}}{-1 + t^{2}}");
    CHECK(render_latex(RatFun(P({0, -2}))) == "-2t");
    CHECK(parse_ratfun("(-t + 3*t^2)/(2)") == ratfun_make(P({0, -1, 3}), Poly(2)));
    CHECK(parse_ratfun("1 - t") == RatFun(P({1, -1})));
    CHECK_THROWS_AS(parse_ratfun("(1 + )/(1)"), Error);
    CHECK_THROWS_AS(parse_ratfun("(1 + t"), Error);
    std::mt19937 rng(5);
    for (int it = 0; it < 50; ++it) {
        RatFun g = ratfun_make(random_poly(rng, 6, 50), Poly(1) + random_poly(rng, 5, 50).shifted(1));
        CHECK(parse_ratfun(render_text(g)) == g);
    }
}
