#include <doctest.h>

#include "ym/closedforms.hpp"

using namespace ym;

namespace {

RatFun p(std::string_view s) { return parse_ratfun(s); }
RatFun pw(const RatFun& f, long e) { return ratfun_pow(f, e); }
RatFun tp(long e) { return t_pow(static_cast<std::size_t>(e)); }
const RatFun one_t = p("1 + t");
const RatFun one_t3 = p("1 + t^3");

}  // namespace

TEST_CASE("closedforms: frac_part") {
    CHECK(frac_part(0) == 1);
    CHECK(frac_part(make_rat(-1, 2)) == make_rat(1, 2));
    CHECK(frac_part(make_rat(7, 3)) == make_rat(1, 3));
    CHECK(frac_part(-3) == 1);
}

TEST_CASE("closedforms: U(1), U(2) and SU(2) by hand") {
    for (long l = 1; l <= 4; ++l) {
        CHECK(zagier_un(1, 5, l) == pw(one_t, 2 * l) / p("1 - t^2"));
        const RatFun den = p("1 - t^2") * p("1 - t^2") * p("1 - t^4");
        const RatFun odd = pw(one_t, 2 * l) * (pw(one_t3, 2 * l) - tp(2 * l) * pw(one_t, 2 * l)) / den;
        const RatFun even = pw(one_t, 2 * l) * (pw(one_t3, 2 * l) - tp(2 * l + 2) * pw(one_t, 2 * l)) / den;
        CHECK(zagier_un(2, 1, l) == odd);
        CHECK(zagier_un(2, -3, l) == odd);
        CHECK(zagier_un(2, 0, l) == even);
        CHECK(zagier_un(2, 4, l) == even);
        const RatFun su2 = (pw(one_t3, 2 * l) - tp(2 * l + 2) * pw(one_t, 2 * l)) / (p("1 - t^2") * p("1 - t^4"));
        CHECK(sun_flat(2, l) == su2);
        CHECK(sp_flat(1, l) == su2);
        CHECK(so_odd_flat(1, l, 0) == su2);
        CHECK(so_odd_flat(1, l, 1) == (pw(one_t3, 2 * l) - tp(2 * l) * pw(one_t, 2 * l)) / (p("1 - t^2") * p("1 - t^4")));
    }
}

TEST_CASE("closedforms: general engine agrees with the specialized formulas") {
    for (long l = 1; l <= 3; ++l) {
        for (int n = 1; n <= 4; ++n) {
            for (long k = 0; k < n; ++k) {
                FlatSeriesRequest req{{Family::U, n}, {k}, {l, 0}};
                CAPTURE(n);
                CAPTURE(k);
                CHECK(lr_general(req) == zagier_un(n, k, l));
            }
            CHECK(lr_general({{Family::Sp, n}, {0}, {l, 0}}) == sp_flat(n, l));
            for (int w = 0; w <= 1; ++w) {
                CAPTURE(w);
                CHECK(lr_general({{Family::SOodd, n}, {w}, {l, 0}}) == so_odd_flat(n, l, w));
                if (n >= 2) CHECK(lr_general({{Family::SOeven, n}, {w}, {l, 0}}) == so_even_flat(n, l, w));
            }
        }
    }
}

TEST_CASE("closedforms: exceptional isomorphisms") {
    for (long l = 1; l <= 5; ++l) {
        CHECK(sp_flat(1, l) == sun_flat(2, l));
        CHECK(sp_flat(1, l) == so_odd_flat(1, l, 0));
        CHECK(sp_flat(2, l) == so_odd_flat(2, l, 0));
        CHECK(so_even_flat(2, l, 0) == sun_flat(2, l) * sun_flat(2, l));
        CHECK(so_even_flat(3, l, 0) == sun_flat(4, l));
    }
}

TEST_CASE("closedforms: error kinds") {
    try {
        zagier_un(2, 0, 0);
        FAIL("expected InvalidPoint");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidPoint);
    }
    try {
        lr_general({{Family::SU, 2}, {0}, {2, 0}});
        FAIL("expected UnsupportedFamily");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedFamily);
    }
    try {
        so_even_flat(1, 2, 0);
        FAIL("expected UnsupportedRank");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedRank);
    }
}
