/*
 * SO(2n) flat series on the bundle with w2 = w, genus l, n >= 2.  Three families:
 *
 * (a) compositions with r >= 2 and n_r = 1:
 *   (-1)^r prod_{i<=r} U(n_i)
 *     * t^{(l-1)(2 sum_{i<j} n_i n_j + n(n-1))}
 *       / ([prod_{i<=r-1} (1 - t^{2(n_i+n_{i+1})})] (1 - t^{2(n_{r-1}+1)}))
 *     * t^{2 sum_{i<=r-2} (n_i+n_{i+1}) + 4(n_{r-1}+1) <w/2>}
 *
 * (b) compositions with r <= n-1 and n_r > 1:
 *   2 (-1)^r prod_{i<=r} U(n_i)
 *     * t^{(l-1)(2 sum_{i<j} n_i n_j + n(n-1))}
 *       / ([prod_{i<=r-1} (1 - t^{2(n_i+n_{i+1})})] (1 - t^{4(n_r-1)}))
 *     * t^{2 sum_{i<=r-1} (n_i+n_{i+1}) + 4(n_r-1) <w/2>}
 *
 * (c) the same compositions as (b):
 *   (-1)^{r-1} prod_{i<=r-1} U(n_i) * D(n_r)
 *     * t^{(l-1)(2 sum_{i<j} n_i n_j + n(n-1) - n_r(n_r-1))}
 *       / ([prod_{i<=r-2} (1 - t^{2(n_i+n_{i+1})})] (1 - eps(r) t^{2(n_{r-1}+2n_r-1)}))
 *     * t^{2 sum_{i<=r-2} (n_i+n_{i+1}) + 2 eps(r)(n_{r-1}+2n_r-1)}
 *
 * where D(m) = (1+t^{2m-1})^{2l} prod_{j<m} (1+t^{4j-1})^{2l}
 *              / ((1-t^{2m-2})(1-t^{2m}) prod_{j<=2m-2} (1-t^{2j})).
 */

#include "terms.hpp"
#include "ym/levidata.hpp"

namespace ym {

using namespace terms;

RatFun so_even_flat(int n, long genus, int w2) {
    check_genus(genus);
    if (n < 2) throw Error(ErrorKind::UnsupportedRank, "SO(2n) formula needs n >= 2");
    const BigRat half_w = frac_part(make_rat(w2, 2));
    RatFun total;
    const long nn = n;
    for (const auto& c : compositions(n)) {
        const int r = static_cast<int>(c.size());
        const long nr = c.back();
        const long cross = cross_sum(c);

        if (r >= 2 && nr == 1) {
            const long prev = c[static_cast<std::size_t>(r - 2)];
            RatFun a(r % 2 == 0 ? 1 : -1);
            for (int m : c) a *= unitary_block(m, genus);
            a *= t_exp((genus - 1) * (2 * cross + nn * (nn - 1)));
            a /= RatFun(consecutive_den(c, r - 1) * one_minus(2 * (prev + 1)));
            const BigRat twist = 2 * consecutive_sum(c, r - 2) + 4 * (prev + 1) * half_w;
            a *= t_exp(rat_to_int(twist, ErrorKind::NonIntegerExponent, "SO(2n) twist exponent").get_si());
            total += a;
        }
        if (r <= n - 1 && nr > 1) {
            RatFun b(r % 2 == 0 ? 2 : -2);
            for (int m : c) b *= unitary_block(m, genus);
            b *= t_exp((genus - 1) * (2 * cross + nn * (nn - 1)));
            b /= RatFun(consecutive_den(c, r - 1) * one_minus(4 * (nr - 1)));
            const BigRat twist = 2 * consecutive_sum(c, r - 1) + 4 * (nr - 1) * half_w;
            b *= t_exp(rat_to_int(twist, ErrorKind::NonIntegerExponent, "SO(2n) twist exponent").get_si());
            total += b;

            RatFun d((r - 1) % 2 == 0 ? 1 : -1);
            for (int i = 0; i + 1 < r; ++i) d *= unitary_block(c[static_cast<std::size_t>(i)], genus);
            d *= type_d_block(static_cast<int>(nr), genus);
            d *= t_exp((genus - 1) * (2 * cross + nn * (nn - 1) - nr * (nr - 1)));
            Poly den = consecutive_den(c, r - 2);
            long shift = 2 * consecutive_sum(c, r - 2);
            if (r > 1) {
                const long e = 2 * (c[static_cast<std::size_t>(r - 2)] + 2 * nr - 1);
                den *= one_minus(e);
                shift += e;
            }
            d /= RatFun(den);
            d *= t_exp(shift);
            total += d;
        }
    }
    return total;
}

}  // namespace ym
