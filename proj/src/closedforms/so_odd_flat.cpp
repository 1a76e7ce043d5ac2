/*
 * SO(2n+1) flat series on the bundle with w2 = w, genus l.  Sum over
 * compositions (n_1..n_r) of n of
 *
 *   (-1)^r prod_{i<=r} U(n_i)
 *     * t^{(l-1)(2 sum_{i<j} n_i n_j + n(n+1))}
 *       / ([prod_{i<=r-1} (1 - t^{2(n_i+n_{i+1})})] (1 - t^{4 n_r}))
 *     * t^{2 sum_{i<=r-1} (n_i+n_{i+1}) + 4 n_r <w/2>}
 *
 * plus
 *
 *   (-1)^{r-1} prod_{i<=r-1} U(n_i) * B(n_r)
 *     * t^{(l-1)(2 sum_{i<j} n_i n_j + n(n+1) - n_r(n_r+1))}
 *       / ([prod_{i<=r-2} (1 - t^{2(n_i+n_{i+1})})] (1 - eps(r) t^{2n_{r-1}+4n_r}))
 *     * t^{2 sum_{i<=r-1} (n_i+n_{i+1}) + 2 eps(r) n_r}
 *
 * where B(m) = prod_{j<=m} (1+t^{4j-1})^{2l} / prod_{j<=2m} (1-t^{2j}).
 * The second exponent is kept exactly in this form: for r > 1 it equals
 * 2 sum_{i<=r-2} (n_i+n_{i+1}) + (2n_{r-1} + 4n_r).
 */

#include "terms.hpp"
#include "ym/levidata.hpp"

namespace ym {

using namespace terms;

RatFun so_odd_flat(int n, long genus, int w2) {
    check_genus(genus);
    if (n < 1) throw Error(ErrorKind::UnsupportedRank, "SO(2n+1) needs n >= 1");
    const BigRat half_w = frac_part(make_rat(w2, 2));
    RatFun total;
    const long nn = n;
    for (const auto& c : compositions(n)) {
        const int r = static_cast<int>(c.size());
        const long nr = c.back();
        const long cross = cross_sum(c);

        RatFun first(r % 2 == 0 ? 1 : -1);
        for (int m : c) first *= unitary_block(m, genus);
        first *= t_exp((genus - 1) * (2 * cross + nn * (nn + 1)));
        first /= RatFun(consecutive_den(c, r - 1) * one_minus(4 * nr));
        const BigRat twist = 2 * consecutive_sum(c, r - 1) + 4 * nr * half_w;
        first *= t_exp(rat_to_int(twist, ErrorKind::NonIntegerExponent, "SO(2n+1) twist exponent").get_si());

        RatFun second((r - 1) % 2 == 0 ? 1 : -1);
        for (int i = 0; i + 1 < r; ++i) second *= unitary_block(c[static_cast<std::size_t>(i)], genus);
        second *= type_bc_block(static_cast<int>(nr), genus);
        second *= t_exp((genus - 1) * (2 * cross + nn * (nn + 1) - nr * (nr + 1)));
        Poly den = consecutive_den(c, r - 2);
        long shift = 2 * consecutive_sum(c, r - 1);
        if (r > 1) {
            den *= one_minus(2 * c[static_cast<std::size_t>(r - 2)] + 4 * nr);
            shift += 2 * nr;
        }
        second /= RatFun(den);
        second *= t_exp(shift);

        total += first + second;
    }
    return total;
}

}  // namespace ym
