/*
 * U(n) central Yang-Mills series at degree k, genus l:
 *
 *   sum over compositions (n_1..n_r) of n of
 *     (-1)^{r-1} prod_{i<=r} U(n_i)
 *       * t^{2(l-1) sum_{i<j} n_i n_j} / prod_{i<=r-1} (1 - t^{2(n_i+n_{i+1})})
 *       * t^{2 sum_{i<=r-1} (n_i+n_{i+1}) <(n_1+..+n_i)(-k/n)>}
 *
 * with U(m) = prod_{j<=m} (1+t^{2j-1})^{2l} / ((1-t^{2m}) prod_{j<m} (1-t^{2j})^2).
 * The SU(n) flat series divides the k = 0 case by (1+t)^{2l}/(1-t^2).
 */

#include "terms.hpp"
#include "ym/levidata.hpp"

namespace ym {

using namespace terms;

BigRat frac_part(const BigRat& x) {
    BigRat m = mod_one(x);
    return m == 0 ? BigRat(1) : m;
}

RatFun zagier_un(int n, long k, long genus) {
    check_genus(genus);
    if (n < 1) throw Error(ErrorKind::UnsupportedRank, "U(n) needs n >= 1");
    RatFun total;
    for (const auto& c : compositions(n)) {
        const int r = static_cast<int>(c.size());
        RatFun term((r - 1) % 2 == 0 ? 1 : -1);
        for (int m : c) term *= unitary_block(m, genus);
        term *= t_exp(2 * (genus - 1) * cross_sum(c));
        term /= RatFun(consecutive_den(c, r - 1));
        BigRat twist = 0;
        long partial = 0;
        for (int i = 1; i <= r - 1; ++i) {
            partial += c[static_cast<std::size_t>(i - 1)];
            twist += 2 * (c[static_cast<std::size_t>(i - 1)] + c[static_cast<std::size_t>(i)]) * frac_part(make_rat(-partial * k, n));
        }
        term *= t_exp(rat_to_int(twist, ErrorKind::NonIntegerExponent, "U(n) twist exponent").get_si());
        total += term;
    }
    return total;
}

RatFun sun_flat(int n, long genus) {
    if (n < 2) throw Error(ErrorKind::UnsupportedRank, "SU(n) needs n >= 2");
    return zagier_un(n, 0, genus) / RatFun::make(poly_pow(one_plus(1), static_cast<unsigned>(2 * genus)), one_minus(2));
}

}  // namespace ym
