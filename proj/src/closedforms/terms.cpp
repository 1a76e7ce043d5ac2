#include "terms.hpp"

namespace ym::terms {

RatFun t_exp(long e) {
    if (e < 0) throw Error(ErrorKind::NonIntegerExponent, "negative exponent " + std::to_string(e));
    return t_pow(static_cast<std::size_t>(e));
}

RatFun unitary_block(int m, long genus) {
    const auto g2 = static_cast<unsigned>(2 * genus);
    Poly num(1), den = one_minus(2L * m);
    for (int j = 1; j <= m; ++j) num *= poly_pow(one_plus(2L * j - 1), g2);
    for (int j = 1; j < m; ++j) den *= poly_pow(one_minus(2L * j), 2);
    return RatFun::make(num, den);
}

RatFun type_bc_block(int m, long genus) {
    const auto g2 = static_cast<unsigned>(2 * genus);
    Poly num(1), den(1);
    for (int j = 1; j <= m; ++j) num *= poly_pow(one_plus(4L * j - 1), g2);
    for (int j = 1; j <= 2 * m; ++j) den *= one_minus(2L * j);
    return RatFun::make(num, den);
}

RatFun type_d_block(int m, long genus) {
    const auto g2 = static_cast<unsigned>(2 * genus);
    Poly num = poly_pow(one_plus(2L * m - 1), g2);
    Poly den = one_minus(2L * m - 2) * one_minus(2L * m);
    for (int j = 1; j < m; ++j) num *= poly_pow(one_plus(4L * j - 1), g2);
    for (int j = 1; j <= 2 * m - 2; ++j) den *= one_minus(2L * j);
    return RatFun::make(num, den);
}

long cross_sum(const std::vector<int>& c) {
    long s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) s += static_cast<long>(c[i]) * c[j];
    return s;
}

long consecutive_sum(const std::vector<int>& c, int upto) {
    long s = 0;
    for (int i = 1; i <= upto; ++i) s += c[static_cast<std::size_t>(i - 1)] + c[static_cast<std::size_t>(i)];
    return s;
}

Poly consecutive_den(const std::vector<int>& c, int upto) {
    Poly d(1);
    for (int i = 1; i <= upto; ++i) d *= one_minus(2L * (c[static_cast<std::size_t>(i - 1)] + c[static_cast<std::size_t>(i)]));
    return d;
}

void check_genus(long genus) {
    if (genus < 1) throw Error(ErrorKind::InvalidPoint, "closed formulas need genus >= 1, got " + std::to_string(genus));
}

}  // namespace ym::terms
