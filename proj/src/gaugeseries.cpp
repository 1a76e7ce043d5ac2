#include "ym/gaugeseries.hpp"

namespace ym {

namespace {

Poly one_minus(std::size_t e) { return Poly::binomial(-1, e); }
Poly one_plus(std::size_t e) { return Poly::binomial(1, e); }

}  // namespace

RatFun bg_orientable(const DegreeProfile& profile, long genus) {
    if (genus < 0) throw Error(ErrorKind::InvalidPoint, "negative genus");
    const auto g2 = static_cast<unsigned>(2 * genus);
    Poly num(1), den(1);
    for (std::size_t k = 0; k < profile.degrees.size(); ++k) {
        const auto d = static_cast<std::size_t>(profile.degrees[k]);
        if (static_cast<int>(k) < profile.center_count) {
            num *= poly_pow(one_plus(1), g2);
            den *= one_minus(2);
        } else {
            num *= poly_pow(one_plus(2 * d - 1), g2);
            den *= one_minus(2 * d - 2) * one_minus(2 * d);
        }
    }
    return RatFun::make(num, den);
}

RatFun bg_nonorientable(const DegreeProfile& profile, long crosscaps) {
    if (crosscaps < 1) throw Error(ErrorKind::InvalidPoint, "a nonorientable surface needs at least one crosscap");
    Poly num(1), den(1);
    for (int d : profile.degrees) {
        const auto e = static_cast<std::size_t>(d);
        num *= poly_pow(one_plus(2 * e - 1), static_cast<unsigned>(crosscaps - 1));
        den *= one_minus(2 * e);
    }
    return RatFun::make(num, den);
}

RatFun bg_levi(const LeviProfile& profile, long genus) { return bg_orientable(profile.betti, genus); }

RatFun bg_unitary(int m, long genus) {
    DegreeProfile d;
    for (int k = 1; k <= m; ++k) d.degrees.push_back(k);
    d.center_count = 1;
    return bg_orientable(d, genus);
}

RatFun bg_tail(TailKind tail, int rank, long genus) {
    switch (tail) {
        case TailKind::None: return RatFun(1);
        case TailKind::SOodd: return bg_orientable(betti_degrees({Family::SOodd, rank}), genus);
        case TailKind::SOeven: return bg_orientable(betti_degrees({Family::SOeven, rank}), genus);
        case TailKind::Sp: return bg_orientable(betti_degrees({Family::Sp, rank}), genus);
    }
    return RatFun(1);
}

}  // namespace ym
