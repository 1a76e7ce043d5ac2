#include "terms.hpp"
#include "ym/levidata.hpp"

namespace ym {

using namespace terms;

RatFun lr_general(const FlatSeriesRequest& req) {
    check_genus(req.surface.genus);
    if (req.surface.i != 0) throw Error(ErrorKind::UnsupportedFamily, "central series are only available on orientable surfaces");
    GroupSpec g = req.group;
    TopClass c = req.topclass;
    if (g.family == Family::SpinOdd || g.family == Family::SpinEven) {
        g.family = base_family(g.family);
        c.k = 0;
    }
    if (g.family == Family::SU || g.family == Family::Sp) c.k = 0;
    if (g.family == Family::SU) throw Error(ErrorKind::UnsupportedFamily, "SU(n) is served through U(n)");

    const long genus = req.surface.genus;
    RatFun total;
    for (const auto& I : enumerate_parabolics(g)) {
        const LeviProfile p = levi_profile(g, I);
        RatFun term(p.center_excess % 2 == 0 ? 1 : -1);
        term *= bg_levi(p, genus);
        term *= t_exp(2 * p.dimU * (genus - 1));
        Poly den(1);
        BigRat twist = 0;
        for (const auto& [alpha, rho] : p.rho_pairings) {
            const BigRat e = 4 * rho;
            const long ei = rat_to_int(e, ErrorKind::NonIntegerExponent, "4<rho, alpha^vee> at alpha_" + std::to_string(alpha)).get_si();
            den *= one_minus(ei);
            twist += e * frac_part(weight_on_pi1(g, alpha, c));
        }
        term /= RatFun(den);
        term *= t_exp(rat_to_int(twist, ErrorKind::NonIntegerExponent, "twist exponent").get_si());
        total += term;
    }
    return total;
}

RatFun specialized_flat(const FlatSeriesRequest& req) {
    const auto& g = req.group;
    const long genus = req.surface.genus;
    const int w2 = static_cast<int>(((req.topclass.k % 2) + 2) % 2);
    switch (g.family) {
        case Family::U: return zagier_un(g.n, req.topclass.k, genus);
        case Family::SU: return sun_flat(g.n, genus);
        case Family::Sp: return sp_flat(g.n, genus);
        case Family::SOodd: return so_odd_flat(g.n, genus, w2);
        case Family::SOeven: return so_even_flat(g.n, genus, w2);
        case Family::SpinOdd: return so_odd_flat(g.n, genus, 0);
        case Family::SpinEven: return so_even_flat(g.n, genus, 0);
    }
    throw Error(ErrorKind::UnsupportedFamily, group_name(g));
}

}  // namespace ym
