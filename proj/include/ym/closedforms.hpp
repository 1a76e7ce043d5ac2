#pragma once

/*
 * Closed formulas for equivariant Poincare series of the central
 * Yang-Mills representation varieties over an orientable surface of
 * genus l >= 1, together with the general alternating sum over
 * standard parabolics that all of them specialize.
 *
 * The specialized formulas are transcribed term by term, one file per
 * group family, and share no code with lr_general beyond exactalg.
 */

#include "ym/gaugeseries.hpp"

namespace ym {

struct SurfaceSpec {
    long genus = 2;
    int i = 0;  // 0 orientable, 1 adds a crosscap, 2 adds a Klein bottle
};

struct FlatSeriesRequest {
    GroupSpec group;
    TopClass topclass;
    SurfaceSpec surface;
};

/* Representative of x mod Z in (0, 1]. */
BigRat frac_part(const BigRat& x);

/* U(n) central series at degree k. */
RatFun zagier_un(int n, long k, long genus);
/* SU(n) flat series: zagier_un(n, 0, l) / ((1+t)^{2l}/(1-t^2)). */
RatFun sun_flat(int n, long genus);
RatFun sp_flat(int n, long genus);
RatFun so_odd_flat(int n, long genus, int w2);
RatFun so_even_flat(int n, long genus, int w2);

/*
 * Sum over all standard parabolics I of
 *   (-1)^{center_excess} P(BG_L) t^{2 dimU (l-1)} prod_{a in I} t^{4<rho,a^vee><varpi_a(c)>} / (1 - t^{4<rho,a^vee>}).
 * Spin groups are evaluated as SO at w2 = 0.
 */
RatFun lr_general(const FlatSeriesRequest& req);

/* Dispatch to the specialized formula for the request's family (SU, Spin included). */
RatFun specialized_flat(const FlatSeriesRequest& req);

}  // namespace ym
