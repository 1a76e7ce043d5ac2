#pragma once

/*
 * Rational Poincare series of classifying spaces of gauge groups over a
 * closed surface, for any compact connected group described by its
 * Betti degrees d_1 <= d_2 <= ... and the number r of degree-1 entries.
 *
 *   orientable genus l:   ((1+t)^{2l}/(1-t^2))^r * prod_{k>r} (1+t^{2d_k-1})^{2l} / ((1-t^{2d_k-2})(1-t^{2d_k}))
 *   m crosscaps:          prod_k (1+t^{2d_k-1})^{m-1} / (1-t^{2d_k})
 */

#include "ym/levidata.hpp"

namespace ym {

RatFun bg_orientable(const DegreeProfile& profile, long genus);
RatFun bg_nonorientable(const DegreeProfile& profile, long crosscaps);
RatFun bg_levi(const LeviProfile& profile, long genus);

/* Gauge series of the single blocks, in the shapes used by the closed formulas. */
RatFun bg_unitary(int m, long genus);
RatFun bg_tail(TailKind tail, int rank, long genus);

}  // namespace ym
