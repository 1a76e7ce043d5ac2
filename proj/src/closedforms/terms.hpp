#pragma once

/* Building blocks shared by the transcribed closed formulas. */

#include <vector>

#include "ym/closedforms.hpp"

namespace ym::terms {

inline Poly one_minus(long e) { return Poly::binomial(-1, static_cast<std::size_t>(e)); }
inline Poly one_plus(long e) { return Poly::binomial(1, static_cast<std::size_t>(e)); }

/* t^e for a natural exponent; throws NonIntegerExponent on negative e. */
RatFun t_exp(long e);

/* prod_{j<=m} (1+t^{2j-1})^{2l} / ((1-t^{2m}) prod_{j<m} (1-t^{2j})^2) */
RatFun unitary_block(int m, long genus);

/* prod_{j<=m} (1+t^{4j-1})^{2l} / prod_{j<=2m} (1-t^{2j}), shared by Sp(m) and SO(2m+1). */
RatFun type_bc_block(int m, long genus);

/* (1+t^{2m-1})^{2l} prod_{j<m} (1+t^{4j-1})^{2l} / ((1-t^{2m-2})(1-t^{2m}) prod_{j<=2m-2} (1-t^{2j})) */
RatFun type_d_block(int m, long genus);

/* Sum over i < j of n_i n_j. */
long cross_sum(const std::vector<int>& c);

/* Sum over 1 <= i <= upto of (n_i + n_{i+1}), 1-based. */
long consecutive_sum(const std::vector<int>& c, int upto);

/* prod over 1 <= i <= upto of (1 - t^{2(n_i + n_{i+1})}). */
Poly consecutive_den(const std::vector<int>& c, int upto);

void check_genus(long genus);

}  // namespace ym::terms
