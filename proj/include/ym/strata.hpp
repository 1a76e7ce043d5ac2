#pragma once

/*
 * Atiyah-Bott points of the Yang-Mills stratification over an orientable
 * surface, their codimensions, the equivariant Poincare series of the
 * strata, and the check that the stratification is perfect:
 *
 *   P_t(BG) = sum over points mu of type c of t^{2 d_mu} P_t(stratum mu)
 *
 * A point is a composition (n_1..n_r) with integer labels (k_1..k_r).
 * Its chamber vector repeats k_j/n_j over block j:
 *
 *   U(n)       k_1/n_1 > .. > k_r/n_r, k_1 + .. + k_r = k
 *   Sp(n)      k_1/n_1 > .. > k_r/n_r >= 0; k_r = 0 marks a zero block
 *   SO(2n+1)   as Sp(n); without a zero block the bundle has w2 = k_1 + .. + k_r
 *   SO(2n)     n_r = 1 with k_{r-1}/n_{r-1} > |k_r| (last coordinate k_r), or
 *              n_r > 1 with k_r > 0, the last coordinate optionally negated
 *              (MinusLast), or a zero block with n_r > 1
 *
 * A zero block on SO carries a flat SO tail and contributes one component
 * to each bundle; the tail sits on the bundle with w2 = w + k_1 + .. + k_{r-1}.
 */

#include <vector>

#include "ym/closedforms.hpp"

namespace ym {

enum class PointTail { None, ZeroBlock, MinusLast };

struct AtiyahBottPoint {
    Family family = Family::U;
    std::vector<int> composition;
    std::vector<long> labels;
    PointTail tail = PointTail::None;

    friend bool operator==(const AtiyahBottPoint&, const AtiyahBottPoint&) = default;
};

bool operator<(const AtiyahBottPoint& a, const AtiyahBottPoint& b);

/* Which of the two components of a zero-block SO stratum: the bundle sign (-1)^{w2}. */
enum class ComponentTag { None, Plus, Minus };

struct RankedPoint {
    AtiyahBottPoint point;
    long codim = 0;

    friend bool operator==(const RankedPoint&, const RankedPoint&) = default;
};

/* Throws InvalidPoint when mu violates its family's constraints. */
void validate_point(const GroupSpec& g, const AtiyahBottPoint& mu);

RatVec chamber_vector(const GroupSpec& g, const AtiyahBottPoint& mu);

/* The bundle class of a point without a zero block: k for U, w2 for SO, 0 for Sp. */
long point_topclass(const GroupSpec& g, const AtiyahBottPoint& mu);

/* d_mu = sum over positive roots with alpha(mu) > 0 of (alpha(mu) + l - 1). */
long codim(const GroupSpec& g, const AtiyahBottPoint& mu, long genus);

/* All points of type c with codim <= bound, sorted by (codim, point). */
std::vector<RankedPoint> enumerate_ab_points(const GroupSpec& g, const TopClass& c, long genus, long bound);

/* Throws AmbiguousComponent for a zero-block SO point without a tag. */
RatFun stratum_series(const GroupSpec& g, const AtiyahBottPoint& mu, long genus, ComponentTag tag = ComponentTag::None);

struct RecursionReport {
    GroupSpec group;
    TopClass topclass;
    long genus = 0;
    long degree = 0;
    bool holds = false;
    CoeffVector residual;
    std::vector<RankedPoint> strata;

    friend bool operator==(const RecursionReport&, const RecursionReport&) = default;
};

RecursionReport verify_recursion(const GroupSpec& g, const TopClass& c, long genus, long degree);

std::string render_point(const AtiyahBottPoint& mu);

}  // namespace ym
