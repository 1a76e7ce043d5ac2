#pragma once

/*
 * Yang-Mills types over nonorientable surfaces: the involution on the
 * Weyl chamber, the index sets of types carrying Yang-Mills connections,
 * and the connected components of each stratum with their bundle class
 * and product decomposition into twisted factors.
 *
 * Chamber vectors (blocks repeat over n_j entries, the zero tail is all zeros):
 *   Sp(n)      2k_j/n_j - 1   with k_1/n_1 > .. > k_r/n_r > 1/2 outside the tail
 *   SO(2n+1)   2k_j/n_j       with k_1/n_1 > .. > k_r/n_r >= 0, k_r = 0 being the tail
 *   SO(4m+2)   2k_j/n_j       zero tail of size n_r >= 1 always present
 *   SO(4m)     2k_j/n_j       last block of size 1 with k_{r-1}/n_{r-1} > |k_r|,
 *                             or n_r > 1 with k_r > 0 and the last entry signed,
 *                             or a zero tail with n_r > 1
 *
 * Twisted factors are structural only; no series is attached to them.
 */

#include <string>
#include <vector>

#include "ym/rootsys.hpp"

namespace ym {

struct NonorientablePoint {
    Family family = Family::Sp;
    std::vector<int> composition;
    std::vector<long> labels;  // the tail block, if any, has label 0
    bool zero_tail = false;
    int last_sign = 1;  // SO(4m) with n_r > 1: sign of the last coordinate
    int surface_i = 1;

    friend bool operator==(const NonorientablePoint&, const NonorientablePoint&) = default;
};

enum class FactorKind { TwistedU, TwistedO, FlatSp };

struct TwistedFactor {
    FactorKind kind = FactorKind::TwistedU;
    int n = 0;     // U(n), O(n) or Sp(n)
    long k = 0;    // TwistedU degree
    int det = 1;   // TwistedO determinant twist
    int sign = 1;  // TwistedO component sign

    friend bool operator==(const TwistedFactor&, const TwistedFactor&) = default;
};

struct Component {
    int w2 = 0;                   // bundle class; 0 for Sp
    bool fixed_by_point = false;  // true when the point alone determines the bundle
    std::vector<TwistedFactor> factors;

    friend bool operator==(const Component&, const Component&) = default;
};

struct ComponentReport {
    GroupSpec group;
    NonorientablePoint point;
    std::vector<Component> components;
    long l_min = 0;                   // genus bound under which connectedness is asserted
    std::vector<std::string> notes;   // further validity annotations

    friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

/* Identity for SO(2n+1) and Sp(n); negates the last coordinate of SO(2n) for odd n; U(n): (t_i) -> (-t_{n+1-i}). */
RatVec chamber_involution(const GroupSpec& g, const RatVec& mu);

void validate_nonorientable(const GroupSpec& g, const NonorientablePoint& p);
RatVec nonorientable_chamber_vector(const GroupSpec& g, const NonorientablePoint& p);

/* All points of the index set with |k_j| <= bound, in (composition, labels, tail, sign) order. */
std::vector<NonorientablePoint> enumerate_nonorientable_points(const GroupSpec& g, int surface_i, long bound);

ComponentReport classify_components(const GroupSpec& g, const NonorientablePoint& p);

std::string w2_label(const Component& c);
std::string render_factor(const TwistedFactor& f);
/* One line per component, tagged +/- when the point has two. */
std::string decomposition_render(const ComponentReport& r);

}  // namespace ym
