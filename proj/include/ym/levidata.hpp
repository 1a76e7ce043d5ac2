#pragma once

/*
 * Standard parabolic subgroups of the classical groups and the data of
 * their Levi factors.
 *
 * A subset I of the simple roots is encoded by a composition
 * (n_1, ..., n_r) of n together with tail flags.  The partial sums
 * s_i = n_1 + ... + n_i (i < r) always lie in I.  For SO(2n+1) and Sp(n)
 * the flag alpha_n_in_I decides whether the last block is unitary or an
 * orthogonal/symplectic tail of rank n_r.  For SO(2n) the two flags give
 * four cases:
 *
 *   Case 1  alpha_{n-1}, alpha_n in I     n_r = 1, all blocks unitary
 *   Case 2  alpha_{n-1} in I only        n_r > 1, all blocks unitary
 *   Case 3  alpha_n in I only            n_r > 1, all blocks unitary
 *   Case 4  neither                      n_r > 1, tail SO(2 n_r)
 */

#include <utility>
#include <vector>

#include "ym/rootsys.hpp"

namespace ym {

struct ParabolicIndex {
    std::vector<int> composition;
    bool alpha_nm1_in_I = false;  // SO(2n) only
    bool alpha_n_in_I = false;    // SO(2n+1), SO(2n), Sp(n)

    int r() const noexcept { return static_cast<int>(composition.size()); }

    friend bool operator==(const ParabolicIndex&, const ParabolicIndex&) = default;
};

/* Order used for enumeration: number of parts, then composition, then flags. */
bool operator<(const ParabolicIndex& a, const ParabolicIndex& b);

enum class TailKind { None, SOodd, SOeven, Sp };

struct LeviProfile {
    std::vector<int> unitary_blocks;
    TailKind tail = TailKind::None;
    int tail_rank = 0;
    std::vector<int> cut_set;  // I as 1-based simple root indices, increasing
    long dimU = 0;
    int center_excess = 0;
    std::vector<std::pair<int, BigRat>> rho_pairings;  // (index in I, <rho^I, alpha^vee>)
    DegreeProfile betti;

    friend bool operator==(const LeviProfile&, const LeviProfile&) = default;
};

/* All compositions of n in lexicographic order, grouped by number of parts. */
std::vector<std::vector<int>> compositions(int n);

/* SU and Spin enumerate like U and SO. */
std::vector<ParabolicIndex> enumerate_parabolics(const GroupSpec& g);

/* Throws InadmissibleCase when I violates the family constraints. */
void check_admissible(const GroupSpec& g, const ParabolicIndex& I);

/* 1-based simple root indices in I. */
std::vector<int> cut_set(const GroupSpec& g, const ParabolicIndex& I);

/* Levi data from the case tables.  Throws UnsupportedFamily for SU. */
LeviProfile levi_profile(const GroupSpec& g, const ParabolicIndex& I);

/* Recomputations straight from the root system, independent of the case tables. */
long dimU_from_roots(const RootSystem& rs, const std::vector<int>& cut);
std::vector<std::pair<int, BigRat>> rho_pairings_from_roots(const RootSystem& rs, const std::vector<int>& cut);

std::string tail_name(TailKind tail, int rank);

}  // namespace ym
