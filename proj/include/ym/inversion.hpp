#pragma once

/*
 * Inversion machinery over standard parabolic posets.
 *
 * Cone sums.  For weights p_a >= 1 and classes x_a in Q/Z,
 *
 *   sum over m in Z^k with x_a + m_a > 0 of t^{sum p_a (x_a + m_a)}
 *     = prod_a t^{p_a <x_a>} / (1 - t^{p_a}),      <x> in (0, 1].
 *
 * Langlands identities.  For standard parabolics P <= R of type A and H in a_P^R,
 *
 *   sum_{P<=Q<=R} (-1)^{|S_R - S_Q|} tau_P^Q([H]^Q) tauhat_Q^R([H]_Q) = delta_PR
 *   sum_{P<=Q<=R} (-1)^{|S_Q - S_P|} tauhat_P^Q([H]^Q) tau_Q^R([H]_Q) = delta_PR
 *
 * with tau_P^Q(H) = [<alpha, H> > 0 for alpha in S_Q - S_P] and
 * tauhat_P^Q(H) = [<varpi^Q_alpha, H> > 0 for alpha in S_Q - S_P].
 *
 * Inversion.  A parabolic P is the set S_P of simple roots of its Levi.  For
 * a cocharacter X with class nu_Q in the Levi of Q,
 *
 *   b(Q, X) = sum_{P<=Q} (-1)^{|S_Q - S_P|} a(P) t^{n_P - n_Q}
 *             prod_{alpha in S_Q - S_P} t^{p_alpha <varpi^Q_alpha(X)>} / (1 - t^{p_alpha})
 *
 * where p_alpha = <4 rho_P^Q, alpha^vee> and n_P = 2 (l - 1) dim N_P.  It
 * inverts the relation
 *
 *   a(Q) = sum_{P<=Q} sum_{nu_P over nu_Q} tau_P^Q(nu_P) b(P, nu_P) t^{n_P - n_Q + <4 rho_P^Q, nu_P>}.
 */

#include <string>
#include <vector>

#include "ym/rootsys.hpp"

namespace ym {

struct ConeSumSpec {
    std::vector<long> weights;    // p_alpha
    std::vector<BigRat> classes;  // x_alpha, read modulo Z
};

/* Direct enumeration of the lattice points with total exponent <= order. */
CoeffVector cone_sum_truncated(const ConeSumSpec& spec, std::size_t order);
RatFun cone_sum_closed(const ConeSumSpec& spec);

/* Checks both identities for every pair P <= R of A_rank at every sample (length rank + 1).  Throws WallPoint. */
bool verify_langlands(int rank, const std::vector<RatVec>& samples);

struct ParabolicPoset {
    GroupSpec group;
    long genus = 2;
    RootSystem roots;
    std::vector<std::vector<int>> elements;  // S_P, 0-based, by size then lexicographically
    std::vector<long> n_weight;              // n_P
    std::vector<std::string> labels;
};

/* U(n), SO(2n+1) and Sp(n) with at most 3 simple roots. */
ParabolicPoset standard_poset(const GroupSpec& g, long genus);

bool poset_leq(const ParabolicPoset& poset, std::size_t p, std::size_t q);
std::size_t poset_top(const ParabolicPoset& poset);

/* Gauge group series of every Levi factor. */
std::vector<RatFun> levi_gauge_series(const ParabolicPoset& poset);

/* Weights <4 rho_P^Q, alpha^vee> and classes varpi^Q_alpha(X) over S_Q - S_P. */
ConeSumSpec pair_cone(const ParabolicPoset& poset, std::size_t p, std::size_t q, const RatVec& x);

RatFun invert_at(const ParabolicPoset& poset, const std::vector<RatFun>& a0, std::size_t q, const RatVec& x);

struct InversionResult {
    std::vector<RatFun> b0;              // b(Q, X) for every element
    std::vector<CoeffVector> residual;   // a(Q) minus the re-summed relation, per element
    bool round_trip = false;
};

/* Inverts at the class of X for every element and re-sums the defining relation to the given order. */
InversionResult invert_abstract(const ParabolicPoset& poset, const std::vector<RatFun>& a0, const RatVec& x,
                                std::size_t truncation);

}  // namespace ym
