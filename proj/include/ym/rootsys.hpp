#pragma once

/*
 * Root data of the classical groups.
 *
 * Coordinates: a group of rank parameter n acts on rational n-tuples.
 * Roots and weights are covectors in the theta basis, coroots and
 * cocharacters are vectors in the dual e basis, and the pairing is the
 * ordinary dot product.
 *
 *   U(n), SU(n)       type A_{n-1}, simple roots theta_i - theta_{i+1}
 *   SO(2n+1)          type B_n, last simple root theta_n, coroot 2 e_n
 *   SO(2n)            type D_n, last simple root theta_{n-1} + theta_n
 *   Sp(n)             type C_n, last simple root 2 theta_n, coroot e_n
 *
 * Fundamental weights are taken inside the span of the simple roots, so
 * for U(n) they are the projections killing the centre.
 */

#include <string>
#include <vector>

#include "ym/exactalg.hpp"

namespace ym {

enum class Family { U, SU, SOodd, SOeven, Sp, SpinOdd, SpinEven };

struct GroupSpec {
    Family family = Family::U;
    int n = 1;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/* Topological class: degree k for U(n), the bit w2 for SO, ignored otherwise. */
struct TopClass {
    long k = 0;

    friend bool operator==(const TopClass&, const TopClass&) = default;
};

enum class RootType { A, B, C, D };

using RatVec = std::vector<BigRat>;

struct RootSystem {
    RootType type = RootType::A;
    int dim = 0;   // number of coordinates
    int rank = 0;  // number of simple roots
    std::vector<RatVec> simple_roots;
    std::vector<RatVec> simple_coroots;
    std::vector<RatVec> positive_roots;    // ordered by height, then lexicographically
    std::vector<RatVec> positive_coroots;  // parallel to positive_roots
    std::vector<std::vector<long>> expansions;  // positive root as simple-root coefficients
    std::vector<RatVec> fundamental_weights;

    friend bool operator==(const RootSystem&, const RootSystem&) = default;
};

/*
 * Degrees of the generators of the rational cohomology of BG.  The first
 * center_count entries are the degree-1 entries of the torus part.
 */
struct DegreeProfile {
    std::vector<int> degrees;
    int center_count = 0;

    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/*
 * U(n): 1..n with one central entry; SU(n): 2..n; SO(2n+1), Sp(n), Spin(2n+1): 2,4,..,2n;
 * SO(2n), Spin(2n): 2,4,..,2n-2 together with n, sorted.
 */
DegreeProfile betti_degrees(const GroupSpec& g);

std::string family_flag(Family f);
/* Inverse of family_flag; throws ParseError. */
Family parse_family(const std::string& flag);
std::string group_name(const GroupSpec& g);
/* SU maps to U and the Spin families to the SO families they cover. */
Family base_family(Family f);
RootType root_type(Family f);
/* Throws UnsupportedRank when n is below the family minimum. */
void check_rank(const GroupSpec& g);

RootSystem build_root_system(const GroupSpec& g);

BigRat pairing(const RatVec& covector, const RatVec& vector);
RatVec unit_vector(int dim, int index, long scale = 1);

/* Cartan matrix C[i][j] = <alpha_i, alpha_j^vee> restricted to a subset of simple root indices. */
std::vector<std::vector<BigRat>> cartan_matrix(const RootSystem& rs, const std::vector<int>& subset);

/* Solve A x = b over the rationals; A must be square and invertible. */
RatVec solve_linear(std::vector<std::vector<BigRat>> a, RatVec b);

/*
 * Weight dual to the coroots of `subset` (0-based simple root indices),
 * lying in the span of those roots: <w, alpha_j^vee> = [j == alpha].
 */
RatVec relative_fundamental_weight(const RootSystem& rs, const std::vector<int>& subset, int alpha);

/* Coefficients of a root on the simple roots. */
std::vector<long> simple_expansion(const RootSystem& rs, const RatVec& root);

/* Cocharacter representing c: k e_1 for U(n), w2 e_n for SO, zero otherwise. */
RatVec pi1_representative(const GroupSpec& g, const TopClass& c);

/* x mod Z as its representative in [0, 1). */
BigRat mod_one(const BigRat& x);

/* The class of varpi_{alpha_i}(c) in Q/Z, returned in [0, 1); i is 1-based. */
BigRat weight_on_pi1(const GroupSpec& g, int i, const TopClass& c);

}  // namespace ym
