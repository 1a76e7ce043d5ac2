#pragma once

/*
 * Batch verifications shared by the command line front end and the
 * acceptance runner.  Each suite reports whether every case held.
 */

#include <string>
#include <vector>

#include "ym/exactalg.hpp"
#include "ym/rootsys.hpp"

namespace ym {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::size_t cases = 0;
    std::string detail;  // first failing case, empty on success
};

/* sp(1) = su(2) = so(3), sp(2) = so(5), so(4) = su(2)^2, so(6) = su(4) at one genus. */
SuiteResult isomorphism_suite(long genus);

/* Random cone specs with weights <= 6 and class denominators <= 6, truncated against closed. */
SuiteResult cone_sum_suite(std::size_t specs, std::size_t order, unsigned seed);

/* Random rational points of A_rank, redrawn when they land on a wall. */
std::vector<RatVec> langlands_samples(int rank, std::size_t count, unsigned seed);
SuiteResult langlands_suite(int rank, std::size_t samples, unsigned seed);

/* The U(2) posets at k = 0, 1 and the Sp(1) poset against the closed forms, with zero forward residual. */
SuiteResult round_trip_suite(long genus, std::size_t truncation);

}  // namespace ym
