#include "ym/suites.hpp"

#include <random>

#include "ym/closedforms.hpp"
#include "ym/inversion.hpp"

namespace ym {

namespace {

void record(SuiteResult& r, bool ok, const std::string& what) {
    ++r.cases;
    if (!ok && r.passed) {
        r.passed = false;
        r.detail = what;
    }
}

}  // namespace

SuiteResult isomorphism_suite(long genus) {
    SuiteResult r{"isomorphisms l=" + std::to_string(genus), true, 0, {}};
    const RatFun su2 = sun_flat(2, genus);
    record(r, sp_flat(1, genus) == su2 && so_odd_flat(1, genus, 0) == su2, "Sp(1) = SU(2) = SO(3)");
    record(r, sp_flat(2, genus) == so_odd_flat(2, genus, 0), "Sp(2) = SO(5)");
    record(r, so_even_flat(2, genus, 0) == su2 * su2, "SO(4) = SU(2) x SU(2)");
    record(r, so_even_flat(3, genus, 0) == sun_flat(4, genus), "SO(6) = SU(4)");
    return r;
}

SuiteResult cone_sum_suite(std::size_t specs, std::size_t order, unsigned seed) {
    SuiteResult r{"cone sums", true, 0, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> weight(1, 6), size(1, 3), den(1, 6);
    while (r.cases < specs) {
        ConeSumSpec spec;
        for (long j = size(rng); j > 0; --j) {
            const long p = weight(rng);
            const long q = den(rng);
            spec.weights.push_back(p);
            spec.classes.push_back(make_rat(std::uniform_int_distribution<long>(-3 * q, 3 * q)(rng), q));
        }
        /* Only specs with an integral total exponent are admissible. */
        BigRat total = 0;
        for (std::size_t a = 0; a < spec.weights.size(); ++a) total += spec.weights[a] * frac_part(spec.classes[a]);
        if (total.get_den() != 1) continue;
        record(r, cone_sum_truncated(spec, order) == series_expand(cone_sum_closed(spec), order), "spec #" + std::to_string(r.cases));
    }
    return r;
}

std::vector<RatVec> langlands_samples(int rank, std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(-200, 200), den(1, 9);
    std::vector<RatVec> out;
    while (out.size() < count) {
        RatVec y;
        for (int i = 0; i <= rank; ++i) y.push_back(make_rat(num(rng), den(rng)));
        try {
            verify_langlands(rank, {y});
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::WallPoint) continue;
            throw;
        }
        out.push_back(std::move(y));
    }
    return out;
}

SuiteResult langlands_suite(int rank, std::size_t samples, unsigned seed) {
    SuiteResult r{"Langlands rank " + std::to_string(rank), true, 0, {}};
    for (const auto& y : langlands_samples(rank, samples, seed)) {
        std::string where = "sample (";
        for (std::size_t i = 0; i < y.size(); ++i) where += (i ? "," : "") + y[i].get_str();
        record(r, verify_langlands(rank, {y}), where + ")");
    }
    return r;
}

SuiteResult round_trip_suite(long genus, std::size_t truncation) {
    SuiteResult r{"inversion round trips l=" + std::to_string(genus), true, 0, {}};
    const auto u2 = standard_poset({Family::U, 2}, genus);
    for (long k = 0; k <= 1; ++k) {
        const auto res = invert_abstract(u2, levi_gauge_series(u2), pi1_representative({Family::U, 2}, {k}), truncation);
        record(r, res.b0[poset_top(u2)] == zagier_un(2, k, genus) && res.round_trip, "U(2) k=" + std::to_string(k));
    }
    const auto sp1 = standard_poset({Family::Sp, 1}, genus);
    const auto res = invert_abstract(sp1, levi_gauge_series(sp1), pi1_representative({Family::Sp, 1}, {0}), truncation);
    record(r, res.b0[poset_top(sp1)] == sp_flat(1, genus) && res.round_trip, "Sp(1)");
    return r;
}

}  // namespace ym
