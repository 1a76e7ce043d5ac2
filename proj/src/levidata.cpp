#include "ym/levidata.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace ym {

bool operator<(const ParabolicIndex& a, const ParabolicIndex& b) {
    return std::make_tuple(a.r(), a.composition, a.alpha_nm1_in_I, a.alpha_n_in_I) <
           std::make_tuple(b.r(), b.composition, b.alpha_nm1_in_I, b.alpha_n_in_I);
}

std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    if (n <= 0) return out;
    /* Bit j of mask set means a cut after position j+1. */
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> c;
        int run = 1;
        for (int j = 0; j < n - 1; ++j) {
            if (mask & (1u << j)) {
                c.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.push_back(run);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
    });
    return out;
}

std::vector<ParabolicIndex> enumerate_parabolics(const GroupSpec& g) {
    check_rank(g);
    std::vector<ParabolicIndex> out;
    const Family f = base_family(g.family);
    for (const auto& c : compositions(g.n)) {
        switch (f) {
            case Family::U: out.push_back({c, false, false}); break;
            case Family::SOodd:
            case Family::Sp:
                out.push_back({c, false, false});
                out.push_back({c, false, true});
                break;
            case Family::SOeven:
                for (bool a : {false, true})
                    for (bool b : {false, true}) {
                        ParabolicIndex I{c, a, b};
                        try {
                            check_admissible(g, I);
                            out.push_back(I);
                        } catch (const Error&) {
                        }
                    }
                break;
            default: break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_admissible(const GroupSpec& g, const ParabolicIndex& I) {
    if (I.composition.empty() || std::any_of(I.composition.begin(), I.composition.end(), [](int x) { return x < 1; }) ||
        std::accumulate(I.composition.begin(), I.composition.end(), 0) != g.n)
        throw Error(ErrorKind::InadmissibleCase, "composition does not partition " + std::to_string(g.n));
    const Family f = base_family(g.family);
    const int nr = I.composition.back();
    if (f == Family::U && (I.alpha_n_in_I || I.alpha_nm1_in_I))
        throw Error(ErrorKind::InadmissibleCase, "unitary groups carry no tail flags");
    if ((f == Family::SOodd || f == Family::Sp) && I.alpha_nm1_in_I)
        throw Error(ErrorKind::InadmissibleCase, "only the last simple root carries a flag for this family");
    if (f == Family::SOeven) {
        if (I.alpha_nm1_in_I && I.alpha_n_in_I && nr != 1)
            throw Error(ErrorKind::InadmissibleCase, "alpha_{n-1}, alpha_n in I needs n_r = 1");
        if (!(I.alpha_nm1_in_I && I.alpha_n_in_I) && nr == 1)
            throw Error(ErrorKind::InadmissibleCase, "n_r = 1 forces both alpha_{n-1} and alpha_n into I");
    }
}

std::vector<int> cut_set(const GroupSpec& g, const ParabolicIndex& I) {
    check_admissible(g, I);
    std::vector<int> cut;
    int s = 0;
    for (int i = 0; i + 1 < I.r(); ++i) {
        s += I.composition[static_cast<std::size_t>(i)];
        cut.push_back(s);
    }
    const Family f = base_family(g.family);
    if (f == Family::SOeven) {
        if (I.alpha_nm1_in_I && I.composition.back() > 1) cut.push_back(g.n - 1);
        if (I.alpha_n_in_I) cut.push_back(g.n);
    } else if (I.alpha_n_in_I) {
        cut.push_back(g.n);
    }
    return cut;
}

std::string tail_name(TailKind tail, int rank) {
    switch (tail) {
        case TailKind::None: return "none";
        case TailKind::SOodd: return "SO(" + std::to_string(2 * rank + 1) + ")";
        case TailKind::SOeven: return "SO(" + std::to_string(2 * rank) + ")";
        case TailKind::Sp: return "Sp(" + std::to_string(rank) + ")";
    }
    return "?";
}

LeviProfile levi_profile(const GroupSpec& g, const ParabolicIndex& I) {
    if (g.family == Family::SU) throw Error(ErrorKind::UnsupportedFamily, "Levi data for SU(n) is not tabulated");
    LeviProfile p;
    p.cut_set = cut_set(g, I);
    const Family f = base_family(g.family);
    const auto& c = I.composition;
    const int r = I.r();
    const long n = g.n;
    const long nr = c.back();

    long cross = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) cross += static_cast<long>(c[static_cast<std::size_t>(i)]) * c[static_cast<std::size_t>(j)];
    auto consecutive = [&](int i) { return make_rat(c[static_cast<std::size_t>(i - 1)] + c[static_cast<std::size_t>(i)], 2); };
    auto pair_at = [&](int i, BigRat v) { p.rho_pairings.emplace_back(p.cut_set[static_cast<std::size_t>(i - 1)], v); };

    const bool tail = (f == Family::SOodd || f == Family::Sp) ? !I.alpha_n_in_I
                      : f == Family::SOeven                   ? !I.alpha_n_in_I && !I.alpha_nm1_in_I
                                                              : false;
    const int unitary = tail ? r - 1 : r;
    p.unitary_blocks.assign(c.begin(), c.begin() + unitary);
    if (tail) {
        p.tail = f == Family::SOodd ? TailKind::SOodd : f == Family::Sp ? TailKind::Sp : TailKind::SOeven;
        p.tail_rank = static_cast<int>(nr);
    }
    p.center_excess = unitary - (f == Family::U ? 1 : 0);

    switch (f) {
        case Family::U:
            p.dimU = cross;
            for (int i = 1; i < r; ++i) pair_at(i, consecutive(i));
            break;
        case Family::SOodd:
        case Family::Sp:
            if (!tail) {
                p.dimU = cross + n * (n + 1) / 2;
                for (int i = 1; i < r; ++i) pair_at(i, consecutive(i));
                pair_at(r, f == Family::Sp ? make_rat(nr + 1, 2) : BigRat(nr));
            } else {
                p.dimU = cross + (n * (n + 1) - nr * (nr + 1)) / 2;
                for (int i = 1; i + 1 < r; ++i) pair_at(i, consecutive(i));
                if (r > 1) {
                    const long prev = c[static_cast<std::size_t>(r - 2)];
                    pair_at(r - 1, f == Family::Sp ? make_rat(prev + 1, 2) + nr : make_rat(prev, 2) + nr);
                }
            }
            break;
        case Family::SOeven:
            if (I.alpha_nm1_in_I && I.alpha_n_in_I) {
                /* Case 1: the cut set ends with alpha_{n-1} = s_{r-1} and alpha_n. */
                p.dimU = cross + n * (n - 1) / 2;
                for (int i = 1; i + 1 < r; ++i) pair_at(i, consecutive(i));
                const BigRat v = make_rat(c[static_cast<std::size_t>(r - 2)] + 1, 2);
                pair_at(r - 1, v);
                pair_at(r, v);
            } else if (!tail) {
                /* Cases 2 and 3. */
                p.dimU = cross + n * (n - 1) / 2;
                for (int i = 1; i < r; ++i) pair_at(i, consecutive(i));
                pair_at(r, BigRat(nr - 1));
            } else {
                /* Case 4. */
                p.dimU = cross + (n * (n - 1) - nr * (nr - 1)) / 2;
                for (int i = 1; i + 1 < r; ++i) pair_at(i, consecutive(i));
                if (r > 1) pair_at(r - 1, make_rat(c[static_cast<std::size_t>(r - 2)] + 2 * nr - 1, 2));
            }
            break;
        default: throw Error(ErrorKind::UnsupportedFamily, group_name(g));
    }

    for (int m : p.unitary_blocks) {
        for (int k = 1; k <= m; ++k) p.betti.degrees.push_back(k);
        ++p.betti.center_count;
    }
    if (tail) {
        const Family tf = p.tail == TailKind::SOodd ? Family::SOodd : p.tail == TailKind::Sp ? Family::Sp : Family::SOeven;
        const DegreeProfile td = betti_degrees({tf, p.tail_rank});
        p.betti.degrees.insert(p.betti.degrees.end(), td.degrees.begin(), td.degrees.end());
        p.betti.center_count += td.center_count;
    }
    std::sort(p.betti.degrees.begin(), p.betti.degrees.end());
    return p;
}

namespace {

bool in_levi(const std::vector<long>& expansion, const std::vector<int>& cut) {
    for (int a : cut)
        if (expansion[static_cast<std::size_t>(a - 1)] != 0) return false;
    return true;
}

}  // namespace

long dimU_from_roots(const RootSystem& rs, const std::vector<int>& cut) {
    long levi = 0;
    for (const auto& e : rs.expansions) levi += in_levi(e, cut) ? 1 : 0;
    return static_cast<long>(rs.positive_roots.size()) - levi;
}

std::vector<std::pair<int, BigRat>> rho_pairings_from_roots(const RootSystem& rs, const std::vector<int>& cut) {
    RatVec rho(static_cast<std::size_t>(rs.dim), BigRat(0));
    for (std::size_t b = 0; b < rs.positive_roots.size(); ++b) {
        if (in_levi(rs.expansions[b], cut)) continue;
        for (std::size_t x = 0; x < rho.size(); ++x) rho[x] += rs.positive_roots[b][x] / 2;
    }
    std::vector<std::pair<int, BigRat>> out;
    for (int a : cut) out.emplace_back(a, pairing(rho, rs.simple_coroots[static_cast<std::size_t>(a - 1)]));
    return out;
}

}  // namespace ym
