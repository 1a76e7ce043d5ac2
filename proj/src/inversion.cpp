#include "ym/inversion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ym/closedforms.hpp"
#include "ym/gaugeseries.hpp"
#include "ym/levidata.hpp"

namespace ym {

namespace {

long checked_exponent(const BigRat& e, const std::string& what) {
    return rat_to_int(e, ErrorKind::NonIntegerExponent, what).get_si();
}

void check_cone(const ConeSumSpec& spec) {
    if (spec.weights.size() != spec.classes.size())
        throw Error(ErrorKind::DimensionMismatch, "cone weights and classes differ in length");
    for (long p : spec.weights)
        if (p < 1) throw Error(ErrorKind::InvalidPoint, "cone weights must be positive");
}

RatVec axpy(RatVec y, const BigRat& a, const RatVec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
    return y;
}

std::vector<int> difference(const std::vector<int>& big, const std::vector<int>& small) {
    std::vector<int> out;
    std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(out));
    return out;
}

/* Relative fundamental weights, memoized per subset. */
class WeightTable {
public:
    explicit WeightTable(const RootSystem& rs) : rs_(rs) {}

    const RatVec& get(const std::vector<int>& subset, int alpha) {
        auto key = std::make_pair(subset, alpha);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, relative_fundamental_weight(rs_, subset, alpha)).first;
        return it->second;
    }

    /* sum over beta in S of <varpi^S_beta, h> beta^vee */
    RatVec project(const std::vector<int>& subset, const RatVec& h) {
        RatVec out(h.size(), BigRat(0));
        for (int b : subset) out = axpy(out, pairing(get(subset, b), h), rs_.simple_coroots[static_cast<std::size_t>(b)]);
        return out;
    }

private:
    const RootSystem& rs_;
    std::map<std::pair<std::vector<int>, int>, RatVec> cache_;
};

std::vector<std::vector<int>> all_subsets(int rank) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < rank; ++i)
            if (mask & (1u << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/* Positive roots supported on S_Q but not on S_P. */
std::vector<std::size_t> relative_roots(const RootSystem& rs, const std::vector<int>& sp, const std::vector<int>& sq) {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
        bool in_q = true, in_p = true;
        for (int i = 0; i < rs.rank; ++i) {
            if (rs.expansions[r][static_cast<std::size_t>(i)] == 0) continue;
            in_q = in_q && std::binary_search(sq.begin(), sq.end(), i);
            in_p = in_p && std::binary_search(sp.begin(), sp.end(), i);
        }
        if (in_q && !in_p) out.push_back(r);
    }
    return out;
}

RatVec four_rho(const RootSystem& rs, const std::vector<int>& sp, const std::vector<int>& sq) {
    RatVec v(static_cast<std::size_t>(rs.dim), BigRat(0));
    for (std::size_t r : relative_roots(rs, sp, sq)) v = axpy(v, 2, rs.positive_roots[r]);
    return v;
}

}  // namespace

CoeffVector cone_sum_truncated(const ConeSumSpec& spec, std::size_t order) {
    check_cone(spec);
    const std::size_t k = spec.weights.size();
    /* Single terms p <x> may be fractional; every lattice point shares the fractional part of their sum. */
    BigRat lowest = 0;
    for (std::size_t a = 0; a < k; ++a) lowest += spec.weights[a] * frac_part(spec.classes[a]);
    const long base = checked_exponent(lowest, "cone sum exponent");
    CoeffVector out(order + 1, BigInt(0));
    /* Walk the lattice points m with x_a + m_a > 0, tracking the running exponent. */
    auto rec = [&](auto&& self, std::size_t a, long exponent) -> void {
        if (exponent > static_cast<long>(order)) return;
        if (a == k) {
            out[static_cast<std::size_t>(exponent)] += 1;
            return;
        }
        for (long e = 0; exponent + e <= static_cast<long>(order); e += spec.weights[a]) self(self, a + 1, exponent + e);
    };
    rec(rec, 0, base);
    return out;
}

RatFun cone_sum_closed(const ConeSumSpec& spec) {
    check_cone(spec);
    BigRat lowest = 0;
    Poly den(1);
    for (std::size_t a = 0; a < spec.weights.size(); ++a) {
        lowest += spec.weights[a] * frac_part(spec.classes[a]);
        den *= Poly::binomial(-1, static_cast<std::size_t>(spec.weights[a]));
    }
    const long s = checked_exponent(lowest, "cone sum exponent");
    return RatFun::make(Poly::monomial(1, static_cast<std::size_t>(s)), den);
}

bool verify_langlands(int rank, const std::vector<RatVec>& samples) {
    if (rank < 1 || rank > 3) throw Error(ErrorKind::UnsupportedRank, "Langlands identities are checked for ranks 1 to 3");
    const RootSystem rs = build_root_system({Family::U, rank + 1});
    WeightTable w(rs);
    const auto subsets = all_subsets(rank);

    auto positive = [](const BigRat& v) {
        if (v == 0) throw Error(ErrorKind::WallPoint, "sample lies on a wall");
        return v > 0;
    };
    /* tau: simple roots of `upper` outside `lower` positive on h. */
    auto tau = [&](const std::vector<int>& lower, const std::vector<int>& upper, const RatVec& h) {
        bool all = true;
        for (int a : difference(upper, lower)) all = positive(pairing(rs.simple_roots[static_cast<std::size_t>(a)], h)) && all;
        return all;
    };
    /* tauhat: relative fundamental weights of `upper` outside `lower` positive on h. */
    auto tauhat = [&](const std::vector<int>& lower, const std::vector<int>& upper, const RatVec& h) {
        bool all = true;
        for (int a : difference(upper, lower)) all = positive(pairing(w.get(upper, a), h)) && all;
        return all;
    };

    bool ok = true;
    for (const auto& y : samples) {
        if (static_cast<int>(y.size()) != rank + 1)
            throw Error(ErrorKind::DimensionMismatch, "samples need " + std::to_string(rank + 1) + " coordinates");
        for (const auto& p : subsets)
            for (const auto& r : subsets) {
                if (!subset_of(p, r)) continue;
                /* H in a_P^R: the part of y in the span of S_R coroots, with the S_P coroot part removed. */
                const RatVec yr = w.project(r, y);
                RatVec h = yr;
                const RatVec yp = w.project(p, yr);
                for (std::size_t i = 0; i < h.size(); ++i) h[i] -= yp[i];
                long qr = 0, pq = 0;
                for (const auto& q : subsets) {
                    if (!subset_of(p, q) || !subset_of(q, r)) continue;
                    const RatVec upper = w.project(q, h);  // [H]^Q
                    RatVec lower = h;                       // [H]_Q
                    for (std::size_t i = 0; i < h.size(); ++i) lower[i] -= upper[i];
                    const long s_rq = (r.size() - q.size()) % 2 == 0 ? 1 : -1;
                    const long s_qp = (q.size() - p.size()) % 2 == 0 ? 1 : -1;
                    if (tau(p, q, upper) && tauhat(q, r, lower)) qr += s_rq;
                    if (tauhat(p, q, upper) && tau(q, r, lower)) pq += s_qp;
                }
                const long delta = p == r ? 1 : 0;
                ok = ok && qr == delta && pq == delta;
            }
    }
    return ok;
}

ParabolicPoset standard_poset(const GroupSpec& g, long genus) {
    if (g.family != Family::U && g.family != Family::SOodd && g.family != Family::Sp)
        throw Error(ErrorKind::UnsupportedFamily, "parabolic posets are built for U, SO(2n+1) and Sp, not " + group_name(g));
    check_rank(g);
    if (genus < 1) throw Error(ErrorKind::InvalidPoint, "genus must be at least 1");
    ParabolicPoset poset;
    poset.group = g;
    poset.genus = genus;
    poset.roots = build_root_system(g);
    if (poset.roots.rank > 3) throw Error(ErrorKind::UnsupportedRank, "parabolic posets are limited to rank 3");
    poset.elements = all_subsets(poset.roots.rank);
    const std::vector<int> none;
    for (const auto& s : poset.elements) {
        const long dim_n = static_cast<long>(relative_roots(poset.roots, s, [&] {
                                                  std::vector<int> all(static_cast<std::size_t>(poset.roots.rank));
                                                  for (int i = 0; i < poset.roots.rank; ++i) all[static_cast<std::size_t>(i)] = i;
                                                  return all;
                                              }()).size());
        poset.n_weight.push_back(2 * (genus - 1) * dim_n);
        std::ostringstream os;
        if (static_cast<int>(s.size()) == poset.roots.rank) {
            os << "G";
        } else if (s.empty()) {
            os << "B";
        } else {
            os << "P{";
            for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
            os << "}";
        }
        poset.labels.push_back(os.str());
    }
    return poset;
}

bool poset_leq(const ParabolicPoset& poset, std::size_t p, std::size_t q) {
    return subset_of(poset.elements.at(p), poset.elements.at(q));
}

std::size_t poset_top(const ParabolicPoset& poset) { return poset.elements.size() - 1; }

std::vector<RatFun> levi_gauge_series(const ParabolicPoset& poset) {
    std::vector<RatFun> out(poset.elements.size());
    std::vector<bool> seen(poset.elements.size(), false);
    for (const auto& I : enumerate_parabolics(poset.group)) {
        const LeviProfile prof = levi_profile(poset.group, I);
        std::vector<int> levi;
        for (int i = 1; i <= poset.roots.rank; ++i)
            if (!std::binary_search(prof.cut_set.begin(), prof.cut_set.end(), i)) levi.push_back(i - 1);
        const auto it = std::find(poset.elements.begin(), poset.elements.end(), levi);
        if (it == poset.elements.end()) continue;
        const auto idx = static_cast<std::size_t>(it - poset.elements.begin());
        out[idx] = bg_levi(prof, poset.genus);
        seen[idx] = true;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw Error(ErrorKind::InadmissibleCase, "Levi data missing for some parabolic of " + group_name(poset.group));
    return out;
}

ConeSumSpec pair_cone(const ParabolicPoset& poset, std::size_t p, std::size_t q, const RatVec& x) {
    if (!poset_leq(poset, p, q)) throw Error(ErrorKind::InvalidPoint, poset.labels[p] + " is not contained in " + poset.labels[q]);
    if (static_cast<int>(x.size()) != poset.roots.dim) throw Error(ErrorKind::DimensionMismatch, "cocharacter has the wrong length");
    const auto& sp = poset.elements[p];
    const auto& sq = poset.elements[q];
    const RatVec rho4 = four_rho(poset.roots, sp, sq);
    ConeSumSpec spec;
    for (int a : difference(sq, sp)) {
        spec.weights.push_back(checked_exponent(pairing(rho4, poset.roots.simple_coroots[static_cast<std::size_t>(a)]),
                                                "4<rho, alpha^vee>"));
        spec.classes.push_back(pairing(relative_fundamental_weight(poset.roots, sq, a), x));
    }
    return spec;
}

RatFun invert_at(const ParabolicPoset& poset, const std::vector<RatFun>& a0, std::size_t q, const RatVec& x) {
    if (a0.size() != poset.elements.size()) throw Error(ErrorKind::DimensionMismatch, "a0 must have one value per element");
    RatFun b;
    for (std::size_t p = 0; p < poset.elements.size(); ++p) {
        if (!poset_leq(poset, p, q)) continue;
        const std::size_t gap = poset.elements[q].size() - poset.elements[p].size();
        RatFun term = a0[p] * cone_sum_closed(pair_cone(poset, p, q, x));
        term *= t_pow(static_cast<std::size_t>(poset.n_weight[p] - poset.n_weight[q]));
        if (gap % 2 == 0)
            b += term;
        else
            b -= term;
    }
    return b;
}

InversionResult invert_abstract(const ParabolicPoset& poset, const std::vector<RatFun>& a0, const RatVec& x,
                                std::size_t truncation) {
    const std::size_t m = poset.elements.size();
    const RootSystem& rs = poset.roots;
    InversionResult res;
    for (std::size_t q = 0; q < m; ++q) res.b0.push_back(invert_at(poset, a0, q, x));

    WeightTable w(rs);
    /* b(P, .) depends on nu only through the classes of varpi^P_beta(nu), beta in S_P. */
    std::map<std::pair<std::size_t, std::vector<BigRat>>, CoeffVector> memo;
    auto b_series = [&](std::size_t p, const RatVec& y) -> const CoeffVector& {
        std::vector<BigRat> key;
        for (int b : poset.elements[p]) key.push_back(mod_one(pairing(w.get(poset.elements[p], b), y)));
        auto it = memo.find({p, key});
        if (it == memo.end()) it = memo.emplace(std::make_pair(p, key), series_expand(invert_at(poset, a0, p, y), truncation)).first;
        return it->second;
    };

    res.round_trip = true;
    for (std::size_t q = 0; q < m; ++q) {
        CoeffVector resid = series_expand(a0[q], truncation);
        const auto& sq = poset.elements[q];
        for (std::size_t p = 0; p < m; ++p) {
            if (!poset_leq(poset, p, q)) continue;
            const auto& sp = poset.elements[p];
            const auto gaps = difference(sq, sp);
            const RatVec rho4 = four_rho(rs, sp, sq);
            const long shift = poset.n_weight[p] - poset.n_weight[q];
            /* nu_P = x + sum c_a a^vee over a in S_Q - S_P; the exponent grows with each varpi^Q_a(nu_P) > 0. */
            std::vector<BigRat> base;
            for (int a : gaps) base.push_back(pairing(w.get(sq, a), x));
            RatVec y = x;
            auto rec = [&](auto&& self, std::size_t j) -> void {
                if (j == gaps.size()) {
                    const RatVec yp = w.project(sp, y);
                    for (int a : gaps) {
                        const RatVec& root = rs.simple_roots[static_cast<std::size_t>(a)];
                        if (pairing(root, y) - pairing(root, yp) <= 0) return;
                    }
                    const long e = shift + checked_exponent(pairing(rho4, y), "relative codimension");
                    if (e < 0 || e > static_cast<long>(truncation)) return;
                    const CoeffVector& s = b_series(p, y);
                    for (std::size_t i = 0; i + static_cast<std::size_t>(e) <= truncation; ++i) resid[i + static_cast<std::size_t>(e)] -= s[i];
                    return;
                }
                const RatVec& cor = rs.simple_coroots[static_cast<std::size_t>(gaps[j])];
                mpz_class lo;
                mpz_fdiv_q(lo.get_mpz_t(), base[j].get_num_mpz_t(), base[j].get_den_mpz_t());
                /* varpi^Q_a(nu_P) = base + c ranges over (0, truncation]. */
                for (long c = -lo.get_si(); base[j] + c <= static_cast<long>(truncation); ++c) {
                    if (base[j] + c <= 0) continue;
                    const RatVec saved = y;
                    y = axpy(y, c, cor);
                    self(self, j + 1);
                    y = saved;
                }
            };
            rec(rec, 0);
        }
        res.round_trip = res.round_trip && std::all_of(resid.begin(), resid.end(), [](const BigInt& v) { return v == 0; });
        res.residual.push_back(std::move(resid));
    }
    return res;
}

}  // namespace ym
