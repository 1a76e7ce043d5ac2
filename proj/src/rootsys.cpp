#include "ym/rootsys.hpp"

#include <algorithm>
#include <map>

namespace ym {

std::string family_flag(Family f) {
    switch (f) {
        case Family::U: return "u";
        case Family::SU: return "su";
        case Family::SOodd: return "so-odd";
        case Family::SOeven: return "so-even";
        case Family::Sp: return "sp";
        case Family::SpinOdd: return "spin-odd";
        case Family::SpinEven: return "spin-even";
    }
    return "?";
}

Family parse_family(const std::string& flag) {
    for (Family f : {Family::U, Family::SU, Family::SOodd, Family::SOeven, Family::Sp, Family::SpinOdd, Family::SpinEven})
        if (family_flag(f) == flag) return f;
    throw Error(ErrorKind::ParseError, "unknown group family '" + flag + "'");
}

DegreeProfile betti_degrees(const GroupSpec& g) {
    DegreeProfile d;
    switch (base_family(g.family)) {
        case Family::U:
            for (int k = g.family == Family::SU ? 2 : 1; k <= g.n; ++k) d.degrees.push_back(k);
            d.center_count = g.family == Family::SU ? 0 : 1;
            break;
        case Family::SOodd:
        case Family::Sp:
            for (int k = 1; k <= g.n; ++k) d.degrees.push_back(2 * k);
            break;
        case Family::SOeven:
            for (int k = 1; k < g.n; ++k) d.degrees.push_back(2 * k);
            d.degrees.push_back(g.n);
            std::sort(d.degrees.begin(), d.degrees.end());
            break;
        default: break;
    }
    if (!d.degrees.empty() && d.degrees.front() == 1 && d.center_count == 0) d.center_count = 1;
    return d;
}

std::string group_name(const GroupSpec& g) {
    const std::string n = std::to_string(g.n);
    switch (g.family) {
        case Family::U: return "U(" + n + ")";
        case Family::SU: return "SU(" + n + ")";
        case Family::SOodd: return "SO(" + std::to_string(2 * g.n + 1) + ")";
        case Family::SOeven: return "SO(" + std::to_string(2 * g.n) + ")";
        case Family::Sp: return "Sp(" + n + ")";
        case Family::SpinOdd: return "Spin(" + std::to_string(2 * g.n + 1) + ")";
        case Family::SpinEven: return "Spin(" + std::to_string(2 * g.n) + ")";
    }
    return "?";
}

Family base_family(Family f) {
    switch (f) {
        case Family::SU: return Family::U;
        case Family::SpinOdd: return Family::SOodd;
        case Family::SpinEven: return Family::SOeven;
        default: return f;
    }
}

RootType root_type(Family f) {
    switch (base_family(f)) {
        case Family::SOodd: return RootType::B;
        case Family::SOeven: return RootType::D;
        case Family::Sp: return RootType::C;
        default: return RootType::A;
    }
}

void check_rank(const GroupSpec& g) {
    const int min_rank = base_family(g.family) == Family::SOeven ? 2 : (g.family == Family::SU ? 2 : 1);
    if (g.n < min_rank)
        throw Error(ErrorKind::UnsupportedRank, group_name(g) + " needs rank parameter >= " + std::to_string(min_rank));
}

BigRat pairing(const RatVec& covector, const RatVec& vector) {
    if (covector.size() != vector.size())
        throw Error(ErrorKind::DimensionMismatch, "pairing of lengths " + std::to_string(covector.size()) + " and " +
                                                      std::to_string(vector.size()));
    BigRat s = 0;
    for (std::size_t i = 0; i < covector.size(); ++i) s += covector[i] * vector[i];
    return s;
}

RatVec unit_vector(int dim, int index, long scale) {
    RatVec v(static_cast<std::size_t>(dim), BigRat(0));
    v[static_cast<std::size_t>(index)] = scale;
    return v;
}

namespace {

RatVec coroot_of(const RatVec& root) {
    BigRat norm2 = pairing(root, root);
    RatVec v(root.size());
    for (std::size_t i = 0; i < root.size(); ++i) v[i] = 2 * root[i] / norm2;
    return v;
}

RatVec add(const RatVec& a, const RatVec& b, long s = 1) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
}

std::vector<RatVec> simple_system(RootType type, int n) {
    std::vector<RatVec> s;
    for (int i = 0; i + 1 < n; ++i) {
        RatVec a = unit_vector(n, i);
        a[static_cast<std::size_t>(i + 1)] = -1;
        s.push_back(a);
    }
    switch (type) {
        case RootType::A: break;
        case RootType::B: s.push_back(unit_vector(n, n - 1)); break;
        case RootType::C: s.push_back(unit_vector(n, n - 1, 2)); break;
        case RootType::D: {
            RatVec a = unit_vector(n, n - 2);
            a[static_cast<std::size_t>(n - 1)] = 1;
            s.push_back(a);
            break;
        }
    }
    return s;
}

}  // namespace

std::vector<std::vector<BigRat>> cartan_matrix(const RootSystem& rs, const std::vector<int>& subset) {
    std::vector<std::vector<BigRat>> c(subset.size(), std::vector<BigRat>(subset.size()));
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = 0; j < subset.size(); ++j)
            c[i][j] = pairing(rs.simple_roots[static_cast<std::size_t>(subset[i])], rs.simple_coroots[static_cast<std::size_t>(subset[j])]);
    return c;
}

RatVec solve_linear(std::vector<std::vector<BigRat>> a, RatVec b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Error(ErrorKind::DimensionMismatch, "singular linear system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            BigRat f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

RatVec relative_fundamental_weight(const RootSystem& rs, const std::vector<int>& subset, int alpha) {
    /* w = sum_k c_k alpha_k with sum_k c_k C[k][j] = delta(j, alpha), i.e. C^T c = e. */
    auto c = cartan_matrix(rs, subset);
    const std::size_t m = subset.size();
    std::vector<std::vector<BigRat>> ct(m, std::vector<BigRat>(m));
    RatVec e(m, BigRat(0));
    bool found = false;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) ct[i][j] = c[j][i];
        if (subset[i] == alpha) {
            e[i] = 1;
            found = true;
        }
    }
    if (!found) throw Error(ErrorKind::InvalidPoint, "simple root is not in the given subset");
    RatVec coef = solve_linear(std::move(ct), std::move(e));
    RatVec w(static_cast<std::size_t>(rs.dim), BigRat(0));
    for (std::size_t k = 0; k < m; ++k) w = add(w, [&] {
        RatVec s = rs.simple_roots[static_cast<std::size_t>(subset[k])];
        for (auto& x : s) x *= coef[k];
        return s;
    }());
    return w;
}

std::vector<long> simple_expansion(const RootSystem& rs, const RatVec& root) {
    std::vector<int> all(static_cast<std::size_t>(rs.rank));
    for (int i = 0; i < rs.rank; ++i) all[static_cast<std::size_t>(i)] = i;
    auto c = cartan_matrix(rs, all);
    const std::size_t m = all.size();
    std::vector<std::vector<BigRat>> ct(m, std::vector<BigRat>(m));
    RatVec rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) ct[i][j] = c[j][i];
        rhs[i] = pairing(root, rs.simple_coroots[i]);
    }
    RatVec coef = solve_linear(std::move(ct), std::move(rhs));
    std::vector<long> out;
    RatVec check(static_cast<std::size_t>(rs.dim), BigRat(0));
    for (std::size_t k = 0; k < m; ++k) {
        if (coef[k].get_den() != 1) throw Error(ErrorKind::InvalidPoint, "vector is not in the root lattice");
        out.push_back(coef[k].get_num().get_si());
        check = add(check, rs.simple_roots[k], out.back());
    }
    if (check != root) throw Error(ErrorKind::InvalidPoint, "vector is not in the span of the simple roots");
    return out;
}

RootSystem build_root_system(const GroupSpec& g) {
    check_rank(g);
    RootSystem rs;
    rs.type = root_type(g.family);
    rs.dim = g.n;
    rs.simple_roots = simple_system(rs.type, g.n);
    rs.rank = static_cast<int>(rs.simple_roots.size());
    for (const auto& a : rs.simple_roots) rs.simple_coroots.push_back(coroot_of(a));

    /*
     * Positive roots by height: beta + alpha_i is a root exactly when the
     * alpha_i-string through beta extends upward, i.e. q = p - <beta, alpha_i^vee> > 0
     * where p counts how far the string extends downward.
     */
    std::vector<RatVec> layer = rs.simple_roots;
    std::vector<RatVec> all;
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end(), [](const RatVec& a, const RatVec& b) { return b < a; });
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
        all.insert(all.end(), layer.begin(), layer.end());
        std::vector<RatVec> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < rs.rank; ++i) {
                const auto& a = rs.simple_roots[static_cast<std::size_t>(i)];
                if (beta == a) continue;
                long p = 0;
                for (RatVec d = add(beta, a, -1); std::find(all.begin(), all.end(), d) != all.end(); d = add(d, a, -1)) ++p;
                BigRat q = BigRat(p) - pairing(beta, rs.simple_coroots[static_cast<std::size_t>(i)]);
                if (q > 0) next.push_back(add(beta, a));
            }
        }
        layer = std::move(next);
    }
    rs.positive_roots = all;
    for (const auto& b : rs.positive_roots) {
        rs.positive_coroots.push_back(coroot_of(b));
        rs.expansions.push_back(simple_expansion(rs, b));
    }
    std::vector<int> every(static_cast<std::size_t>(rs.rank));
    for (int i = 0; i < rs.rank; ++i) every[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < rs.rank; ++i) rs.fundamental_weights.push_back(relative_fundamental_weight(rs, every, i));
    return rs;
}

RatVec pi1_representative(const GroupSpec& g, const TopClass& c) {
    switch (g.family) {
        case Family::U: return unit_vector(g.n, 0, c.k);
        case Family::SOodd:
        case Family::SOeven: return unit_vector(g.n, g.n - 1, ((c.k % 2) + 2) % 2);
        default: return RatVec(static_cast<std::size_t>(g.n), BigRat(0));
    }
}

BigRat mod_one(const BigRat& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - BigRat(fl);
}

BigRat weight_on_pi1(const GroupSpec& g, int i, const TopClass& c) {
    const RootSystem rs = build_root_system(g);
    if (i < 1 || i > rs.rank)
        throw Error(ErrorKind::InvalidPoint, "simple root index " + std::to_string(i) + " out of range for " + group_name(g));
    return mod_one(pairing(rs.fundamental_weights[static_cast<std::size_t>(i - 1)], pi1_representative(g, c)));
}

}  // namespace ym
