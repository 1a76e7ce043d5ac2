#include "ym/nonorient.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "ym/levidata.hpp"

namespace ym {

namespace {

bool slope_gt(long ka, long na, long kb, long nb) { return ka * nb > kb * na; }

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InvalidPoint, what);
}

int parity(long x) { return static_cast<int>(((x % 2) + 2) % 2); }
int sign_of(long exponent) { return parity(exponent) == 0 ? 1 : -1; }

long head_sum(const NonorientablePoint& p) {
    long s = 0;
    for (std::size_t j = 0; j + 1 < p.labels.size(); ++j) s += p.labels[j];
    return s;
}

bool decreasing(const std::vector<int>& c, const std::vector<long>& k, std::size_t upto) {
    for (std::size_t j = 0; j + 1 < upto; ++j)
        if (!slope_gt(k[j], c[j], k[j + 1], c[j + 1])) return false;
    return true;
}

}  // namespace

RatVec chamber_involution(const GroupSpec& g, const RatVec& mu) {
    RatVec out = mu;
    switch (base_family(g.family)) {
        case Family::U:
            for (std::size_t i = 0; i < mu.size(); ++i) out[i] = -mu[mu.size() - 1 - i];
            break;
        case Family::SOeven:
            if (g.n % 2 == 1 && !out.empty()) out.back() = -out.back();
            break;
        default: break;
    }
    return out;
}

void validate_nonorientable(const GroupSpec& g, const NonorientablePoint& p) {
    const Family f = g.family;
    if (f != Family::Sp && f != Family::SOodd && f != Family::SOeven)
        throw Error(ErrorKind::UnsupportedFamily, "nonorientable types are tabulated for SO and Sp, not " + group_name(g));
    check_rank(g);
    require(p.family == f, "point family does not match " + group_name(g));
    require(p.surface_i == 1 || p.surface_i == 2, "surface index must be 1 or 2");
    const auto& c = p.composition;
    const auto& k = p.labels;
    require(!c.empty() && c.size() == k.size(), "composition and labels must be nonempty and of equal length");
    require(std::all_of(c.begin(), c.end(), [](int x) { return x >= 1; }), "composition parts must be positive");
    require(std::accumulate(c.begin(), c.end(), 0) == g.n, "composition must sum to " + std::to_string(g.n));
    require(p.last_sign == 1 || p.last_sign == -1, "last sign must be +1 or -1");
    const std::size_t r = c.size();
    const std::size_t head = p.zero_tail ? r - 1 : r;
    if (p.zero_tail) require(k.back() == 0, "the zero tail has label 0");
    switch (f) {
        case Family::Sp:
            require(p.last_sign == 1, "Sp points carry no last sign");
            require(decreasing(c, k, head), "slopes must strictly decrease");
            if (head > 0) require(2 * k[head - 1] > c[head - 1], "slopes outside the tail must exceed 1/2");
            break;
        case Family::SOodd:
            require(p.last_sign == 1, "SO(2n+1) points carry no last sign");
            require(decreasing(c, k, r), "slopes must strictly decrease");
            require(k.back() >= 0, "the last slope must be nonnegative");
            require(p.zero_tail == (k.back() == 0), "a zero tail is exactly a last label 0");
            break;
        case Family::SOeven:
            if (g.n % 2 == 1) {
                require(p.zero_tail, "SO(4m+2) types always end in a zero tail");
                require(p.last_sign == 1, "a zero tail carries no last sign");
                require(decreasing(c, k, r), "slopes must strictly decrease");
            } else if (p.zero_tail) {
                require(c.back() > 1, "a zero tail of SO(4m) has size > 1");
                require(p.last_sign == 1, "a zero tail carries no last sign");
                require(decreasing(c, k, r), "slopes must strictly decrease");
            } else if (c.back() == 1) {
                require(r >= 2, "a last block of size 1 needs a block before it");
                require(p.last_sign == 1, "a last block of size 1 is signed through its label");
                require(decreasing(c, k, r - 1), "slopes must strictly decrease");
                require(slope_gt(k[r - 2], c[r - 2], std::abs(k.back()), 1), "k_{r-1}/n_{r-1} must exceed |k_r|");
            } else {
                require(k.back() > 0, "the last slope must be positive");
                require(decreasing(c, k, r), "slopes must strictly decrease");
            }
            break;
        default: break;
    }
}

RatVec nonorientable_chamber_vector(const GroupSpec& g, const NonorientablePoint& p) {
    validate_nonorientable(g, p);
    RatVec x;
    const std::size_t head = p.zero_tail ? p.composition.size() - 1 : p.composition.size();
    for (std::size_t j = 0; j < p.composition.size(); ++j) {
        BigRat v = 0;
        if (j < head) v = make_rat(2 * p.labels[j], p.composition[j]) - (g.family == Family::Sp ? 1 : 0);
        for (int i = 0; i < p.composition[j]; ++i) x.push_back(v);
    }
    if (p.last_sign == -1) x.back() = -x.back();
    return x;
}

std::vector<NonorientablePoint> enumerate_nonorientable_points(const GroupSpec& g, int surface_i, long bound) {
    std::vector<NonorientablePoint> out;
    const Family f = g.family;
    auto consider = [&](NonorientablePoint p) {
        try {
            validate_nonorientable(g, p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InvalidPoint) throw;
            return;
        }
        out.push_back(std::move(p));
    };
    for (const auto& comp : compositions(g.n)) {
        const std::size_t r = comp.size();
        std::vector<long> labels(r, 0);
        auto rec = [&](auto&& self, std::size_t j) -> void {
            if (j == r) {
                NonorientablePoint p{f, comp, labels, labels.back() == 0, 1, surface_i};
                consider(p);
                if (f == Family::SOeven && g.n % 2 == 0 && comp.back() > 1 && labels.back() > 0) {
                    p.last_sign = -1;
                    consider(p);
                }
                if (f == Family::SOeven && g.n % 2 == 0 && comp.back() == 1 && labels.back() == 0) {
                    /* A last block of size 1 with label 0 is a signed entry, not a zero tail. */
                    p.zero_tail = false;
                    consider(p);
                }
                return;
            }
            const bool signed_last = f == Family::SOeven && g.n % 2 == 0 && comp.back() == 1 && j + 1 == r;
            for (long v = signed_last ? -bound : 0; v <= bound; ++v) {
                labels[j] = v;
                self(self, j + 1);
            }
        };
        rec(rec, 0);
    }
    std::sort(out.begin(), out.end(), [](const NonorientablePoint& a, const NonorientablePoint& b) {
        return std::make_tuple(a.composition, a.labels, a.zero_tail, -a.last_sign) <
               std::make_tuple(b.composition, b.labels, b.zero_tail, -b.last_sign);
    });
    return out;
}

ComponentReport classify_components(const GroupSpec& g, const NonorientablePoint& p) {
    validate_nonorientable(g, p);
    ComponentReport rep;
    rep.group = g;
    rep.point = p;
    const long i = p.surface_i;
    const long n = g.n;
    rep.l_min = 2 * i;
    const std::size_t r = p.composition.size();
    const std::size_t head = p.zero_tail ? r - 1 : r;
    const long K = head_sum(p);
    const long nr = p.composition.back();
    /* Sp blocks keep +k_j, SO blocks are indexed by -k_j. */
    const long usign = g.family == Family::Sp ? 1 : -1;
    std::vector<TwistedFactor> unitary;
    for (std::size_t j = 0; j < head; ++j) unitary.push_back({FactorKind::TwistedU, p.composition[j], usign * p.labels[j], 1, 1});

    auto two_components = [&](int o_size, int det, long exponent) {
        for (int bundle = 0; bundle <= 1; ++bundle) {
            Component comp{bundle, false, unitary};
            comp.factors.push_back({FactorKind::TwistedO, o_size, 0, det, (bundle == 0 ? 1 : -1) * sign_of(exponent)});
            rep.components.push_back(std::move(comp));
        }
        if (o_size <= 2) rep.notes.push_back("connectedness of the O(" + std::to_string(o_size) + ") factor is not asserted for O(n) with n <= 2");
    };

    switch (g.family) {
        case Family::Sp: {
            Component comp{0, true, unitary};
            if (p.zero_tail) comp.factors.push_back({FactorKind::FlatSp, static_cast<int>(nr), 0, 1, 1});
            rep.components.push_back(std::move(comp));
            break;
        }
        case Family::SOodd:
            if (!p.zero_tail) {
                rep.components.push_back({parity(K + p.labels.back() + i * n * (n + 1) / 2), true, unitary});
            } else {
                const long m = n - nr;
                two_components(static_cast<int>(2 * nr + 1), sign_of(m), K + i * m * (m - 1) / 2);
            }
            break;
        case Family::SOeven:
            if (n % 2 == 1) {
                const long m = (n - 1) / 2;
                two_components(static_cast<int>(2 * nr), sign_of(nr - 1), K + i * m + i * nr * (nr - 1) / 2);
            } else {
                const long m = n / 2;
                if (!p.zero_tail)
                    rep.components.push_back({parity(K + p.labels.back() + i * m), true, unitary});
                else
                    two_components(static_cast<int>(2 * nr), sign_of(nr), K + i * m + i * nr * (nr + 1) / 2);
            }
            break;
        default: break;
    }
    return rep;
}

std::string w2_label(const Component& c) { return c.w2 == 0 ? "trivial_bundle" : "nontrivial_bundle"; }

std::string render_factor(const TwistedFactor& f) {
    std::ostringstream os;
    switch (f.kind) {
        case FactorKind::TwistedU: os << "M~(l,i;" << f.n << "," << f.k << ")"; break;
        case FactorKind::TwistedO:
            os << "M(l,i," << (f.sign > 0 ? "+" : "-") << ";O(" << f.n << ")," << (f.det > 0 ? "+" : "-") << ")";
            break;
        case FactorKind::FlatSp: os << "M(l,i;Sp(" << f.n << "))"; break;
    }
    return os.str();
}

std::string decomposition_render(const ComponentReport& r) {
    std::ostringstream os;
    for (const auto& comp : r.components) {
        if (r.components.size() > 1) os << (comp.w2 == 0 ? "+: " : "-: ");
        if (comp.factors.empty()) os << group_name(r.group);
        for (std::size_t j = 0; j < comp.factors.size(); ++j) os << (j ? " x " : "") << render_factor(comp.factors[j]);
        os << "\n";
    }
    return os.str();
}

}  // namespace ym
