#include "ym/strata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace ym {

bool operator<(const AtiyahBottPoint& a, const AtiyahBottPoint& b) {
    return std::tie(a.composition, a.labels, a.tail) < std::tie(b.composition, b.labels, b.tail);
}

namespace {

/* k_a/n_a > k_b/n_b */
bool slope_gt(long ka, long na, long kb, long nb) { return ka * nb > kb * na; }

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InvalidPoint, what);
}

Family supported_family(const GroupSpec& g) {
    const Family f = g.family;
    if (f != Family::U && f != Family::SOodd && f != Family::SOeven && f != Family::Sp)
        throw Error(ErrorKind::UnsupportedFamily, "strata are implemented for U, SO and Sp, not " + group_name(g));
    return f;
}

long label_sum(const AtiyahBottPoint& mu, bool drop_last) {
    long s = 0;
    for (std::size_t j = 0; j + (drop_last ? 1 : 0) < mu.labels.size(); ++j) s += mu.labels[j];
    return s;
}

int parity(long x) { return static_cast<int>(((x % 2) + 2) % 2); }

long codim_at(const RootSystem& rs, const RatVec& x, long genus) {
    BigRat d = 0;
    for (const auto& beta : rs.positive_roots) {
        const BigRat a = pairing(beta, x);
        if (a > 0) d += a + genus - 1;
    }
    return rat_to_int(d, ErrorKind::NonIntegerCodimension, "codimension").get_si();
}

}  // namespace

void validate_point(const GroupSpec& g, const AtiyahBottPoint& mu) {
    const Family f = supported_family(g);
    require(mu.family == f, "point family does not match " + group_name(g));
    const auto& c = mu.composition;
    const auto& k = mu.labels;
    require(!c.empty() && c.size() == k.size(), "composition and labels must be nonempty and of equal length");
    require(std::all_of(c.begin(), c.end(), [](int x) { return x >= 1; }), "composition parts must be positive");
    require(std::accumulate(c.begin(), c.end(), 0) == g.n, "composition must sum to " + std::to_string(g.n));
    const std::size_t r = c.size();
    auto decreasing = [&](std::size_t upto) {
        for (std::size_t j = 0; j + 1 < upto; ++j)
            if (!slope_gt(k[j], c[j], k[j + 1], c[j + 1])) return false;
        return true;
    };
    switch (f) {
        case Family::U:
            require(mu.tail == PointTail::None, "U(n) points carry no tail");
            require(decreasing(r), "slopes must strictly decrease");
            break;
        case Family::Sp:
        case Family::SOodd:
            require(mu.tail != PointTail::MinusLast, "only SO(2n) points may negate the last coordinate");
            require(decreasing(r), "slopes must strictly decrease");
            require(k.back() >= 0, "the last slope must be nonnegative");
            require((mu.tail == PointTail::ZeroBlock) == (k.back() == 0), "a zero block is exactly a last label 0");
            break;
        case Family::SOeven:
            if (c.back() == 1) {
                require(r >= 2, "SO(2n) needs n >= 2");
                require(mu.tail == PointTail::None, "a last block of size 1 carries no tail");
                require(decreasing(r - 1), "slopes must strictly decrease");
                require(slope_gt(k[r - 2], c[r - 2], std::abs(k.back()), 1), "k_{r-1}/n_{r-1} must exceed |k_r|");
            } else if (mu.tail == PointTail::ZeroBlock) {
                require(k.back() == 0, "a zero block has label 0");
                require(decreasing(r), "slopes must strictly decrease");
            } else {
                require(k.back() > 0, "the last slope must be positive");
                require(decreasing(r), "slopes must strictly decrease");
            }
            break;
        default: break;
    }
}

RatVec chamber_vector(const GroupSpec& g, const AtiyahBottPoint& mu) {
    validate_point(g, mu);
    RatVec x;
    for (std::size_t j = 0; j < mu.composition.size(); ++j)
        for (int i = 0; i < mu.composition[j]; ++i) x.push_back(make_rat(mu.labels[j], mu.composition[j]));
    if (mu.tail == PointTail::MinusLast) x.back() = -x.back();
    return x;
}

long point_topclass(const GroupSpec& g, const AtiyahBottPoint& mu) {
    switch (supported_family(g)) {
        case Family::U: return label_sum(mu, false);
        case Family::SOodd:
        case Family::SOeven: return parity(label_sum(mu, false));
        default: return 0;
    }
}

long codim(const GroupSpec& g, const AtiyahBottPoint& mu, long genus) {
    return codim_at(build_root_system(g), chamber_vector(g, mu), genus);
}

std::vector<RankedPoint> enumerate_ab_points(const GroupSpec& g, const TopClass& c, long genus, long bound) {
    const Family f = supported_family(g);
    const RootSystem rs = build_root_system(g);
    /*
     * A nonzero top slope lambda_1 > 0 (or a slope gap for U) is bounded by the codimension,
     * since one positive root already evaluates to at least that much; every |k_j| <= n_j * max|lambda|.
     */
    const long K = std::abs(f == Family::U ? c.k : 0) + static_cast<long>(g.n) * std::max(bound, 0L);
    std::vector<RankedPoint> out;

    auto consider = [&](const AtiyahBottPoint& mu) {
        try {
            validate_point(g, mu);
        } catch (const Error&) {
            return;
        }
        if (f == Family::U && label_sum(mu, false) != c.k) return;
        if ((f == Family::SOodd || f == Family::SOeven) && mu.tail != PointTail::ZeroBlock &&
            parity(label_sum(mu, false)) != parity(c.k))
            return;
        const long d = codim_at(rs, chamber_vector(g, mu), genus);
        if (d <= bound) out.push_back({mu, d});
    };

    for (const auto& comp : compositions(g.n)) {
        const std::size_t r = comp.size();
        std::vector<long> labels(r, 0);
        const bool signed_last = f == Family::U || (f == Family::SOeven && comp.back() == 1);
        /* Depth-first over labels, pruning on the strict slope order of the prefix. */
        auto rec = [&](auto&& self, std::size_t j) -> void {
            if (j == r) {
                AtiyahBottPoint mu{f, comp, labels, PointTail::None};
                if (f == Family::U) return consider(mu);
                if (f == Family::SOeven && comp.back() == 1) return consider(mu);
                if (labels.back() == 0) {
                    mu.tail = PointTail::ZeroBlock;
                    return consider(mu);
                }
                consider(mu);
                if (f == Family::SOeven) {
                    mu.tail = PointTail::MinusLast;
                    consider(mu);
                }
                return;
            }
            const bool last = j + 1 == r;
            const long lo = (f == Family::U || (last && signed_last)) ? -K : 0;
            if (f == Family::U && last) {
                long rest = c.k;
                for (std::size_t i = 0; i + 1 < r; ++i) rest -= labels[i];
                if (j > 0 && !slope_gt(labels[j - 1], comp[j - 1], rest, comp[j])) return;
                labels[j] = rest;
                return self(self, j + 1);
            }
            for (long v = lo; v <= K; ++v) {
                if (j > 0 && !(last && signed_last && f == Family::SOeven) && !slope_gt(labels[j - 1], comp[j - 1], v, comp[j]))
                    continue;
                labels[j] = v;
                self(self, j + 1);
            }
        };
        rec(rec, 0);
    }
    std::sort(out.begin(), out.end(), [](const RankedPoint& a, const RankedPoint& b) {
        return std::tie(a.codim, a.point) < std::tie(b.codim, b.point);
    });
    return out;
}

RatFun stratum_series(const GroupSpec& g, const AtiyahBottPoint& mu, long genus, ComponentTag tag) {
    validate_point(g, mu);
    const Family f = g.family;
    const bool zero = mu.tail == PointTail::ZeroBlock;
    const std::size_t blocks = zero ? mu.composition.size() - 1 : mu.composition.size();
    /* Sp blocks carry +k_j, SO blocks -k_j; U(n_j) blocks are the degree-k_j central series. */
    const long sign = (f == Family::SOodd || f == Family::SOeven) ? -1 : 1;
    RatFun s(1);
    for (std::size_t j = 0; j < blocks; ++j) s *= zagier_un(mu.composition[j], sign * mu.labels[j], genus);
    if (!zero) return s;
    const int nr = mu.composition.back();
    if (f == Family::Sp) return s * sp_flat(nr, genus);
    if (tag == ComponentTag::None)
        throw Error(ErrorKind::AmbiguousComponent, "zero-block point " + render_point(mu) + " needs a component tag");
    const int w = parity((tag == ComponentTag::Plus ? 0 : 1) + label_sum(mu, true));
    return s * (f == Family::SOodd ? so_odd_flat(nr, genus, w) : so_even_flat(nr, genus, w));
}

RecursionReport verify_recursion(const GroupSpec& g, const TopClass& c, long genus, long degree) {
    supported_family(g);
    if (genus < 2) throw Error(ErrorKind::InvalidPoint, "the recursion is stated for genus >= 2");
    if (degree < 0) throw Error(ErrorKind::TruncationTooSmall, "negative truncation degree");
    RecursionReport rep{g, c, genus, degree, false, {}, {}};
    const auto order = static_cast<std::size_t>(degree);
    CoeffVector residual = series_expand(bg_orientable(betti_degrees(g), genus), order);
    rep.strata = enumerate_ab_points(g, c, genus, degree / 2);
    const ComponentTag tag = parity(c.k) == 0 ? ComponentTag::Plus : ComponentTag::Minus;
    for (const auto& rp : rep.strata) {
        const RatFun term = t_pow(static_cast<std::size_t>(2 * rp.codim)) * stratum_series(g, rp.point, genus, tag);
        const CoeffVector s = series_expand(term, order);
        for (std::size_t i = 0; i <= order; ++i) residual[i] -= s[i];
    }
    rep.holds = std::all_of(residual.begin(), residual.end(), [](const BigInt& x) { return x == 0; });
    rep.residual = std::move(residual);
    return rep;
}

std::string render_point(const AtiyahBottPoint& mu) {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < mu.composition.size(); ++j) os << (j ? "," : "") << mu.composition[j];
    os << ";";
    for (std::size_t j = 0; j < mu.labels.size(); ++j) os << (j ? "," : "") << mu.labels[j];
    os << ")";
    if (mu.tail == PointTail::ZeroBlock) os << " zero-block";
    if (mu.tail == PointTail::MinusLast) os << " minus-last";
    return os.str();
}

}  // namespace ym
