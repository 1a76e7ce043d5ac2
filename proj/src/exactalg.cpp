#include "ym/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace ym {

const char* error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::PoleAtZero: return "PoleAtZero";
        case ErrorKind::NonIntegerCoefficient: return "NonIntegerCoefficient";
        case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
        case ErrorKind::NonIntegerCodimension: return "NonIntegerCodimension";
        case ErrorKind::UnsupportedRank: return "UnsupportedRank";
        case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InadmissibleCase: return "InadmissibleCase";
        case ErrorKind::AmbiguousComponent: return "AmbiguousComponent";
        case ErrorKind::InvalidPoint: return "InvalidPoint";
        case ErrorKind::WallPoint: return "WallPoint";
        case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
        case ErrorKind::InexactDivision: return "InexactDivision";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

BigRat make_rat(long num, long den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

BigInt rat_to_int(const BigRat& q, ErrorKind kind, const std::string& context) {
    if (q.get_den() != 1) throw Error(kind, context + " is not an integer: " + q.get_str());
    return q.get_num();
}

/* ---------------------------------------------------------------- Poly */

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(long constant) {
    if (constant != 0) c_.emplace_back(constant);
}

Poly::Poly(const BigInt& constant) {
    if (constant != 0) c_.push_back(constant);
}

Poly Poly::monomial(const BigInt& c, std::size_t e) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(e + 1, BigInt(0));
    p.c_[e] = c;
    return p;
}

Poly Poly::binomial(long s, std::size_t e) {
    return Poly(1) + monomial(BigInt(s), e);
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

const BigInt& Poly::leading() const {
    if (c_.empty()) throw Error(ErrorKind::InvalidPoint, "leading coefficient of the zero polynomial");
    return c_.back();
}

std::size_t Poly::valuation() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return i;
    return 0;
}

BigInt Poly::content() const {
    BigInt g = 0;
    for (const auto& a : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    Poly p = *this;
    BigInt g = content();
    if (c_.back() < 0) g = -g;
    if (g != 1) p.divide_exact(g);
    return p;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& a : p.c_) a = -a;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        const mpz_srcptr ai = a.c_[i].get_mpz_t();
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), ai, b.c_[j].get_mpz_t());
        }
    }
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const BigInt& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= s;
    return *this;
}

Poly& Poly::divide_exact(const BigInt& s) {
    if (s == 0) throw Error(ErrorKind::DivisionByZero, "polynomial divided by the integer 0");
    for (auto& a : c_) {
        if (!mpz_divisible_p(a.get_mpz_t(), s.get_mpz_t()))
            throw Error(ErrorKind::InexactDivision, "coefficient " + a.get_str() + " not divisible by " + s.get_str());
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), s.get_mpz_t());
    }
    return *this;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly p;
    p.c_.assign(k, BigInt(0));
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
    }
    return Poly();
}

Poly poly_pow(const Poly& base, unsigned e) {
    Poly result(1);
    Poly b = base;
    while (e > 0) {
        if (e & 1u) result *= b;
        e >>= 1u;
        if (e > 0) b = b * b;
    }
    return result;
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.is_zero()) return Poly();
    if (a.degree() < b.degree()) throw Error(ErrorKind::InexactDivision, "divisor degree exceeds dividend degree");
    std::vector<BigInt> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const BigInt& lb = bc.back();
    std::vector<BigInt> q(r.size() - db, BigInt(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt& top = r[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw Error(ErrorKind::InexactDivision, "polynomial quotient is not integral");
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), bc[j].get_mpz_t());
    }
    for (std::size_t i = 0; i < db && i < r.size(); ++i)
        if (r[i] != 0) throw Error(ErrorKind::InexactDivision, "polynomial division leaves a remainder");
    return Poly(std::move(q));
}

namespace {

/* Remainder of a by b, scaled by integer factors as needed to stay in Z[t]. */
Poly scaled_remainder(Poly a, const Poly& b) {
    const auto& bc = b.coeffs();
    const long db = b.degree();
    const BigInt& lb = bc.back();
    std::vector<BigInt> r = a.coeffs();
    long dr = static_cast<long>(r.size()) - 1;
    BigInt g, fa, fb;
    while (dr >= db) {
        if (r[dr] == 0) {
            --dr;
            continue;
        }
        mpz_gcd(g.get_mpz_t(), r[dr].get_mpz_t(), lb.get_mpz_t());
        mpz_divexact(fa.get_mpz_t(), lb.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(fb.get_mpz_t(), r[dr].get_mpz_t(), g.get_mpz_t());
        const long shift = dr - db;
        if (fa != 1)
            for (long i = 0; i < dr; ++i) r[i] *= fa;
        for (long j = 0; j < db; ++j) mpz_submul(r[shift + j].get_mpz_t(), fb.get_mpz_t(), bc[j].get_mpz_t());
        r[dr] = 0;
        --dr;
    }
    r.resize(static_cast<std::size_t>(std::max<long>(dr + 1, 0)));
    return Poly(std::move(r));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    /* Powers of t are split off first: they are common in every formula here. */
    const std::size_t v = std::min(a.valuation(), b.valuation());
    Poly x = a.primitive_part();
    Poly y = b.primitive_part();
    if (a.valuation() > 0) x = poly_div_exact(x, Poly::monomial(1, a.valuation()));
    if (b.valuation() > 0) y = poly_div_exact(y, Poly::monomial(1, b.valuation()));
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) {
            x = Poly(1);
            break;
        }
        Poly r = scaled_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x.primitive_part().shifted(v);
}

/* -------------------------------------------------------------- RatFun */

void RatFun::normalize_content() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    BigInt g = num_.content();
    const BigInt dc = den_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dc.get_mpz_t());
    if (den_.leading() < 0) g = -g;
    if (g != 1) {
        num_.divide_exact(g);
        den_.divide_exact(g);
    }
}

void RatFun::normalize() {
    if (den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_div_exact(num_, g);
            den_ = poly_div_exact(den_, g);
        }
    }
    normalize_content();
}

RatFun RatFun::make(const Poly& num, const Poly& den) {
    RatFun f(num, den, true);
    f.normalize();
    return f;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, true); }

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    /* Henrici: only the gcd of the new numerator with gcd(den, o.den) can cancel. */
    Poly g = poly_gcd(den_, o.den_);
    if (g.degree() <= 0) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        normalize_content();
        if (num_.is_zero()) den_ = Poly(1);
        return *this;
    }
    Poly d1 = poly_div_exact(den_, g);
    Poly d2 = poly_div_exact(o.den_, g);
    Poly n = num_ * d2 + o.num_ * d1;
    Poly d = d1 * o.den_;
    if (n.is_zero()) return *this = RatFun();
    Poly h = poly_gcd(n, g);
    if (h.degree() > 0) {
        n = poly_div_exact(n, h);
        d = poly_div_exact(d, h);
    }
    num_ = std::move(n);
    den_ = std::move(d);
    normalize_content();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero() || o.is_zero()) return *this = RatFun();
    Poly a = num_, b = den_, c = o.num_, d = o.den_;
    if (d.degree() > 0) {
        Poly g1 = poly_gcd(a, d);
        if (g1.degree() > 0) {
            a = poly_div_exact(a, g1);
            d = poly_div_exact(d, g1);
        }
    }
    if (b.degree() > 0) {
        Poly g2 = poly_gcd(c, b);
        if (g2.degree() > 0) {
            c = poly_div_exact(c, g2);
            b = poly_div_exact(b, g2);
        }
    }
    num_ = a * c;
    den_ = b * d;
    normalize_content();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function divided by zero");
    RatFun inv(o.den_, o.num_, true);
    inv.normalize_content();
    return *this *= inv;
}

bool operator==(const RatFun& a, const RatFun& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

RatFun ratfun_make(const Poly& num, const Poly& den) { return RatFun::make(num, den); }

RatFun ratfun_arith(const RatFun& f, const RatFun& g, RatOp op) {
    switch (op) {
        case RatOp::Add: return f + g;
        case RatOp::Sub: return f - g;
        case RatOp::Mul: return f * g;
        case RatOp::Div: return f / g;
    }
    return RatFun();
}

bool ratfun_eq(const RatFun& f, const RatFun& g) { return f == g; }

RatFun ratfun_pow(const RatFun& f, long e) {
    if (e < 0) {
        if (f.is_zero()) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
        return ratfun_pow(RatFun(1) / f, -e);
    }
    /* Normal form is preserved by powers, so no gcd work is required. */
    return RatFun::make(poly_pow(f.num(), static_cast<unsigned>(e)), poly_pow(f.den(), static_cast<unsigned>(e)));
}

RatFun t_pow(std::size_t e) { return RatFun(Poly::monomial(1, e)); }

/* -------------------------------------------------------------- series */

CoeffVector series_expand(const RatFun& f, std::size_t order) {
    const auto& dc = f.den().coeffs();
    if (dc.empty() || dc[0] == 0)
        throw Error(ErrorKind::PoleAtZero, "denominator vanishes at t = 0: " + render_text(f));
    const BigInt& d0 = dc[0];
    const auto& nc = f.num().coeffs();
    CoeffVector c(order + 1, BigInt(0));
    BigInt acc;
    for (std::size_t k = 0; k <= order; ++k) {
        acc = k < nc.size() ? nc[k] : BigInt(0);
        const std::size_t jmax = std::min(k, dc.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) {
            if (dc[j] == 0) continue;
            mpz_submul(acc.get_mpz_t(), dc[j].get_mpz_t(), c[k - j].get_mpz_t());
        }
        if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
            throw Error(ErrorKind::NonIntegerCoefficient,
                        "coefficient of t^" + std::to_string(k) + " is not an integer in " + render_text(f));
        mpz_divexact(c[k].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
    }
    return c;
}

CoeffVector series_mul(const CoeffVector& a, const CoeffVector& b, std::size_t order) {
    CoeffVector r(order + 1, BigInt(0));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return r;
}

/* ----------------------------------------------------------- rendering */

namespace {

std::string render_poly_with(const Poly& p, bool latex) {
    const auto& c = p.coeffs();
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        BigInt a = abs(c[i]);
        if (first) {
            if (c[i] < 0) os << '-';
        } else {
            os << (c[i] < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << (latex ? "" : "*");
        os << 't';
        if (i > 1) {
            if (latex)
                os << "^{" << i << '}';
            else
                os << '^' << i;
        }
    }
    return os.str();
}

}  // namespace

std::string render_poly(const Poly& p) { return render_poly_with(p, false); }

std::string render_text(const RatFun& f) { return "(" + render_poly(f.num()) + ")/(" + render_poly(f.den()) + ")"; }

std::string render_latex(const RatFun& f) {
    if (f.den() == Poly(1)) return render_poly_with(f.num(), true);
    return "\\frac{" + render_poly_with(f.num(), true) + "}{" + render_poly_with(f.den(), true) + "}";
}

std::string render_coeffs(const CoeffVector& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ' ';
        s += c[i].get_str();
    }
    return s;
}

/* ------------------------------------------------------------- parsing */

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    Poly parse_all() {
        Poly p = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

    Poly parse_sum() {
        std::vector<BigInt> coeffs;
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        for (;;) {
            auto [c, e] = parse_term();
            if (negative) c = -c;
            if (coeffs.size() <= e) coeffs.resize(e + 1, BigInt(0));
            coeffs[e] += c;
            skip_ws();
            const char ch = peek();
            if (ch == '+' || ch == '-') {
                negative = ch == '-';
                ++pos_;
                continue;
            }
            break;
        }
        return Poly(std::move(coeffs));
    }

    std::size_t pos() const { return pos_; }

private:
    std::pair<BigInt, std::size_t> parse_term() {
        skip_ws();
        BigInt c = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = BigInt(read_digits());
            have_coeff = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != 't') fail("expected 't' after '*'");
            }
        }
        if (peek() != 't') {
            if (!have_coeff) fail("expected a coefficient or 't'");
            return {c, 0};
        }
        ++pos_;
        skip_ws();
        std::size_t e = 1;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            bool braces = peek() == '{';
            if (braces) ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
            e = std::stoul(read_digits());
            if (braces) {
                if (peek() != '}') fail("expected '}'");
                ++pos_;
            }
        }
        return {c, e};
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/* Position of the ')' matching the '(' at s[0], or npos. */
std::size_t matching_paren(std::string_view s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) return i;
    }
    return std::string_view::npos;
}

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(strip(text)).parse_all(); }

RatFun parse_ratfun(std::string_view text) {
    std::string_view s = strip(text);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational function");
    if (s.front() != '(') return RatFun(parse_poly(s));
    const std::size_t close = matching_paren(s);
    if (close == std::string_view::npos) throw Error(ErrorKind::ParseError, "unbalanced parentheses in \"" + std::string(s) + "\"");
    Poly num = parse_poly(s.substr(1, close - 1));
    std::string_view rest = strip(s.substr(close + 1));
    if (rest.empty()) return RatFun(num);
    if (rest.front() != '/') throw Error(ErrorKind::ParseError, "expected '/' in \"" + std::string(s) + "\"");
    rest = strip(rest.substr(1));
    if (rest.empty() || rest.front() != '(' || matching_paren(rest) != rest.size() - 1)
        throw Error(ErrorKind::ParseError, "denominator must be parenthesized in \"" + std::string(s) + "\"");
    Poly den = parse_poly(rest.substr(1, rest.size() - 2));
    return RatFun::make(num, den);
}

}  // namespace ym
