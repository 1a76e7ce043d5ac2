#pragma once

/*
 * Exact univariate arithmetic in the formal variable t.
 *
 *   Poly    dense polynomial with arbitrary precision integer coefficients,
 *           index = power of t, no trailing zero coefficients.
 *   RatFun  quotient of two Polys kept in normal form:
 *             - gcd(num, den) is a unit (polynomial gcd and common content removed),
 *             - the leading coefficient of den is positive,
 *             - zero is represented as 0/1.
 *
 * Truncated power series are plain coefficient vectors (CoeffVector) of
 * length order+1.
 */

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ym/errors.hpp"

namespace ym {

using BigInt = mpz_class;
using BigRat = mpq_class;

/* Canonical reduced rational from a numerator and denominator. */
BigRat make_rat(long num, long den = 1);

/* Integer value of an integral rational, or throw with the given kind. */
BigInt rat_to_int(const BigRat& q, ErrorKind kind, const std::string& context);

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigInt> coeffs);
    Poly(long constant);                 // NOLINT: implicit from integer constants
    Poly(const BigInt& constant);        // NOLINT

    /* c * t^e */
    static Poly monomial(const BigInt& c, std::size_t e);
    /* 1 + s * t^e, the building block of every gauge-group factor. */
    static Poly binomial(long s, std::size_t e);

    bool is_zero() const noexcept { return c_.empty(); }
    /* -1 for the zero polynomial. */
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    /* Coefficient of t^i, zero outside the stored range. */
    BigInt coeff(std::size_t i) const;
    const BigInt& leading() const;
    /* Lowest power of t with a nonzero coefficient (0 for the zero polynomial). */
    std::size_t valuation() const noexcept;

    /* Nonnegative gcd of the coefficients (0 for the zero polynomial). */
    BigInt content() const;
    /* this / content, with positive leading coefficient. */
    Poly primitive_part() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const BigInt& s);
    /* Exact division of every coefficient by s; throws if not exact. */
    Poly& divide_exact(const BigInt& s);
    /* Multiply by t^k. */
    Poly shifted(std::size_t k) const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const BigInt& s) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim();
    std::vector<BigInt> c_;
};

enum class PolyOp { Add, Sub, Mul };
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);
Poly poly_pow(const Poly& base, unsigned e);

/* Exact quotient a / b; throws InexactDivision when b does not divide a. */
Poly poly_div_exact(const Poly& a, const Poly& b);
/* Primitive gcd with positive leading coefficient; gcd(0, 0) = 0. */
Poly poly_gcd(const Poly& a, const Poly& b);

class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}            // NOLINT
    RatFun(const Poly& p) : num_(p), den_(1) {}    // NOLINT

    /* Normalizing constructor; throws ZeroDenominator. */
    static RatFun make(const Poly& num, const Poly& den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    /* Cross-multiplication equality (independent of normal form). */
    friend bool operator==(const RatFun& a, const RatFun& b);
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

private:
    RatFun(Poly num, Poly den, bool /*already normal*/) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
    void normalize_content();
    Poly num_;
    Poly den_;
};

enum class RatOp { Add, Sub, Mul, Div };
RatFun ratfun_make(const Poly& num, const Poly& den);
RatFun ratfun_arith(const RatFun& f, const RatFun& g, RatOp op);
bool ratfun_eq(const RatFun& f, const RatFun& g);
/* f^e for any integer e (negative powers invert; throws DivisionByZero on 0^-e). */
RatFun ratfun_pow(const RatFun& f, long e);
/* t^e as a RatFun, e >= 0. */
RatFun t_pow(std::size_t e);

using CoeffVector = std::vector<BigInt>;

/* Coefficients of the power series of f up to t^order (length order+1). */
CoeffVector series_expand(const RatFun& f, std::size_t order);
/* Truncated Cauchy product of two coefficient vectors. */
CoeffVector series_mul(const CoeffVector& a, const CoeffVector& b, std::size_t order);

/* Plain text: "(1 + 4*t - t^3)/(1 - t^2)", monomials in increasing degree. */
std::string render_poly(const Poly& p);
std::string render_text(const RatFun& f);
/* LaTeX: "\frac{...}{...}", or the bare numerator when den = 1. */
std::string render_latex(const RatFun& f);
std::string render_coeffs(const CoeffVector& c);

/* Inverse of render_poly / render_text; throws ParseError. */
Poly parse_poly(std::string_view text);
RatFun parse_ratfun(std::string_view text);

}  // namespace ym
