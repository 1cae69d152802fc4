#pragma once

/**
 * Exact rational arithmetic over Q, Weil heights, and bounded-height
 * enumeration, backed by GMP.
 *
 * Every Rational is kept in canonical form:
 *   - gcd(|numerator|, denominator) = 1
 *   - denominator >= 1 (sign lives in the numerator)
 *   - zero is uniquely 0/1
 *
 * Heights come in two flavors: the naive (multiplicative) height
 * max(|p|, q), kept as an exact integer so comparisons never round, and
 * the logarithmic Weil height h(x) = log max(|p|, q), a derived double
 * used for reporting and inequalities with slack.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "preheight/errors.hpp"

namespace preheight {

using BigInt = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: integers embed implicitly
    Rational(const BigInt& n) : v_(n) {}

    /// Canonical representative of num/den. Throws DomainError if den = 0.
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p" or "p/q" with exact integer parts. Decimal notation is
    /// rejected (no silent rounding). Throws DomainError on bad syntax or
    /// zero denominator.
    static Rational from_string(std::string_view s);

    BigInt numerator() const { return BigInt(mpq_numref(v_.get_mpq_t())); }
    BigInt denominator() const { return BigInt(mpq_denref(v_.get_mpq_t())); }
    mpq_srcptr raw() const { return v_.get_mpq_t(); }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_.get_mpq_t()), 1) == 0; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    Rational operator-() const;
    Rational reciprocal() const;  // throws DomainError on zero

    /// x^2 as p^2/q^2. Coprimality survives squaring, so no reduction gcd
    /// runs; deep exact orbits would otherwise pay a useless gcd of huge
    /// coprime operands at every step.
    Rational squared() const;

    Rational& operator+=(const Rational& rhs) { v_ += rhs.v_; return *this; }
    Rational& operator-=(const Rational& rhs) { v_ -= rhs.v_; return *this; }
    Rational& operator*=(const Rational& rhs) { v_ *= rhs.v_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) <=> 0;
    }

    /// "p" for integers, "p/q" otherwise; exact decimal digits.
    std::string to_string() const;

    /// Nearest-double approximation; display only, never a comparison key.
    double to_double() const { return mpq_get_d(v_.get_mpq_t()); }

private:
    mpq_class v_;
};

Rational abs(const Rational& x);

/// The unique reduced representative of p/q with positive denominator;
/// reduce(p, q) = reduce(kp, kq) for any nonzero k. Same contract as the
/// two-argument constructor, as a named operation.
inline Rational reduce(const BigInt& p, const BigInt& q) { return Rational(p, q); }

/// max(|numerator|, denominator) as an exact integer; always >= 1, and
/// equals 1 exactly for x in {0, 1, -1}.
BigInt naive_height(const Rational& x);

/// log of a positive big integer in double precision.
double log_big(const BigInt& n);

/// Absolute logarithmic Weil height h(x) = log(naive_height(x)).
/// Exact +0.0 for x in {0, 1, -1}.
double weil_height(const Rational& x);

/// All x with naive_height(x) <= bound, each exactly once, ordered by
/// ascending naive height, then ascending numerator, then ascending
/// denominator. The order is part of the contract: downstream CSV output
/// must be byte-stable. Throws ResourceError above kMaxEnumerationBound.
std::vector<Rational> enumerate_rationals(std::uint64_t bound);

inline constexpr std::uint64_t kMaxEnumerationBound = 2000;

/// floor(exp(t)) as the naive-height cap for counting, with values within
/// a few ulps of an integer snapped to it: exp(log B) does not round-trip
/// exactly in doubles, and the count at t = log B must match the
/// enumeration at bound B.
std::uint64_t naive_cap_from_log(double t);

/// #{x in Q : weil_height(x) <= t}, counted exactly as reduced pairs with
/// max(|p|, q) <= naive_cap_from_log(t). Counting goes through a totient
/// sieve, a route independent of the enumeration loop.
std::uint64_t count_bounded_height(double t);

}  // namespace preheight
