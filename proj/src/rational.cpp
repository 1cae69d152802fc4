#include "preheight/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace preheight {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (mpz_sgn(den.get_mpz_t()) == 0) {
        throw DomainError("rational: division by zero (denominator = 0)");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    auto is_int = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && (t.front() == '-' || t.front() == '+')) {
            t.remove_prefix(1);
        }
        if (t.empty()) return false;
        for (char ch : t) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        }
        return true;
    };
    const auto slash = s.find('/');
    std::string_view num_part = s.substr(0, slash);
    if (!is_int(num_part, true)) {
        throw DomainError("rational: cannot parse '" + std::string(s) +
                          "' (expected p or p/q with integer parts)");
    }
    if (num_part.front() == '+') num_part.remove_prefix(1);  // mpz rejects a leading '+'
    BigInt num(std::string(num_part), 10);
    if (slash == std::string_view::npos) return Rational(num);
    std::string_view den_part = s.substr(slash + 1);
    if (!is_int(den_part, false)) {
        throw DomainError("rational: cannot parse '" + std::string(s) +
                          "' (denominator must be a positive integer)");
    }
    return Rational(num, BigInt(std::string(den_part), 10));
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("rational: reciprocal of zero");
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rational Rational::squared() const {
    Rational r;
    mpz_mul(mpq_numref(r.v_.get_mpq_t()), mpq_numref(v_.get_mpq_t()), mpq_numref(v_.get_mpq_t()));
    mpz_mul(mpq_denref(r.v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()));
    return r;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("rational: division by zero");
    v_ /= rhs.v_;
    return *this;
}

std::string Rational::to_string() const {
    std::string s = numerator().get_str();
    if (!is_integer()) {
        s += '/';
        s += denominator().get_str();
    }
    return s;
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

BigInt naive_height(const Rational& x) {
    mpz_srcptr num = mpq_numref(x.raw());
    mpz_srcptr den = mpq_denref(x.raw());
    if (mpz_cmpabs(num, den) >= 0) {
        BigInt r;
        mpz_abs(r.get_mpz_t(), num);
        return r;
    }
    return BigInt(den);
}

double log_big(const BigInt& n) {
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

double weil_height(const Rational& x) {
    const BigInt h = naive_height(x);
    if (mpz_cmp_ui(h.get_mpz_t(), 1) == 0) return 0.0;
    return log_big(h);
}

namespace {

// New reduced fractions at exact naive height H, ascending (numerator,
// denominator). For H >= 2 these are (+-H, q) with q < H coprime and
// (p, H) with |p| < H coprime; H = 1 contributes -1, 0, 1.
template <typename Fn>
void emit_height_block(std::uint64_t h, Fn&& emit) {
    if (h == 1) {
        emit(-1, 1);
        emit(0, 1);
        emit(1, 1);
        return;
    }
    const auto hs = static_cast<long>(h);
    for (long q = 1; q < hs; ++q) {
        if (std::gcd(h, static_cast<std::uint64_t>(q)) == 1) emit(-hs, q);
    }
    for (long p = -(hs - 1); p <= hs - 1; ++p) {
        if (p == 0) continue;
        if (std::gcd(static_cast<std::uint64_t>(p < 0 ? -p : p), h) == 1) emit(p, hs);
    }
    for (long q = 1; q < hs; ++q) {
        if (std::gcd(h, static_cast<std::uint64_t>(q)) == 1) emit(hs, q);
    }
}

}  // namespace

std::vector<Rational> enumerate_rationals(std::uint64_t bound) {
    if (bound < 1) throw DomainError("enumerate_rationals: bound must be >= 1");
    if (bound > kMaxEnumerationBound) {
        throw ResourceError("enumerate_rationals: bound " + std::to_string(bound) +
                            " exceeds cap " + std::to_string(kMaxEnumerationBound) +
                            " (~" + std::to_string(bound * bound * 12 / 10) + " elements)");
    }
    std::vector<Rational> out;
    for (std::uint64_t h = 1; h <= bound; ++h) {
        emit_height_block(h, [&](long p, long q) { out.emplace_back(BigInt(p), BigInt(q)); });
    }
    return out;
}

namespace {
constexpr std::uint64_t kMaxCountCap = 10'000'000;
}  // namespace

std::uint64_t naive_cap_from_log(double t) {
    if (!(t >= 0.0)) throw DomainError("count_bounded_height: t must be >= 0");
    const double e = std::exp(t);
    if (!(e < static_cast<double>(kMaxCountCap) + 0.5)) {
        throw ResourceError("count_bounded_height: exp(t) exceeds sieve cap " +
                            std::to_string(kMaxCountCap));
    }
    const double r = std::round(e);
    const double tol = 64.0 * std::numeric_limits<double>::epsilon() * (e < 1.0 ? 1.0 : e);
    if (r >= 1.0 && std::abs(e - r) <= tol) return static_cast<std::uint64_t>(r);
    return static_cast<std::uint64_t>(std::floor(e));
}

std::uint64_t count_bounded_height(double t) {
    const std::uint64_t cap = naive_cap_from_log(t);
    // #new fractions at height H is 3 for H = 1 and 4*phi(H) for H >= 2.
    std::vector<std::uint32_t> phi(cap + 1);
    for (std::uint64_t i = 0; i <= cap; ++i) phi[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t i = 2; i <= cap; ++i) {
        if (phi[i] == i) {  // prime
            for (std::uint64_t j = i; j <= cap; j += i) phi[j] -= phi[j] / i;
        }
    }
    std::uint64_t count = 3;
    for (std::uint64_t h = 2; h <= cap; ++h) count += 4ull * phi[h];
    return count;
}

}  // namespace preheight
