#include "preheight/canonical_height.hpp"

#include <cmath>
#include <string>

namespace preheight {

namespace {

// Absorbs double rounding in the final log and division.
const double kLogRoundGuard = std::ldexp(1.0, -40);

// Cushion for comparing theorem inequalities evaluated in doubles.
constexpr double kCompareSlack = 1e-9;

std::uint64_t bit_size(const Rational& x) {
    return mpz_sizeinbase(mpq_numref(x.raw()), 2) + mpz_sizeinbase(mpq_denref(x.raw()), 2);
}

}  // namespace

ErrorBoundedReal canonical_height(const Rational& c, const Rational& x, double eps,
                                  std::uint64_t bit_budget) {
    if (!(eps > 0.0)) throw DomainError("canonical_height: eps must be positive");
    if (eps <= kLogRoundGuard) {
        throw ResourceError("canonical_height: eps below achievable radius 2^-40");
    }
    const double target = eps - kLogRoundGuard;
    double tail = weil_height(c) + std::numbers::ln2;
    int n = 0;
    while (tail > target) {
        tail /= 2.0;  // exact in binary
        ++n;
    }
    Rational y = x;
    for (int k = 0; k < n; ++k) {
        if (bit_size(y) > bit_budget) {
            throw ResourceError("canonical_height: iterate " + std::to_string(k) +
                                " exceeds bit budget " + std::to_string(bit_budget));
        }
        y = evaluate(c, y);
    }
    if (bit_size(y) > bit_budget) {
        throw ResourceError("canonical_height: iterate " + std::to_string(n) +
                            " exceeds bit budget " + std::to_string(bit_budget));
    }
    return {.value = std::ldexp(weil_height(y), -n), .radius = tail + kLogRoundGuard};
}

InequalityReport verify_lemma41(const Rational& c, const Rational& x, double eps,
                                std::uint64_t bit_budget) {
    const ErrorBoundedReal hhat = canonical_height(c, x, eps, bit_budget);
    const double lhs = std::abs(hhat.value - weil_height(x));
    const double rhs =
        HeightGapConstants::beta1 * weil_height(c) + HeightGapConstants::beta2 + hhat.radius;
    return {.holds = lhs <= rhs + kCompareSlack, .lhs = lhs, .rhs = rhs, .slack = rhs - lhs};
}

InequalityReport verify_cor42(const Rational& c, const Rational& x, std::uint32_t n) {
    if (n < 1) throw DomainError("verify_cor42: N must be >= 1");
    const Rational b = iterate(c, x, n);
    const double scale = std::ldexp(1.0, -static_cast<int>(n));
    const double lhs = std::abs(weil_height(x) - scale * weil_height(b));
    const double rhs = (1.0 + scale) * (HeightGapConstants::beta1 * weil_height(c) +
                                        HeightGapConstants::beta2);
    return {.holds = lhs <= rhs + kCompareSlack, .lhs = lhs, .rhs = rhs, .slack = rhs - lhs};
}

InequalityReport functional_equation_check(const Rational& c, const Rational& x, double eps,
                                           std::uint64_t bit_budget) {
    const ErrorBoundedReal lhs_interval = canonical_height(c, evaluate(c, x), eps, bit_budget);
    const ErrorBoundedReal rhs_interval = canonical_height(c, x, eps, bit_budget);
    const double lhs = std::abs(lhs_interval.value - 2.0 * rhs_interval.value);
    const double rhs = 3.0 * eps;
    return {.holds = lhs <= rhs + kCompareSlack, .lhs = lhs, .rhs = rhs, .slack = rhs - lhs};
}

}  // namespace preheight
