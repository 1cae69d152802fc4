#pragma once

/**
 * The canonical height attached to f_c(x) = x^2 + c, computed as an
 * interval: hhat(x) = lim h(f_c^n(x)) / 2^n, approximated by the n-th
 * term with a rigorous tail radius.
 *
 * The tail bound comes from the explicit height-gap inequality
 * |hhat(y) - h(y)| <= h(c) + log 2 applied at y = f_c^n(x):
 *
 *   |hhat(x) - h(f_c^n(x)) / 2^n| <= (h(c) + log 2) / 2^n.
 *
 * Iteration is exact big-rational arithmetic; only the final log is a
 * double, and a 2^-40 guard absorbs its rounding.
 */

#include <cstdint>
#include <numbers>

#include "preheight/quad_map.hpp"
#include "preheight/rational.hpp"

namespace preheight {

/// A real value with a rigorous error radius: the true quantity lies in
/// [value - radius, value + radius].
struct ErrorBoundedReal {
    double value = 0.0;
    double radius = 0.0;

    bool contains(double y) const { return value - radius <= y && y <= value + radius; }
};

/// Explicit constants for |hhat - h| <= beta1 * h(c) + beta2. Fixed, not
/// tunable: only these values make the verification paths meaningful.
struct HeightGapConstants {
    static constexpr double beta1 = 1.0;
    static constexpr double beta2 = std::numbers::ln2;
};

/// Per-iterate size limit (numerator plus denominator bits) for the exact
/// orbit computation. Overridable per call; the CLI also honors the
/// PREHEIGHT_BIT_BUDGET environment variable.
inline constexpr std::uint64_t kDefaultBitBudget = std::uint64_t{1} << 26;

/// Canonical height of x under f_c to radius at most eps. Picks the
/// smallest n with (h(c) + log 2) / 2^n below eps (less a 2^-40 rounding
/// guard) and evaluates h(f_c^n(x)) / 2^n exactly. Throws ResourceError
/// if an iterate exceeds bit_budget or eps is below the achievable
/// radius; throws DomainError for eps <= 0.
ErrorBoundedReal canonical_height(const Rational& c, const Rational& x, double eps,
                                  std::uint64_t bit_budget = kDefaultBitBudget);

/// Outcome of a height inequality check: lhs <= rhs with slack = rhs - lhs.
struct InequalityReport {
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
};

/// |hhat(x) - h(x)| <= beta1 * h(c) + beta2, with the canonical height
/// computed to the given radius (its radius is added to the right side).
/// This is a theorem: a failed report signals a defect.
InequalityReport verify_lemma41(const Rational& c, const Rational& x, double eps = 1e-6,
                                std::uint64_t bit_budget = kDefaultBitBudget);

/// With b = f_c^N(x): |h(x) - h(b)/2^N| <= (1 + 1/2^N)(beta1 h(c) + beta2).
/// Also a theorem.
InequalityReport verify_cor42(const Rational& c, const Rational& x, std::uint32_t n);

/// |hhat(f_c(x)) - 2 hhat(x)| <= 3 eps, both sides computed to radius eps.
/// Exactness of hhat(f_c(x)) = 2 hhat(x) makes the 3-eps envelope a
/// theorem as well.
InequalityReport functional_equation_check(const Rational& c, const Rational& x, double eps,
                                           std::uint64_t bit_budget = kDefaultBitBudget);

}  // namespace preheight
