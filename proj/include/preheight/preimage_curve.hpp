#pragma once

/**
 * The family of fifth-preimage curves for f_c(x) = x^2 + c, in embedded
 * coordinates: a solution (c, x, b) of f_c^5(x) = b is carried to
 *
 *   z = (x, f_c(x), f_c^2(x), f_c^3(x), f_c^4(x)),  paired with b.
 *
 * Writing c = z1 - z0^2, membership in the image is cut out by the four
 * exact relations
 *
 *   z_{i+1} = z_i^2 + (z1 - z0^2)   for i = 1, 2, 3,
 *   b       = z4^2 + (z1 - z0^2),
 *
 * and the parameter map recovers c = z1 - z0^2. For fixed (c, b) the
 * fiber is the vanishing of the monic degree-32 polynomial
 * f_c^5(x) - b, expanded here with exact coefficients.
 */

#include <array>
#include <iosfwd>
#include <vector>

#include "preheight/rational.hpp"

namespace preheight {

struct CurvePoint {
    std::array<Rational, 5> z;
    Rational b;
};

/// Embeds a triple with f_c^5(x) = b (checked; throws DomainError with
/// "point not on Y" otherwise).
CurvePoint embed(const Rational& c, const Rational& x, const Rational& b);

/// True iff all four membership relations hold exactly.
bool membership_check(const CurvePoint& p);

/// The parameter c = z1 - z0^2 of a curve point. Throws DomainError on a
/// non-member.
Rational gamma(const CurvePoint& p);

/// f_c^5(x) - b as a dense polynomial in x: 33 exact coefficients,
/// ascending degree, monic of degree 32.
struct FiberPolynomial {
    Rational c;
    Rational b;
    std::vector<Rational> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    bool is_monic() const { return !coefficients.empty() && coefficients.back() == Rational(1); }
    Rational operator()(const Rational& x) const;  // exact Horner evaluation
};

/// Expands f_c^5(x) - b by repeated squaring of exact polynomials.
FiberPolynomial fiber_polynomial(const Rational& c, const Rational& b);

/// One row per coefficient: degree,numerator,denominator ascending.
void write_coefficients_csv(const FiberPolynomial& poly, std::ostream& os);

/// Rank of a matrix over Q by exact Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rational>> m);

/// Evaluates the 4x5 Jacobian of the membership relations with respect to
/// (z0, ..., z4) — the fiber direction b excluded — at p, and reports
/// whether it has full rank 4, i.e. whether p is a smooth point of its
/// fiber. Throws DomainError on a non-member.
bool jacobian_spot_check(const CurvePoint& p);

}  // namespace preheight
