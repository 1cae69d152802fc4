#include "preheight/preimage_curve.hpp"

#include <cassert>
#include <ostream>
#include <utility>

#include "preheight/quad_map.hpp"

namespace preheight {

CurvePoint embed(const Rational& c, const Rational& x, const Rational& b) {
    if (iterate(c, x, 5) != b) {
        throw DomainError("embed: point not on Y (f_c^5(x) != b)");
    }
    CurvePoint p;
    p.b = b;
    p.z[0] = x;
    for (int i = 1; i < 5; ++i) p.z[i] = evaluate(c, p.z[i - 1]);
    return p;
}

bool membership_check(const CurvePoint& p) {
    const Rational c = p.z[1] - p.z[0] * p.z[0];
    for (int i = 1; i < 4; ++i) {
        if (p.z[i + 1] != evaluate(c, p.z[i])) return false;
    }
    return p.b == evaluate(c, p.z[4]);
}

Rational gamma(const CurvePoint& p) {
    if (!membership_check(p)) throw DomainError("gamma: point fails membership relations");
    return p.z[1] - p.z[0] * p.z[0];
}

Rational FiberPolynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

namespace {

std::vector<Rational> square_poly(const std::vector<Rational>& p) {
    std::vector<Rational> out(2 * p.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        for (std::size_t j = 0; j < p.size(); ++j) out[i + j] += p[i] * p[j];
    }
    return out;
}

}  // namespace

FiberPolynomial fiber_polynomial(const Rational& c, const Rational& b) {
    std::vector<Rational> poly{Rational(0), Rational(1)};  // x
    for (int k = 0; k < 5; ++k) {
        poly = square_poly(poly);
        poly[0] += c;
    }
    poly[0] -= b;
    assert(poly.size() == 33 && poly.back() == Rational(1));
    return {.c = c, .b = b, .coefficients = std::move(poly)};
}

void write_coefficients_csv(const FiberPolynomial& poly, std::ostream& os) {
    os << "degree,numerator,denominator\n";
    for (std::size_t d = 0; d < poly.coefficients.size(); ++d) {
        const auto& coeff = poly.coefficients[d];
        os << d << ',' << coeff.numerator().get_str() << ',' << coeff.denominator().get_str()
           << '\n';
    }
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational factor = m[r][col] / m[row][col];
            for (std::size_t cc = col; cc < cols; ++cc) m[r][cc] -= factor * m[row][cc];
        }
        ++row;
    }
    return static_cast<int>(row);
}

bool jacobian_spot_check(const CurvePoint& p) {
    if (!membership_check(p)) {
        throw DomainError("jacobian_spot_check: point fails membership relations");
    }
    const Rational two(2);
    const auto& z = p.z;
    // Rows: R_i = z_{i+1} - z_i^2 - z1 + z0^2 (i = 1..3), R_4 = z4^2 + z1 - z0^2 - b.
    std::vector<std::vector<Rational>> jac(4, std::vector<Rational>(5));
    for (int i = 1; i <= 3; ++i) {
        auto& r = jac[i - 1];
        r[0] = two * z[0];
        r[1] -= Rational(1);
        r[i] -= two * z[i];
        r[i + 1] += Rational(1);
    }
    jac[3][0] = -two * z[0];
    jac[3][1] += Rational(1);
    jac[3][4] += two * z[4];
    return matrix_rank(std::move(jac)) == 4;
}

}  // namespace preheight
