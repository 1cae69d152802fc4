#include <cmath>
#include <numbers>

#include "doctest.h"
#include "preheight/canonical_height.hpp"
#include "support.hpp"

using namespace preheight;
using namespace preheight::testing;

namespace {
Rational rat(const char* s) { return Rational::from_string(s); }
}  // namespace

TEST_CASE("canonical_height: worked values") {
    const auto a = canonical_height(Rational(0), Rational(2), 1e-6);
    CHECK(a.radius <= 1e-6);
    CHECK(std::abs(a.value - std::numbers::ln2) <= 1e-6);

    const auto b = canonical_height(Rational(-1), Rational(0), 1e-6);
    CHECK(b.contains(0.0));

    const auto cfix = canonical_height(Rational(0), Rational(1), 1e-6);
    CHECK(cfix.radius <= 1e-6);
    CHECK(std::abs(cfix.value) <= 1e-6);
}

TEST_CASE("canonical_height: exact at c = 0") {
    Rng rng(7201);
    for (int i = 0; i < 40; ++i) {
        const Rational x = random_rational(rng, 40);
        const auto hhat = canonical_height(Rational(0), x, 1e-6);
        CHECK(std::abs(hhat.value - weil_height(x)) <= 1e-6);
    }
}

TEST_CASE("canonical_height: preperiodic points sit at zero") {
    Rng rng(7202);
    int found = 0;
    for (int i = 0; i < 300 && found < 25; ++i) {
        const Rational c = random_rational(rng, 6);
        const Rational x = random_rational(rng, 6);
        if (!detect_preperiodic(c, x).is_preperiodic()) continue;
        ++found;
        const auto hhat = canonical_height(c, x, 1e-6);
        CHECK(hhat.contains(0.0));
        CHECK(hhat.value + hhat.radius >= 0.0);
    }
    CHECK(found >= 10);  // the sample box contains plenty of preperiodic pairs
}

TEST_CASE("canonical_height: nonnegative intervals") {
    Rng rng(7203);
    for (int i = 0; i < 60; ++i) {
        const Rational c = random_rational(rng, 20);
        const Rational x = random_rational(rng, 20);
        const auto hhat = canonical_height(c, x, 1e-4);
        CHECK(hhat.value >= 0.0);
        CHECK(hhat.radius >= 0.0);
        CHECK(hhat.value + hhat.radius >= 0.0);
        CHECK(hhat.radius <= 1e-4);
    }
}

TEST_CASE("tail bound: term-to-term drift within (h(c) + log 2) / 2^n") {
    Rng rng(7204);
    for (int i = 0; i < 40; ++i) {
        const Rational c = random_rational(rng, 8);
        const Rational x = random_rational(rng, 8);
        const double bound_base = weil_height(c) + std::numbers::ln2;
        for (int n = 0; n <= 5; ++n) {
            const double term_n = std::ldexp(weil_height(iterate(c, x, n)), -n);
            for (int m = n + 1; m <= 8; ++m) {
                const double term_m = std::ldexp(weil_height(iterate(c, x, m)), -m);
                CHECK(std::abs(term_m - term_n) <= std::ldexp(bound_base, -n) + 1e-12);
            }
        }
    }
}

TEST_CASE("verify_lemma41: worked cases") {
    const auto a = verify_lemma41(Rational(0), Rational(5));
    CHECK(a.holds);
    CHECK(a.slack == doctest::Approx(std::numbers::ln2).epsilon(1e-4));

    const auto b = verify_lemma41(Rational(-1), Rational(0));
    CHECK(b.holds);

    const auto c = verify_lemma41(Rational(3), rat("1/2"));
    CHECK(c.holds);
}

TEST_CASE("verify_cor42: worked cases") {
    const auto a = verify_cor42(Rational(0), Rational(2), 3);
    CHECK(a.holds);
    CHECK(a.lhs == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(a.rhs == doctest::Approx(9.0 / 8.0 * std::numbers::ln2).epsilon(1e-12));

    const auto b = verify_cor42(Rational(-1), Rational(0), 2);
    CHECK(b.holds);
    CHECK(b.rhs == doctest::Approx(5.0 / 4.0 * std::numbers::ln2).epsilon(1e-12));

    const auto c = verify_cor42(Rational(2), Rational(0), 5);
    CHECK(c.holds);
    CHECK(c.lhs == doctest::Approx(0.4548).epsilon(1e-3));
    CHECK(c.rhs == doctest::Approx(1.4295).epsilon(1e-3));
}

TEST_CASE("verify_lemma41 and verify_cor42 hold on random samples") {
    Rng rng(7205);
    for (int i = 0; i < 120; ++i) {
        const Rational c = random_rational(rng, 100);
        const Rational x = random_rational(rng, 100);
        const auto n = static_cast<std::uint32_t>(1 + rng() % 6);
        CHECK(verify_cor42(c, x, n).holds);
    }
    for (int i = 0; i < 40; ++i) {
        const Rational c = random_rational(rng, 20);
        const Rational x = random_rational(rng, 20);
        CHECK(verify_lemma41(c, x, 1e-4).holds);
    }
}

TEST_CASE("functional equation: hhat(f_c(x)) = 2 hhat(x)") {
    CHECK(functional_equation_check(Rational(-1), Rational(0), 1e-8).holds);
    CHECK(functional_equation_check(rat("1/2"), Rational(3), 1e-6).holds);

    Rng rng(7206);
    for (int i = 0; i < 25; ++i) {
        const Rational c = random_rational(rng, 10);
        const Rational x = random_rational(rng, 10);
        CHECK(functional_equation_check(c, x, 1e-5).holds);
    }
}

TEST_CASE("functional equation at eps = 1e-8 on a wandering orbit") {
    // n = 27 exact doublings: the x^2 side reaches ~4e8 bits, above the
    // default budget; raise it for this one check.
    CHECK_THROWS_AS(functional_equation_check(Rational(0), Rational(3), 1e-8), ResourceError);
    CHECK(functional_equation_check(Rational(0), Rational(3), 1e-8, std::uint64_t{1} << 29).holds);
}

TEST_CASE("resource limits fail loudly") {
    // 2 -> 4 -> 16 -> ...: iterate bits double each step and blow a 64-bit budget.
    CHECK_THROWS_AS(canonical_height(Rational(0), Rational(2), 1e-6, 64), ResourceError);
    CHECK_THROWS_AS(canonical_height(Rational(0), Rational(2), 1e-15), ResourceError);
    CHECK_THROWS_AS(canonical_height(Rational(0), Rational(2), 0.0), DomainError);
    CHECK_THROWS_AS(canonical_height(Rational(0), Rational(2), -1.0), DomainError);
    CHECK_THROWS_AS(verify_cor42(Rational(0), Rational(2), 0), DomainError);
}
