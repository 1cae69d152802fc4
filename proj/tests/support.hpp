#pragma once

// Shared helpers for the test suites: deterministic random rationals and
// small conveniences. Seeds are fixed so failures reproduce.

#include <cstdint>
#include <random>

#include "preheight/rational.hpp"

namespace preheight::testing {

using Rng = std::mt19937_64;

/// Uniform numerator in [-bound, bound], denominator in [1, bound],
/// reduced. The result always has naive_height <= bound.
inline Rational random_rational(Rng& rng, long bound) {
    std::uniform_int_distribution<long> num_dist(-bound, bound);
    std::uniform_int_distribution<long> den_dist(1, bound);
    return Rational(BigInt(num_dist(rng)), BigInt(den_dist(rng)));
}

/// Nonzero variant, for reciprocal-style properties.
inline Rational random_nonzero_rational(Rng& rng, long bound) {
    for (;;) {
        Rational x = random_rational(rng, bound);
        if (!x.is_zero()) return x;
    }
}

}  // namespace preheight::testing
