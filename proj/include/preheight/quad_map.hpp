#pragma once

/**
 * The quadratic family f_c(x) = x^2 + c over Q: forward iteration,
 * single-step and iterated rational preimages, and the decision
 * preperiodic-vs-wandering.
 *
 * All arithmetic is exact. Height comparisons that gate algorithmic
 * decisions (orbit escape) are done on exact integers, never on logs.
 */

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "preheight/rational.hpp"

namespace preheight {

/// x^2 + c, reduced.
Rational evaluate(const Rational& c, const Rational& x);

/// n-fold composition f_c^n(x); iterate(c, x, 0) = x.
Rational iterate(const Rational& c, const Rational& x, std::uint64_t n);

/// The nonnegative rational square root of t, when one exists (t >= 0 and
/// numerator and denominator are both perfect squares). Exact integer
/// square-root tests only; no floating point.
std::optional<Rational> rational_sqrt(const Rational& t);

/// The rational fiber f_c^{-1}(t): {r, -r} when t - c is a nonzero
/// rational square, {0} when t = c, empty otherwise. Positive root first.
std::vector<Rational> preimage_step(const Rational& c, const Rational& t);

/// Leveled record of the rational iterated preimages of a target b.
/// levels[k] holds the elements first reached at depth k+1; an element
/// reachable at several depths is recorded at the smallest one only, so
/// the union over levels is the set {x : f_c^N(x) = b for some N >= 1}
/// restricted to the explored depth.
struct PreimageTree {
    Rational base;
    std::vector<std::vector<Rational>> levels;
    std::set<Rational> visited;  // union of all levels
    bool closed = false;         // true when a level emptied: union complete

    std::size_t union_size() const { return visited.size(); }
    bool contains(const Rational& x) const { return visited.count(x) != 0; }
    std::vector<std::uint32_t> level_counts() const;
};

/// Breadth-first expansion of the iterated preimages of b under f_c.
/// Unbounded by default; termination is guaranteed because the full
/// union is a set of bounded height. With a depth cap, closed is only
/// set if the expansion emptied at some depth <= depth_cap.
PreimageTree iterated_preimages(const Rational& c, const Rational& b,
                                std::optional<std::uint32_t> depth_cap = std::nullopt);

/// The exact N-th preimage set f_c^{-N}(b)(Q), sorted ascending. Unlike
/// the tree levels there is no dedup against shallower depths, so a
/// target sitting on a cycle reports its deep preimages too.
std::vector<Rational> preimage_set(const Rational& c, const Rational& b, std::uint32_t n);

struct PreperiodicityVerdict {
    enum class Kind { preperiodic, wandering };
    Kind kind = Kind::preperiodic;
    std::uint32_t tail_length = 0;   // preperiodic only
    std::uint32_t cycle_length = 0;  // preperiodic only
    std::uint32_t escape_index = 0;  // wandering only

    bool is_preperiodic() const { return kind == Kind::preperiodic; }
};

/// Iterates the forward orbit of x. Returns preperiodic with tail and
/// cycle lengths on the first revisit; returns wandering at the first n
/// where h(f_c^n(x)) > h(c) + log 2, checked exactly as
/// naive_height(f_c^n(x)) > 2 * naive_height(c). Preperiodic orbits stay
/// below that bound, so the two outcomes are exclusive and exhaustive.
PreperiodicityVerdict detect_preperiodic(const Rational& c, const Rational& x);

/// x = f_c^{N-5}(x0), so that a depth-N preimage chain x0 -> b collapses
/// to the depth-5 chain x -> b: f_c^5(x) = f_c^N(x0). Requires N >= 5.
Rational reduce_deep_preimage(const Rational& c, const Rational& x0, std::uint64_t n);

}  // namespace preheight
