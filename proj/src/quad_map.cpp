#include "preheight/quad_map.hpp"

#include <map>
#include <utility>

namespace preheight {

Rational evaluate(const Rational& c, const Rational& x) {
    return x.squared() + c;
}

Rational iterate(const Rational& c, const Rational& x, std::uint64_t n) {
    Rational y = x;
    for (std::uint64_t k = 0; k < n; ++k) y = evaluate(c, y);
    return y;
}

std::optional<Rational> rational_sqrt(const Rational& t) {
    if (t.sign() < 0) return std::nullopt;
    mpz_srcptr num = mpq_numref(t.raw());
    mpz_srcptr den = mpq_denref(t.raw());
    if (!mpz_perfect_square_p(num) || !mpz_perfect_square_p(den)) return std::nullopt;
    BigInt rnum, rden;
    mpz_sqrt(rnum.get_mpz_t(), num);
    mpz_sqrt(rden.get_mpz_t(), den);
    // gcd(p, q) = 1 implies gcd(sqrt p, sqrt q) = 1: already reduced.
    return Rational(rnum, rden);
}

std::vector<Rational> preimage_step(const Rational& c, const Rational& t) {
    const auto root = rational_sqrt(t - c);
    if (!root) return {};
    if (root->is_zero()) return {*root};
    return {*root, -*root};
}

std::vector<std::uint32_t> PreimageTree::level_counts() const {
    std::vector<std::uint32_t> counts;
    counts.reserve(levels.size());
    for (const auto& level : levels) counts.push_back(static_cast<std::uint32_t>(level.size()));
    return counts;
}

PreimageTree iterated_preimages(const Rational& c, const Rational& b,
                                std::optional<std::uint32_t> depth_cap) {
    PreimageTree tree;
    tree.base = b;
    std::vector<Rational> frontier{b};
    for (std::uint32_t depth = 1; !depth_cap || depth <= *depth_cap; ++depth) {
        std::vector<Rational> next;
        for (const auto& t : frontier) {
            for (auto& y : preimage_step(c, t)) {
                if (tree.visited.insert(y).second) next.push_back(std::move(y));
            }
        }
        if (next.empty()) {
            tree.closed = true;
            break;
        }
        tree.levels.push_back(std::move(next));
        frontier = tree.levels.back();
    }
    return tree;
}

std::vector<Rational> preimage_set(const Rational& c, const Rational& b, std::uint32_t n) {
    std::set<Rational> frontier{b};
    for (std::uint32_t depth = 1; depth <= n; ++depth) {
        std::set<Rational> next;
        for (const auto& t : frontier) {
            for (auto& y : preimage_step(c, t)) next.insert(std::move(y));
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return {frontier.begin(), frontier.end()};
}

PreperiodicityVerdict detect_preperiodic(const Rational& c, const Rational& x) {
    const BigInt escape_bound = 2 * naive_height(c);  // naive form of h(c) + log 2
    std::map<Rational, std::uint32_t> first_seen;
    Rational y = x;
    for (std::uint32_t n = 0;; ++n) {
        if (naive_height(y) > escape_bound) {
            return {.kind = PreperiodicityVerdict::Kind::wandering, .escape_index = n};
        }
        const auto [it, inserted] = first_seen.emplace(y, n);
        if (!inserted) {
            return {.kind = PreperiodicityVerdict::Kind::preperiodic,
                    .tail_length = it->second,
                    .cycle_length = n - it->second};
        }
        y = evaluate(c, y);
    }
}

Rational reduce_deep_preimage(const Rational& c, const Rational& x0, std::uint64_t n) {
    if (n < 5) throw DomainError("reduce_deep_preimage: requires N >= 5");
    return iterate(c, x0, n - 5);
}

}  // namespace preheight
