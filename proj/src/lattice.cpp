#include "carcass/lattice.hpp"

#include <algorithm>
#include <string>

#include "carcass/errors.hpp"

namespace carcass {

namespace {

// Inverses of the two monotone branches, each as a map of y in [0,1].
struct BranchInverses {
    PLMap left;  // [0,1] -> [0,v], increasing
    PLMap right; // [0,1] -> [v,1], decreasing
};

BranchInverses branch_inverses(const CarcassMap& g) {
    std::vector<Point> left;
    std::vector<Point> right;
    for (const Point& p : g.map().breakpoints()) {
        if (p.x <= g.peak()) left.push_back({p.y, p.x});
        if (p.x >= g.peak()) right.push_back({p.y, p.x});
    }
    std::reverse(right.begin(), right.end());
    return {PLMap(std::move(left)), PLMap(std::move(right))};
}

void check_level(const std::vector<Rational>& level, const std::vector<Rational>& prev,
                 unsigned n) {
    const std::uint64_t expected = level_intervals(n) + 1;
    if (level.size() != expected)
        throw InvariantError("lattice level " + std::to_string(n) + " has " +
                             std::to_string(level.size()) + " points, expected " +
                             std::to_string(expected));
    if (!level.front().is_zero() || level.back() != Rational(1))
        throw InvariantError("lattice level " + std::to_string(n) + " does not span [0,1]");
    for (std::size_t i = 1; i < level.size(); ++i)
        if (!(level[i - 1] < level[i]))
            throw InvariantError("lattice level " + std::to_string(n) + " not strictly increasing");
    for (std::size_t k = 0; k < prev.size(); ++k)
        if (level[2 * k] != prev[k])
            throw InvariantError("lattice nesting broken at level " + std::to_string(n) +
                                 ", k = " + std::to_string(k));
}

} // namespace

std::span<const Rational> PreimageLattice::level(unsigned n) const {
    if (n < 1 || n > depth())
        throw DomainError("lattice level " + std::to_string(n) + " outside 1.." +
                          std::to_string(depth()));
    return levels_[n - 1];
}

const Rational& PreimageLattice::mu(unsigned n, std::uint64_t k) const {
    const auto lv = level(n);
    if (k >= lv.size())
        throw DomainError("lattice index k = " + std::to_string(k) + " outside level " +
                          std::to_string(n));
    return lv[k];
}

std::size_t PreimageLattice::total_points() const {
    std::size_t total = 0;
    for (const auto& lv : levels_) total += lv.size();
    return total;
}

PreimageLattice build_lattice(const CarcassMap& g, unsigned depth, std::size_t max_points) {
    if (depth < 1) throw ValidationError("lattice depth must be at least 1");
    if (depth > 62) throw ResourceError("lattice depth " + std::to_string(depth) + " too large");
    std::size_t total = 0;
    for (unsigned n = 1; n <= depth; ++n) total += level_intervals(n) + 1;
    if (total > max_points)
        throw ResourceError("lattice of depth " + std::to_string(depth) + " needs " +
                            std::to_string(total) + " points, cap is " +
                            std::to_string(max_points));

    const BranchInverses inv = branch_inverses(g);
    std::vector<std::vector<Rational>> levels;
    levels.reserve(depth);
    levels.push_back({Rational(0), Rational(1)});
    for (unsigned n = 2; n <= depth; ++n) {
        const auto& prev = levels.back();
        std::vector<Rational> next;
        next.reserve(2 * prev.size() - 1);
        for (const Rational& y : prev) next.push_back(eval(inv.left, y));
        // right branch: walk prev downwards so preimages come out ascending;
        // skip y = 1 whose preimage v was already emitted
        for (auto it = prev.rbegin() + 1; it != prev.rend(); ++it)
            next.push_back(eval(inv.right, *it));
        check_level(next, prev, n);
        levels.push_back(std::move(next));
    }
    return PreimageLattice(g, std::move(levels));
}

Rational interval_length(const PreimageLattice& L, unsigned n, std::uint64_t k) {
    if (n < 1 || n > L.depth() || k >= level_intervals(n))
        throw DomainError("interval I(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") not in the lattice");
    const auto lv = L.level(n);
    return lv[k + 1] - lv[k];
}

Rational delta(const PreimageLattice& L, unsigned n, std::uint64_t k) {
    if (n < 1 || n >= L.depth() || k >= level_intervals(n))
        throw DomainError("delta(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") needs levels n and n+1 in the lattice");
    const auto lv = L.level(n);
    return (L.mu(n + 1, 2 * k + 1) - lv[k]) / (lv[k + 1] - lv[k]);
}

std::vector<int> index_binary(std::uint64_t k, unsigned digits) {
    if (digits > 64 || (digits < 64 && (k >> digits) != 0))
        throw DomainError(std::to_string(k) + " does not fit in " + std::to_string(digits) +
                          " binary digits");
    std::vector<int> bits(digits);
    for (unsigned i = 0; i < digits; ++i) bits[digits - 1 - i] = static_cast<int>((k >> i) & 1U);
    return bits;
}

} // namespace carcass
