#include "carcass/lattice.hpp"

#include <algorithm>
#include <string>

#include "carcass/errors.hpp"

namespace carcass {

namespace {

class Recorder {
public:
    explicit Recorder(std::string label) { check_.label = std::move(label); }

    void compare(unsigned n, std::uint64_t k, const Rational& expected, const Rational& actual) {
        ++check_.tested;
        if (expected == actual) return;
        ++check_.violation_count;
        if (check_.violations.size() < kMaxRecordedViolations)
            check_.violations.push_back({n, k, expected, actual});
    }

    VariantCheck take() { return std::move(check_); }

private:
    VariantCheck check_;
};

} // namespace

bool DiagnosticCheck::holds() const {
    return std::any_of(variants.begin(), variants.end(),
                       [](const VariantCheck& v) { return v.holds(); });
}

const VariantCheck& DiagnosticCheck::variant(const std::string& label) const {
    for (const auto& v : variants)
        if (v.label == label) return v;
    throw DomainError("check " + name + " has no variant " + label);
}

std::vector<const DiagnosticCheck*> StructureReport::checks() const {
    return {&digit_dependence, &periodicity, &remark_2_9, &remark_2_12, &remark_3_3, &remark_3_4};
}

StructureReport structure_report(const PreimageLattice& L, const FirmnessVerdict& verdict,
                                 unsigned window) {
    if (!verdict.firm() || !verdict.n0)
        throw ValidationError("structure report needs a firm carcass map");
    const unsigned n0 = *verdict.n0;
    const unsigned depth = L.depth();
    if (window < 1) throw ValidationError("structure window must be at least 1");
    if (depth < 4 * n0 + window)
        throw DomainError("insufficient lattice depth " + std::to_string(depth) + " for n0 = " +
                          std::to_string(n0) + " and window " + std::to_string(window) +
                          " (need " + std::to_string(4 * n0 + window) + ")");
    if (n0 > 16) throw ResourceError("n0 = " + std::to_string(n0) + " too large to tabulate");

    const std::uint64_t block = std::uint64_t{1} << n0;
    const std::uint64_t mask = block - 1;
    const unsigned base = n0 + 1; // first level with a full block of 2^{n0} intervals

    StructureReport rep;
    rep.n0 = n0;
    rep.depth = depth;
    rep.window = window;

    std::vector<Rational> table(block);
    for (std::uint64_t k = 0; k < block; ++k) {
        table[k] = delta(L, base, k);
        rep.delta_table.emplace(k, table[k]);
    }
    // From level 2*n0 on, g^{n-2n0} maps every block linearly onto the
    // subdivision of a level-n0 interval, so block 0 there is representative.
    const unsigned l_level = 2 * n0;
    const Rational first = interval_length(L, l_level, 0);
    for (std::uint64_t j = 0; j < block; ++j)
        rep.l_constants.push_back(interval_length(L, l_level, j) / first);
    const auto& l = rep.l_constants;
    Rational sum_from_1(0);
    for (std::uint64_t j = 1; j < block; ++j) sum_from_1 += l[j];
    const Rational sum_from_0 = sum_from_1 + l[0];

    // delta(n,k) depends only on the low n0 digits of k, either literally or
    // after complementing them (and delta) when digit n0 of k is set.
    {
        Recorder literal("literal");
        Recorder tracked("orientation-tracked");
        for (unsigned n = base + 1; n < depth; ++n) {
            for (std::uint64_t k = 0; k < level_intervals(n); ++k) {
                const Rational d = delta(L, n, k);
                literal.compare(n, k, table[k & mask], d);
                const bool flip = ((k >> n0) & 1U) != 0;
                const std::uint64_t p = flip ? (~k & mask) : (k & mask);
                tracked.compare(n, k, flip ? Rational(1) - table[p] : table[p], d);
            }
        }
        rep.digit_dependence.name = "digit-dependence";
        rep.digit_dependence.variants = {literal.take(), tracked.take()};
    }

    {
        Recorder literal("period 2^n0");
        Recorder tracked("period 2^(n0+1)");
        for (unsigned n = base; n < depth; ++n) {
            for (std::uint64_t k = 0; k < level_intervals(n); ++k) {
                const Rational d = delta(L, n, k);
                if (k + block < level_intervals(n)) literal.compare(n, k + block, d, delta(L, n, k + block));
                if (k + 2 * block < level_intervals(n))
                    tracked.compare(n, k + 2 * block, d, delta(L, n, k + 2 * block));
            }
        }
        rep.periodicity.name = "remark-2.11-periodicity";
        rep.periodicity.variants = {literal.take(), tracked.take()};
    }

    // #I(n, 2^{n0} k0 + j) = l_j #I(n, 2^{n0} k0); the tracked reading reads
    // the block backwards from its last interval when k0 is odd.
    {
        Recorder literal("literal");
        Recorder tracked("orientation-tracked");
        for (unsigned n = base; n <= depth; ++n) {
            for (std::uint64_t k = 0; k < level_intervals(n); ++k) {
                const std::uint64_t k0 = k >> n0;
                const std::uint64_t j = k & mask;
                const Rational actual = interval_length(L, n, k);
                if (j != 0) literal.compare(n, k, l[j] * interval_length(L, n, k0 << n0), actual);
                if ((k0 & 1U) == 0) {
                    if (j != 0) tracked.compare(n, k, l[j] * interval_length(L, n, k0 << n0), actual);
                } else if (j != mask) {
                    tracked.compare(n, k, l[mask - j] * interval_length(L, n, (k0 << n0) + mask),
                                    actual);
                }
            }
        }
        rep.remark_2_9.name = "remark-2.9-proportionality";
        rep.remark_2_9.variants = {literal.take(), tracked.take()};
    }

    {
        Recorder from1("sum from k=1");
        Recorder from0("sum from k=0");
        for (unsigned n = n0; n + n0 <= depth; ++n) {
            for (std::uint64_t i = 0; i < level_intervals(n); ++i) {
                const Rational parent = interval_length(L, n, i);
                const Rational actual = interval_length(L, n + n0, i << n0);
                from1.compare(n + n0, i << n0, parent / sum_from_1, actual);
                from0.compare(n + n0, i << n0, parent / sum_from_0, actual);
            }
        }
        rep.remark_2_12.name = "remark-2.12-level-scaling";
        rep.remark_2_12.variants = {from1.take(), from0.take()};
    }

    {
        Recorder literal("sum from p=1, squared");
        Recorder from0("sum from p=0, squared");
        Recorder cubed("sum from p=0, cubed");
        const Rational s1sq = sum_from_1 * sum_from_1;
        const Rational s0sq = sum_from_0 * sum_from_0;
        const Rational s0cu = s0sq * sum_from_0;
        for (unsigned n = n0; n + 3 * n0 <= depth; ++n) {
            const Rational head = interval_length(L, n, 0);
            for (std::uint64_t i = 0; i < block; ++i)
                for (std::uint64_t j = 0; j < block; ++j)
                    for (std::uint64_t k = 0; k < block; ++k) {
                        const std::uint64_t idx = (i << (2 * n0)) + (j << n0) + k;
                        const Rational actual = interval_length(L, n + 3 * n0, idx);
                        const Rational prod = l[i] * l[j] * l[k] * head;
                        literal.compare(n + 3 * n0, idx, prod / s1sq, actual);
                        from0.compare(n + 3 * n0, idx, prod / s0sq, actual);
                        cubed.compare(n + 3 * n0, idx, prod / s0cu, actual);
                    }
        }
        rep.remark_3_3.name = "remark-3.3-product";
        rep.remark_3_3.variants = {literal.take(), from0.take(), cubed.take()};
    }

    {
        Recorder exact("delta(n,k)");
        Recorder tabulated("delta table, low n0 digits");
        for (unsigned n = n0; n + 1 <= depth; ++n) {
            for (std::uint64_t k = 0; k < level_intervals(n); ++k) {
                const Rational ratio =
                    interval_length(L, n + 1, 2 * k + 1) / interval_length(L, n + 1, 2 * k);
                exact.compare(n + 1, 2 * k, Rational(1) / delta(L, n, k) - Rational(1), ratio);
                tabulated.compare(n + 1, 2 * k, Rational(1) / table[k & mask] - Rational(1), ratio);
            }
        }
        rep.remark_3_4.name = "remark-3.4-ratio";
        rep.remark_3_4.variants = {exact.take(), tabulated.take()};
    }

    return rep;
}

} // namespace carcass
