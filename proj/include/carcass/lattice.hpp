#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "carcass/unimodal.hpp"

namespace carcass {

inline constexpr std::size_t kDefaultMaxLatticePoints = std::size_t{1} << 20;

// The sorted preimage sets g^{-n}(0) for n = 1..depth. Level n holds
// 2^{n-1}+1 points mu(n,0) = 0 < ... < mu(n,2^{n-1}) = 1 and nests into
// level n+1 at even indices.
class PreimageLattice {
public:
    unsigned depth() const { return static_cast<unsigned>(levels_.size()); }
    const CarcassMap& source() const { return source_; }

    // Level n, 1-based.
    std::span<const Rational> level(unsigned n) const;
    const Rational& mu(unsigned n, std::uint64_t k) const;
    std::size_t total_points() const;

private:
    PreimageLattice(CarcassMap g, std::vector<std::vector<Rational>> levels)
        : source_(std::move(g)), levels_(std::move(levels)) {}
    friend PreimageLattice build_lattice(const CarcassMap&, unsigned, std::size_t);

    CarcassMap source_;
    std::vector<std::vector<Rational>> levels_;
};

// Throws ResourceError when the total point count would exceed max_points
// and InvariantError if a level has the wrong size or breaks nesting.
PreimageLattice build_lattice(const CarcassMap& g, unsigned depth,
                              std::size_t max_points = kDefaultMaxLatticePoints);

inline std::uint64_t level_intervals(unsigned n) { return std::uint64_t{1} << (n - 1); }

// #I_{n,k} = mu(n,k+1) - mu(n,k).
Rational interval_length(const PreimageLattice& L, unsigned n, std::uint64_t k);

// (mu(n+1,2k+1) - mu(n,k)) / #I_{n,k}: where the level-(n+1) point splits I_{n,k}.
Rational delta(const PreimageLattice& L, unsigned n, std::uint64_t k);

// Fixed-width big-endian binary digits of k.
std::vector<int> index_binary(std::uint64_t k, unsigned digits);

struct Violation {
    unsigned n = 0;
    std::uint64_t k = 0;
    Rational expected;
    Rational actual;
};

// One reading of an identity, checked over every representable index.
struct VariantCheck {
    std::string label;
    std::size_t tested = 0;
    std::size_t violation_count = 0;
    std::vector<Violation> violations; // first few, in (n, k) order

    bool holds() const { return violation_count == 0 && tested > 0; }
};

struct DiagnosticCheck {
    std::string name;
    std::vector<VariantCheck> variants;

    // True when at least one reading holds on the computed range.
    bool holds() const;
    const VariantCheck& variant(const std::string& label) const;
};

struct StructureReport {
    unsigned n0 = 0;
    unsigned depth = 0;
    unsigned window = 0;
    // delta(n0+1, k) for k < 2^{n0}
    std::map<std::uint64_t, Rational> delta_table;
    // #I_{2n0,j} / #I_{2n0,0}, so l[0] = 1
    std::vector<Rational> l_constants;
    DiagnosticCheck digit_dependence;
    DiagnosticCheck periodicity;
    DiagnosticCheck remark_2_9;
    DiagnosticCheck remark_2_12;
    DiagnosticCheck remark_3_3;
    DiagnosticCheck remark_3_4;

    std::vector<const DiagnosticCheck*> checks() const;
};

inline constexpr std::size_t kMaxRecordedViolations = 32;

// Requires a firm verdict and depth >= 4*n0 + window, which leaves the
// product identity (spanning 3*n0 levels above its base) at least window+1
// base levels. Every check runs over all indices the lattice can represent.
StructureReport structure_report(const PreimageLattice& L, const FirmnessVerdict& verdict,
                                 unsigned window);

} // namespace carcass
