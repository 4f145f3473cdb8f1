#pragma once

#include <optional>
#include <string>
#include <vector>

#include "carcass/semiconj.hpp"

namespace carcass {

enum class Consistency {
    consistent,
    consistent_contrapositive,
    consistent_vacuous, // premise not established on this instance
    inconclusive,
    violation,
};

const char* to_string(Consistency c);

struct TheoremFlag {
    Consistency status = Consistency::inconclusive;
    std::string witness;
};

struct TangentEvidence {
    unsigned t = 0;
    std::optional<bool> commutation;        // exact psi_t available
    std::optional<Rational> exact_tangent;  // psi_t'(0)
    std::optional<bool> lattice_identity;   // eval(psi_t, mu(n,k)) = mu(n, j(k)), all n <= depth
    std::optional<FirstKinkCheck> first_kink;
    NonlinearityProfile nonlinearity;
    Lemma35Result lemma35;
};

struct EvidenceSuiteReport {
    std::string map_label;
    PLMap map = PLMap::identity();
    unsigned depth = 0;
    FirmnessVerdict firmness;
    std::optional<StructureReport> structure;
    std::string structure_note;
    PLConjugacyVerdict conjugacy;
    // Level-n lattice interpolant that satisfies h o f = g o h exactly.
    std::optional<PLMap> exact_conjugacy;
    std::optional<unsigned> exact_conjugacy_level;
    std::vector<TangentEvidence> tangents;
    TheoremFlag theorem2;
    TheoremFlag theorem3;
};

struct EvidenceOptions {
    unsigned firmness_bound = kDefaultFirmnessBound;
    unsigned structure_window = 1;
    std::size_t max_points = kDefaultMaxLatticePoints;
};

// Needs depth >= 5 (nonlinearity evidence spans levels depth-4..depth).
EvidenceSuiteReport run_evidence_suite(const CarcassMap& g, const std::vector<unsigned>& ts,
                                       unsigned depth, std::string label = {},
                                       const EvidenceOptions& opts = {});

// Smallest n <= depth whose tent-to-g lattice interpolant is an exact conjugacy.
std::optional<std::pair<unsigned, PLMap>> find_exact_conjugacy(const CarcassMap& g, unsigned depth,
                                                               std::size_t max_points);

} // namespace carcass
