#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "carcass/evidence.hpp"

// Orchestration behind the `carcass` executable. Every command builds an
// ordered document from core operations; the text and structured outputs
// are two renderings of the same document.
namespace carcass::cli {

using Document = nlohmann::ordered_json;

enum class Format { text, structured };

enum class Table { mu, len, delta };

struct Limits {
    std::size_t max_points = kDefaultMaxLatticePoints;
    std::size_t max_denominator_bits = 0;
};

struct AnalyzeOptions {
    std::optional<unsigned> depth; // default: 4*n0 + window for firm maps, else 8
    unsigned firmness_bound = kDefaultFirmnessBound;
    unsigned window = 1;
    Limits limits;
};

Document cmd_analyze(const PLMap& m, const std::string& label, const AnalyzeOptions& opts);

Document cmd_lattice(const PLMap& m, unsigned depth, std::optional<unsigned> level, Table table,
                     const Limits& limits);

// Map-valued results are returned as PLMap documents.
PLMap cmd_conjugacy_build(const PLMap& h);
Document cmd_conjugacy_verify(const PLMap& h, const PLMap& g);
Document cmd_conjugacy_detect(const PLMap& g, unsigned depth, const Limits& limits);
Document cmd_conjugacy_profile(const PLMap& g1, const PLMap& g2, unsigned depth,
                               const Limits& limits);

Document cmd_semiconj_psi_lattice(const PLMap& g, unsigned t, unsigned n, const Limits& limits);
Document cmd_semiconj_verify(const PLMap& psi, const PLMap& g);
Document cmd_semiconj_evidence(const PLMap& g, unsigned t, unsigned n_min, unsigned n_max,
                               const Limits& limits);
Document cmd_semiconj_lemma35(const PLMap& g, unsigned t, unsigned depth, const Limits& limits);

EvidenceSuiteReport cmd_theorems(const PLMap& g, const std::string& label,
                                 const std::vector<unsigned>& ts, unsigned depth,
                                 const Limits& limits);
Document to_document(const EvidenceSuiteReport& r);

PLMap cmd_mapgen_conjugate(const PLMap& h);
PLMap cmd_mapgen_asym_tent(const Rational& v);

Document to_document(const StructureReport& r);

std::string render(const Document& doc, Format format);
std::string render_text(const Document& doc);

// 0 success, 2 validation, 3 resource cap, 4 internal invariant breach.
int exit_code_for(const std::exception& e);

} // namespace carcass::cli
