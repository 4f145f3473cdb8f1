#include "carcass/evidence.hpp"

#include <algorithm>
#include <string>

#include "carcass/errors.hpp"

namespace carcass {

const char* to_string(Consistency c) {
    switch (c) {
    case Consistency::consistent: return "consistent";
    case Consistency::consistent_contrapositive: return "consistent (contrapositive)";
    case Consistency::consistent_vacuous: return "consistent (premise not met)";
    case Consistency::inconclusive: return "inconclusive";
    case Consistency::violation: return "violation";
    }
    return "?";
}

std::optional<std::pair<unsigned, PLMap>> find_exact_conjugacy(const CarcassMap& g, unsigned depth,
                                                               std::size_t max_points) {
    const CarcassMap f = tent();
    const PreimageLattice a = build_lattice(f, depth, max_points);
    const PreimageLattice b = build_lattice(g, depth, max_points);
    for (unsigned n = 1; n <= depth; ++n) {
        std::vector<Point> pts;
        const auto xs = a.level(n);
        const auto ys = b.level(n);
        for (std::size_t k = 0; k < xs.size(); ++k) pts.push_back({xs[k], ys[k]});
        PLMap h = simplify(PLMap(std::move(pts)));
        if (verify_conjugacy(h, f, g)) return std::make_pair(n, std::move(h));
    }
    return std::nullopt;
}

namespace {

TangentEvidence tangent_evidence(const CarcassMap& g, const PreimageLattice& L, unsigned t,
                                 const std::optional<PLMap>& h, const EvidenceOptions& opts) {
    const unsigned depth = L.depth();
    TangentEvidence ev;
    ev.t = t;
    if (h) {
        try {
            const SemiconjSolution psi = psi_exact(*h, t);
            ev.commutation = true;
            ev.exact_tangent = psi.body->segment_slope(0);
            bool identity = true;
            for (unsigned n = 1; n <= depth && identity; ++n) {
                const auto lv = L.level(n);
                for (std::uint64_t k = 0; k < lv.size(); ++k) {
                    if (eval(*psi.body, lv[k]) != lv[dyadic_index_map(t, n, k)]) {
                        identity = false;
                        break;
                    }
                }
            }
            ev.lattice_identity = identity;
            if (*ev.exact_tangent > slope_at_zero(g)) ev.first_kink = first_kink_check(g, psi);
        } catch (const InvariantError&) {
            ev.commutation = false;
        }
    }
    ev.nonlinearity = nonlinearity_evidence(g, t, std::max(3U, depth - 4), depth, opts.max_points);
    ev.lemma35 = lemma_3_5_check(g, t, depth, opts.firmness_bound, opts.max_points);
    return ev;
}

TheoremFlag theorem2_flag(const EvidenceSuiteReport& r) {
    if (!r.firmness.firm())
        return {Consistency::consistent_vacuous, "map not firm within the iteration bound"};
    for (const auto& ev : r.tangents) {
        if (ev.lemma35.status == Lemma35Status::fail)
            return {Consistency::violation,
                    "t = " + std::to_string(ev.t) + ": " + ev.lemma35.detail};
    }
    const TangentEvidence* premise = nullptr;
    for (const auto& ev : r.tangents) {
        if (is_power_of_two(ev.t)) continue;
        const bool exact = ev.commutation.value_or(false);
        const bool sampled = ev.lemma35.status == Lemma35Status::pass;
        if (exact || sampled) {
            premise = &ev;
            break;
        }
    }
    if (!premise)
        return {Consistency::consistent_vacuous,
                "no piecewise-linear solution with tangent not a power of 2 among tested t"};
    std::string pw = "t = " + std::to_string(premise->t) + " (" +
                     (premise->commutation.value_or(false)
                          ? "exact psi_t commutes, tangent " + premise->exact_tangent->str()
                          : "lattice run through origin below a = " +
                                premise->lemma35.threshold->str()) +
                     ")";
    switch (r.conjugacy.verdict) {
    case PLVerdict::pl:
        return {Consistency::consistent, pw + "; conjugacy pl with w = " + r.conjugacy.tangent->str()};
    case PLVerdict::not_pl:
        return {Consistency::violation, pw + "; conjugacy not-pl: " + r.conjugacy.failed_condition};
    case PLVerdict::inconclusive: break;
    }
    return {Consistency::inconclusive, pw + "; conjugacy verdict inconclusive: " + r.conjugacy.detail};
}

TheoremFlag theorem3_flag(const EvidenceSuiteReport& r) {
    switch (r.conjugacy.verdict) {
    case PLVerdict::pl:
        return {Consistency::consistent, "conjugacy pl with w = " + r.conjugacy.tangent->str()};
    case PLVerdict::not_pl:
        for (const auto& ev : r.tangents) {
            if (ev.nonlinearity.verdict == NonlinearityVerdict::non_pl_evidence) {
                std::string counts;
                for (auto c : ev.nonlinearity.defects) counts += (counts.empty() ? "" : " ") + std::to_string(c);
                return {Consistency::consistent_contrapositive,
                        "conjugacy not-pl (" + r.conjugacy.failed_condition + "); psi_" +
                            std::to_string(ev.t) + " defect counts " + counts};
            }
        }
        return {Consistency::inconclusive, "conjugacy not-pl (" + r.conjugacy.failed_condition +
                                               ") but no tested psi_t shows non-pl evidence"};
    case PLVerdict::inconclusive: break;
    }
    return {Consistency::inconclusive, "conjugacy verdict inconclusive: " + r.conjugacy.detail};
}

} // namespace

EvidenceSuiteReport run_evidence_suite(const CarcassMap& g, const std::vector<unsigned>& ts,
                                       unsigned depth, std::string label,
                                       const EvidenceOptions& opts) {
    if (depth < 5) throw DomainError("evidence suite needs depth >= 5");
    if (ts.empty()) throw ValidationError("evidence suite needs at least one t");
    EvidenceSuiteReport r;
    r.map_label = std::move(label);
    r.map = g.map();
    r.depth = depth;
    r.firmness = firmness(g, opts.firmness_bound);

    if (r.firmness.firm()) {
        const unsigned sdepth = std::max(depth, 4 * *r.firmness.n0 + opts.structure_window);
        try {
            const PreimageLattice SL = build_lattice(g, sdepth, opts.max_points);
            r.structure = structure_report(SL, r.firmness, opts.structure_window);
        } catch (const ResourceError& e) {
            r.structure_note = e.what();
        }
    } else {
        r.structure_note = "not firm within " + std::to_string(opts.firmness_bound) +
                           " iterations; conjugacy-to-tent assumed";
    }

    r.conjugacy = pl_conjugacy_detect(g, depth, opts.max_points);
    if (auto exact = find_exact_conjugacy(g, depth, opts.max_points)) {
        r.exact_conjugacy_level = exact->first;
        r.exact_conjugacy = std::move(exact->second);
    }

    const PreimageLattice L = build_lattice(g, depth, opts.max_points);
    for (unsigned t : ts) {
        if (t == 0) throw ValidationError("t must be at least 1");
        r.tangents.push_back(tangent_evidence(g, L, t, r.exact_conjugacy, opts));
    }
    r.theorem2 = theorem2_flag(r);
    r.theorem3 = theorem3_flag(r);
    return r;
}

} // namespace carcass
