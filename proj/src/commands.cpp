#include "carcass/commands.hpp"

#include <algorithm>
#include <sstream>

#include "carcass/errors.hpp"
#include "carcass/map_io.hpp"

namespace carcass::cli {

namespace {

constexpr std::size_t kShownViolations = 4;

Document rationals(std::span<const Rational> xs) {
    Document arr = Document::array();
    for (const auto& x : xs) arr.push_back(x.str());
    return arr;
}

Document points_doc(std::span<const Point> pts) {
    Document arr = Document::array();
    for (const auto& p : pts) arr.push_back(Document::array({p.x.str(), p.y.str()}));
    return arr;
}

Document breakpoints_doc(const PLMap& m) { return points_doc(m.breakpoints()); }

Document firmness_doc(const FirmnessVerdict& v) {
    Document d;
    d["status"] = v.firm() ? "firm" : "unknown-within-bound";
    if (v.n0) d["n0"] = *v.n0;
    Document hits = Document::array();
    for (std::size_t i = 0; i < v.kinks.size(); ++i) {
        Document h;
        h["kink"] = v.kinks[i].str();
        if (v.hit_times[i]) h["hit"] = *v.hit_times[i];
        else h["hit"] = "none";
        hits.push_back(std::move(h));
    }
    d["hit_times"] = std::move(hits);
    return d;
}

Document verdict_doc(const PLConjugacyVerdict& v) {
    Document d;
    d["verdict"] = to_string(v.verdict);
    if (v.tangent) d["w"] = v.tangent->str();
    d["r"] = v.threshold.str();
    if (!v.failed_condition.empty()) d["failed_condition"] = v.failed_condition;
    if (!v.detail.empty()) d["detail"] = v.detail;
    return d;
}

Document necessary_doc(const NecessaryConditions& c) {
    Document d;
    d["slope_at_zero"] = c.slope_at_zero.str();
    d["fixed_point"] = c.fixed_point.str();
    d["slope_left_of_fixed_point"] = c.left_slope.str();
    d["slope_right_of_fixed_point"] = c.right_slope.str();
    d["slope_product"] = c.product.str();
    d["result"] = c.pass ? "pass" : "fail";
    if (!c.pass) d["failed_condition"] = c.failed;
    return d;
}

Document profile_doc(const NonlinearityProfile& p) {
    Document d;
    d["t"] = p.t;
    d["levels"] = std::to_string(p.n_min) + ".." + std::to_string(p.n_min + p.defects.size() - 1);
    d["defects"] = p.defects;
    d["verdict"] = to_string(p.verdict);
    return d;
}

Document lemma35_doc(const Lemma35Result& r) {
    Document d;
    d["t"] = r.t;
    d["status"] = to_string(r.status);
    if (r.n0) d["n0"] = *r.n0;
    if (r.slope) {
        d["collinear_nodes"] = r.collinear_nodes;
        d["slope"] = r.slope->str();
        d["threshold"] = r.threshold->str();
    }
    if (!r.delta_table.empty()) {
        Document t;
        for (const auto& [k, v] : r.delta_table) t[std::to_string(k)] = v.str();
        d["delta_table"] = std::move(t);
    }
    d["detail"] = r.detail;
    return d;
}

Document first_kink_doc(const FirstKinkCheck& c) {
    Document d;
    d["result"] = c.pass ? "pass" : "fail";
    d["a"] = c.g_kink.str();
    d["g_slope_at_zero"] = c.g_slope.str();
    d["psi_slope_at_zero"] = c.psi_slope.str();
    d["predicted"] = c.predicted.str();
    d["actual"] = c.actual ? c.actual->str() : "none";
    return d;
}

void apply(const Limits& limits) { set_max_denominator_bits(limits.max_denominator_bits); }

} // namespace

Document to_document(const StructureReport& r) {
    Document d;
    d["n0"] = r.n0;
    d["depth"] = r.depth;
    Document table;
    for (const auto& [k, v] : r.delta_table) table[std::to_string(k)] = v.str();
    d["delta_table"] = std::move(table);
    d["l_constants"] = rationals(r.l_constants);
    Document checks = Document::array();
    for (const DiagnosticCheck* c : r.checks()) {
        Document cd;
        cd["name"] = c->name;
        cd["holds"] = c->holds();
        Document vars = Document::array();
        for (const auto& v : c->variants) {
            Document vd;
            vd["reading"] = v.label;
            vd["holds"] = v.holds();
            vd["tested"] = v.tested;
            vd["violations"] = v.violation_count;
            if (!v.violations.empty()) {
                Document ex = Document::array();
                for (std::size_t i = 0; i < v.violations.size() && i < kShownViolations; ++i) {
                    const auto& x = v.violations[i];
                    Document e;
                    e["n"] = x.n;
                    e["k"] = x.k;
                    e["expected"] = x.expected.str();
                    e["actual"] = x.actual.str();
                    ex.push_back(std::move(e));
                }
                vd["counterexamples"] = std::move(ex);
            }
            vars.push_back(std::move(vd));
        }
        cd["readings"] = std::move(vars);
        checks.push_back(std::move(cd));
    }
    d["checks"] = std::move(checks);
    return d;
}

Document cmd_analyze(const PLMap& m, const std::string& label, const AnalyzeOptions& opts) {
    apply(opts.limits);
    const CarcassMap g = validate_carcass(m);
    Document d;
    d["map"] = label;
    d["peak"] = g.peak().str();
    d["kinks"] = rationals(kinks(g.map()));
    d["necessary_conditions"] = necessary_doc(pl_conjugacy_necessary(g));
    const FirmnessVerdict fv = firmness(g, opts.firmness_bound);
    d["firmness"] = firmness_doc(fv);

    unsigned depth = opts.depth.value_or(8);
    if (fv.firm()) {
        if (!opts.depth) depth = std::max(8U, 4 * *fv.n0 + opts.window);
        const PreimageLattice L = build_lattice(g, depth, opts.limits.max_points);
        d["structure"] = to_document(structure_report(L, fv, opts.window));
    } else {
        d["structure"] = "conjugacy-to-tent assumed (firmness not established within bound)";
    }
    d["conjugacy"] = verdict_doc(pl_conjugacy_detect(g, depth, opts.limits.max_points));
    return d;
}

Document cmd_lattice(const PLMap& m, unsigned depth, std::optional<unsigned> level, Table table,
                     const Limits& limits) {
    apply(limits);
    const CarcassMap g = validate_carcass(m);
    const PreimageLattice L = build_lattice(g, depth, limits.max_points);
    Document d;
    d["depth"] = depth;
    d["table"] = table == Table::mu ? "mu" : table == Table::len ? "len" : "delta";
    Document levels = Document::array();
    const unsigned lo = level.value_or(1);
    const unsigned hi = level.value_or(depth);
    if (lo < 1 || hi > depth) throw DomainError("level outside 1.." + std::to_string(depth));
    for (unsigned n = lo; n <= hi; ++n) {
        std::vector<Rational> row;
        switch (table) {
        case Table::mu: {
            const auto lv = L.level(n);
            row.assign(lv.begin(), lv.end());
            break;
        }
        case Table::len:
            for (std::uint64_t k = 0; k < level_intervals(n); ++k) row.push_back(interval_length(L, n, k));
            break;
        case Table::delta:
            if (n == depth) continue; // delta at level n needs level n+1
            for (std::uint64_t k = 0; k < level_intervals(n); ++k) row.push_back(delta(L, n, k));
            break;
        }
        Document ld;
        ld["n"] = n;
        ld["values"] = rationals(row);
        levels.push_back(std::move(ld));
    }
    d["levels"] = std::move(levels);
    return d;
}

PLMap cmd_conjugacy_build(const PLMap& h) { return conjugate_by(h, tent()).map(); }

Document cmd_conjugacy_verify(const PLMap& h, const PLMap& gm) {
    const CarcassMap g = validate_carcass(gm);
    Document d;
    d["equation"] = "h o f = g o h";
    d["holds"] = verify_conjugacy(h, tent(), g);
    return d;
}

Document cmd_conjugacy_detect(const PLMap& gm, unsigned depth, const Limits& limits) {
    apply(limits);
    const CarcassMap g = validate_carcass(gm);
    Document d;
    d["depth"] = depth;
    d["necessary_conditions"] = necessary_doc(pl_conjugacy_necessary(g));
    d["conjugacy"] = verdict_doc(pl_conjugacy_detect(g, depth, limits.max_points));
    return d;
}

Document cmd_conjugacy_profile(const PLMap& g1m, const PLMap& g2m, unsigned depth,
                               const Limits& limits) {
    apply(limits);
    const CarcassMap g1 = validate_carcass(g1m);
    const CarcassMap g2 = validate_carcass(g2m);
    const auto prof = conjugacy_convergence_profile(g1, g2, depth, limits.max_points);
    Document d;
    d["depth"] = depth;
    Document rows = Document::array();
    for (std::size_t i = 0; i < prof.size(); ++i) {
        Document r;
        r["n"] = i + 2;
        r["max_gap"] = prof[i].str();
        rows.push_back(std::move(r));
    }
    d["profile"] = std::move(rows);
    const bool stable = !prof.empty() && prof.back().is_zero();
    d["stabilized"] = stable;
    return d;
}

Document cmd_semiconj_psi_lattice(const PLMap& gm, unsigned t, unsigned n, const Limits& limits) {
    apply(limits);
    const CarcassMap g = validate_carcass(gm);
    const SemiconjSolution s = psi_lattice(g, t, n, limits.max_points);
    Document d;
    d["t"] = t;
    d["level"] = n;
    d["points"] = points_doc(s.points);
    return d;
}

Document cmd_semiconj_verify(const PLMap& psi, const PLMap& gm) {
    const CarcassMap g = validate_carcass(gm);
    Document d;
    d["equation"] = "psi o g = g o psi";
    d["holds"] = verify_commutation(psi, g);
    return d;
}

Document cmd_semiconj_evidence(const PLMap& gm, unsigned t, unsigned n_min, unsigned n_max,
                               const Limits& limits) {
    apply(limits);
    const CarcassMap g = validate_carcass(gm);
    return profile_doc(nonlinearity_evidence(g, t, n_min, n_max, limits.max_points));
}

Document cmd_semiconj_lemma35(const PLMap& gm, unsigned t, unsigned depth, const Limits& limits) {
    apply(limits);
    const CarcassMap g = validate_carcass(gm);
    return lemma35_doc(lemma_3_5_check(g, t, depth, kDefaultFirmnessBound, limits.max_points));
}

EvidenceSuiteReport cmd_theorems(const PLMap& gm, const std::string& label,
                                 const std::vector<unsigned>& ts, unsigned depth,
                                 const Limits& limits) {
    apply(limits);
    const CarcassMap g = validate_carcass(gm);
    EvidenceOptions opts;
    opts.max_points = limits.max_points;
    return run_evidence_suite(g, ts, depth, label, opts);
}

Document to_document(const EvidenceSuiteReport& r) {
    Document d;
    d["map"] = r.map_label;
    d["breakpoints"] = breakpoints_doc(r.map);
    d["depth"] = r.depth;
    d["firmness"] = firmness_doc(r.firmness);
    if (r.structure) {
        Document s;
        s["n0"] = r.structure->n0;
        s["depth"] = r.structure->depth;
        Document table;
        for (const auto& [k, v] : r.structure->delta_table) table[std::to_string(k)] = v.str();
        s["delta_table"] = std::move(table);
        s["l_constants"] = rationals(r.structure->l_constants);
        Document holds;
        for (const DiagnosticCheck* c : r.structure->checks()) {
            std::string readings;
            for (const auto& v : c->variants)
                if (v.holds()) readings += (readings.empty() ? "" : "; ") + v.label;
            holds[c->name] = readings.empty() ? "no reading holds" : "holds (" + readings + ")";
        }
        s["checks"] = std::move(holds);
        d["structure"] = std::move(s);
    } else {
        d["structure"] = r.structure_note;
    }
    d["conjugacy"] = verdict_doc(r.conjugacy);
    if (r.exact_conjugacy) {
        Document e;
        e["level"] = *r.exact_conjugacy_level;
        e["breakpoints"] = breakpoints_doc(*r.exact_conjugacy);
        d["exact_conjugacy"] = std::move(e);
    } else {
        d["exact_conjugacy"] = "none found up to depth " + std::to_string(r.depth);
    }
    Document ts = Document::array();
    for (const auto& ev : r.tangents) {
        Document e;
        e["t"] = ev.t;
        e["commutation"] = ev.commutation ? (*ev.commutation ? "holds" : "fails") : "n/a (no exact conjugacy)";
        if (ev.exact_tangent) e["exact_tangent"] = ev.exact_tangent->str();
        e["lattice_identity"] =
            ev.lattice_identity ? (*ev.lattice_identity ? "holds" : "fails") : "n/a (lattice-sampled)";
        if (ev.first_kink) e["first_kink"] = first_kink_doc(*ev.first_kink);
        e["nonlinearity"] = profile_doc(ev.nonlinearity);
        e["lemma_3_5"] = lemma35_doc(ev.lemma35);
        ts.push_back(std::move(e));
    }
    d["tangents"] = std::move(ts);
    Document th;
    th["theorem_2"] = {{"status", to_string(r.theorem2.status)}, {"witness", r.theorem2.witness}};
    th["theorem_3"] = {{"status", to_string(r.theorem3.status)}, {"witness", r.theorem3.witness}};
    d["theorems"] = std::move(th);
    return d;
}

PLMap cmd_mapgen_conjugate(const PLMap& h) { return conjugate_by(h, tent()).map(); }

PLMap cmd_mapgen_asym_tent(const Rational& v) {
    if (!(v > Rational(0) && v < Rational(1)))
        throw ValidationError("asym-tent peak v = " + v.str() + " must lie in (0,1)");
    return validate_carcass(PLMap({{0, 0}, {v, 1}, {1, 0}})).map();
}

namespace {

std::string scalar_text(const Document& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

bool is_scalar(const Document& v) { return !v.is_object() && !v.is_array(); }

bool all_scalars(const Document& arr) {
    return std::all_of(arr.begin(), arr.end(), [](const Document& v) { return is_scalar(v); });
}

void render_into(std::ostringstream& out, const Document& doc, int indent);

void render_value(std::ostringstream& out, const std::string& key, const Document& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (is_scalar(v)) {
        out << pad << key << ": " << scalar_text(v) << '\n';
    } else if (v.is_array() && all_scalars(v)) {
        out << pad << key << ":";
        if (v.empty()) out << " (none)";
        for (const auto& x : v) out << ' ' << scalar_text(x);
        out << '\n';
    } else if (v.is_array()) {
        out << pad << key << ":\n";
        for (const auto& item : v) {
            if (item.is_array() && all_scalars(item)) {
                out << pad << "  ";
                bool first = true;
                for (const auto& x : item) {
                    out << (first ? "" : " ") << scalar_text(x);
                    first = false;
                }
                out << '\n';
            } else if (item.is_object()) {
                std::ostringstream inner;
                render_into(inner, item, indent + 4);
                std::string s = inner.str();
                // replace the leading pad of the first line with "  - "
                s.replace(0, static_cast<std::size_t>(indent + 4), pad + "  - ");
                out << s;
            } else {
                out << pad << "  - " << scalar_text(item) << '\n';
            }
        }
    } else {
        out << pad << key << ":\n";
        render_into(out, v, indent + 2);
    }
}

void render_into(std::ostringstream& out, const Document& doc, int indent) {
    for (auto it = doc.begin(); it != doc.end(); ++it) render_value(out, it.key(), it.value(), indent);
}

} // namespace

std::string render_text(const Document& doc) {
    std::ostringstream out;
    render_into(out, doc, 0);
    return out.str();
}

std::string render(const Document& doc, Format format) {
    if (format == Format::structured) return doc.dump(2) + "\n";
    return render_text(doc);
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ResourceError*>(&e)) return 3;
    if (dynamic_cast<const InvariantError*>(&e)) return 4;
    if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const DomainError*>(&e)) return 2;
    return 4;
}

} // namespace carcass::cli
