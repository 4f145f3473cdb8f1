#include "carcass/semiconj.hpp"

#include <string>

#include "carcass/errors.hpp"

namespace carcass {

PLMap xi(unsigned t) {
    if (t == 0) throw ValidationError("xi_t needs t >= 1");
    std::vector<Point> pts;
    pts.reserve(t + 1);
    for (unsigned k = 0; k <= t; ++k)
        pts.push_back({Rational(k, t), Rational(k % 2)});
    return PLMap(std::move(pts));
}

bool verify_commutation(const PLMap& psi, const CarcassMap& g) {
    return compose(psi, g.map()) == compose(g.map(), psi);
}

SemiconjSolution psi_exact(const PLMap& h, unsigned t) {
    const CarcassMap g = conjugate_by(h, tent());
    PLMap body = compose(compose(h, xi(t)), invert_monotone(h));
    if (!verify_commutation(body, g))
        throw InvariantError("h o xi_" + std::to_string(t) + " o h^-1 does not commute with g");
    SemiconjSolution s;
    s.kind = SolutionKind::exact_pl;
    s.t = t;
    s.body = std::move(body);
    return s;
}

std::vector<Rational> constant_solutions(const CarcassMap& g) {
    std::vector<Rational> out{Rational(0), positive_fixed_point(g)};
    for (const Rational& c : out)
        if (g(c) != c) throw InvariantError("constant " + c.str() + " is not a fixed point");
    return out;
}

std::uint64_t dyadic_index_map(unsigned t, unsigned n, std::uint64_t k) {
    if (n < 1 || n > 63) throw DomainError("level n = " + std::to_string(n) + " out of range");
    const std::uint64_t size = std::uint64_t{1} << (n - 1);
    if (k > size)
        throw DomainError("index k = " + std::to_string(k) + " beyond level " + std::to_string(n));
    const unsigned __int128 tk = static_cast<unsigned __int128>(t) * k;
    const auto quotient = static_cast<std::uint64_t>(tk / size);
    const auto rem = static_cast<std::uint64_t>(tk % size);
    return quotient % 2 == 0 ? rem : size - rem;
}

SemiconjSolution psi_lattice(const PreimageLattice& L, unsigned t, unsigned n) {
    if (t == 0) throw ValidationError("psi_t needs t >= 1");
    const auto lv = L.level(n);
    SemiconjSolution s;
    s.kind = SolutionKind::lattice_sampled;
    s.t = t;
    s.level = n;
    s.points.reserve(lv.size());
    for (std::uint64_t k = 0; k < lv.size(); ++k)
        s.points.push_back({lv[k], lv[dyadic_index_map(t, n, k)]});
    return s;
}

SemiconjSolution psi_lattice(const CarcassMap& g, unsigned t, unsigned n, std::size_t max_points) {
    return psi_lattice(build_lattice(g, n, max_points), t, n);
}

Rational tangent_estimate(const CarcassMap& g, unsigned t, unsigned n, std::size_t max_points) {
    if (t == 0) throw ValidationError("tangent estimate needs t >= 1");
    if (n < 1 || n > 63 || t > level_intervals(n))
        throw DomainError("tangent estimate needs t <= 2^(n-1)");
    const PreimageLattice L = build_lattice(g, n, max_points);
    return L.mu(n, t) / L.mu(n, 1);
}

FirstKinkCheck first_kink_check(const CarcassMap& g, const SemiconjSolution& psi) {
    if (psi.kind != SolutionKind::exact_pl || !psi.body)
        throw ValidationError("first-kink check needs an exact piecewise-linear solution");
    FirstKinkCheck c;
    c.g_slope = slope_at_zero(g);
    c.psi_slope = psi.body->segment_slope(0);
    if (!(c.psi_slope > c.g_slope))
        throw ValidationError("first-kink check needs psi'(0) > g'(0), got " + c.psi_slope.str() +
                              " <= " + c.g_slope.str());
    c.g_kink = first_kink(g);
    c.predicted = c.g_kink * c.g_slope / c.psi_slope;
    const auto psi_kinks = kinks(*psi.body);
    if (!psi_kinks.empty()) c.actual = psi_kinks.front();
    c.pass = c.actual && *c.actual == c.predicted;
    return c;
}

const char* to_string(NonlinearityVerdict v) {
    return v == NonlinearityVerdict::pl_consistent ? "pl-consistent" : "non-pl-evidence";
}

NonlinearityProfile nonlinearity_evidence(const CarcassMap& g, unsigned t, unsigned n_min,
                                          unsigned n_max, std::size_t max_points) {
    if (n_min < 3) throw DomainError("nonlinearity evidence needs n_min >= 3");
    if (n_max < n_min + 2) throw DomainError("nonlinearity evidence needs n_max >= n_min + 2");
    const PreimageLattice L = build_lattice(g, n_max, max_points);
    NonlinearityProfile p;
    p.t = t;
    p.n_min = n_min;
    for (unsigned n = n_min; n <= n_max; ++n)
        p.defects.push_back(collinearity_defects(psi_lattice(L, t, n).points).size());
    const std::size_t m = p.defects.size();
    const bool growing = p.defects[m - 3] < p.defects[m - 2] && p.defects[m - 2] < p.defects[m - 1];
    p.verdict = growing ? NonlinearityVerdict::non_pl_evidence : NonlinearityVerdict::pl_consistent;
    return p;
}

const char* to_string(Lemma35Status s) {
    switch (s) {
    case Lemma35Status::pass: return "pass";
    case Lemma35Status::fail: return "fail";
    case Lemma35Status::not_applicable_not_firm: return "not-applicable-not-firm";
    case Lemma35Status::not_applicable_power_of_two: return "not-applicable-power-of-two";
    case Lemma35Status::not_applicable_hypothesis: return "not-applicable-hypothesis";
    }
    return "?";
}

bool is_power_of_two(unsigned t) { return t != 0 && (t & (t - 1)) == 0; }

Lemma35Result lemma_3_5_check(const CarcassMap& g, unsigned t, unsigned depth,
                              unsigned firmness_bound, std::size_t max_points) {
    if (t == 0) throw ValidationError("threshold check needs t >= 1");
    Lemma35Result r;
    r.t = t;
    const FirmnessVerdict fv = firmness(g, firmness_bound);
    if (!fv.firm()) {
        r.status = Lemma35Status::not_applicable_not_firm;
        r.detail = "map not firm within " + std::to_string(firmness_bound) + " iterations";
        return r;
    }
    r.n0 = fv.n0;
    if (is_power_of_two(t)) {
        r.status = Lemma35Status::not_applicable_power_of_two;
        r.detail = "t = " + std::to_string(t) + " is a power of 2";
        return r;
    }
    const unsigned n0 = *fv.n0;
    if (depth < n0 + 2 || depth < 3)
        throw DomainError("threshold check needs depth >= max(n0 + 2, 3) = " +
                          std::to_string(std::max(n0 + 2, 3U)));

    const PreimageLattice L = build_lattice(g, depth, max_points);
    const SemiconjSolution s = psi_lattice(L, t, depth);
    const Rational slope = s.points[1].y / s.points[1].x;
    std::size_t run = 1;
    while (run < s.points.size() && s.points[run].y == slope * s.points[run].x) ++run;
    r.collinear_nodes = run;
    r.slope = slope;
    r.threshold = s.points[run - 1].y;

    const std::uint64_t block = std::uint64_t{1} << n0;
    for (std::uint64_t k = 0; k < block; ++k) r.delta_table.emplace(k, delta(L, n0 + 1, k));

    if (run < 4) {
        r.status = Lemma35Status::not_applicable_hypothesis;
        r.detail = "initial lattice run through the origin has only " + std::to_string(run) +
                   " nodes (need 4)";
        return r;
    }
    const Rational& d0 = r.delta_table.begin()->second;
    for (const auto& [k, d] : r.delta_table) {
        if (d != d0) {
            r.status = Lemma35Status::fail;
            r.detail = "hypothesis holds below a = " + r.threshold->str() + " but delta_" +
                       std::to_string(k) + " = " + d.str() + " != delta_0 = " + d0.str();
            return r;
        }
    }
    r.status = Lemma35Status::pass;
    r.detail = "hypothesis holds below a = " + r.threshold->str() + "; all delta_k = " + d0.str();
    return r;
}

} // namespace carcass
