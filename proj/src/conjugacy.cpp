#include "carcass/conjugacy.hpp"

#include <string>

#include "carcass/errors.hpp"

namespace carcass {

namespace {

PLMap interpolant(std::span<const Rational> xs, std::span<const Rational> ys) {
    std::vector<Point> pts;
    pts.reserve(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) pts.push_back({xs[k], ys[k]});
    return simplify(PLMap(std::move(pts)));
}

} // namespace

CarcassMap conjugate_by(const PLMap& h, const CarcassMap& base) {
    const PLMap h_inv = invert_monotone(h);
    CarcassMap g = validate_carcass(compose(compose(h, base.map()), h_inv));
    if (!verify_conjugacy(h, base, g))
        throw InvariantError("conjugate map fails h o f = g o h");
    return g;
}

bool verify_conjugacy(const PLMap& h, const CarcassMap& g1, const CarcassMap& g2) {
    return compose(h, g1.map()) == compose(g2.map(), h);
}

PLMap lattice_conjugacy(const CarcassMap& g1, const CarcassMap& g2, unsigned n,
                        std::size_t max_points) {
    const PreimageLattice a = build_lattice(g1, n, max_points);
    const PreimageLattice b = build_lattice(g2, n, max_points);
    return interpolant(a.level(n), b.level(n));
}

std::vector<Rational> conjugacy_convergence_profile(const CarcassMap& g1, const CarcassMap& g2,
                                                    unsigned depth, std::size_t max_points) {
    if (depth < 2) throw DomainError("convergence profile needs depth >= 2");
    const PreimageLattice a = build_lattice(g1, depth, max_points);
    const PreimageLattice b = build_lattice(g2, depth, max_points);
    std::vector<Rational> profile;
    for (unsigned n = 2; n < depth; ++n) {
        const PLMap hn = interpolant(a.level(n), b.level(n));
        const auto xs = a.level(n + 1);
        const auto ys = b.level(n + 1);
        Rational worst(0);
        for (std::size_t k = 0; k < xs.size(); ++k) {
            const Rational gap = abs(eval(hn, xs[k]) - ys[k]);
            if (gap > worst) worst = gap;
        }
        profile.push_back(worst);
    }
    return profile;
}

NecessaryConditions pl_conjugacy_necessary(const CarcassMap& g) {
    NecessaryConditions c;
    c.slope_at_zero = slope_at_zero(g);
    c.fixed_point = positive_fixed_point(g);
    c.left_slope = one_sided_slope(g.map(), c.fixed_point, Side::left);
    c.right_slope = one_sided_slope(g.map(), c.fixed_point, Side::right);
    c.product = c.left_slope * c.right_slope;
    if (c.slope_at_zero != Rational(2))
        c.failed = "g'(0) = " + c.slope_at_zero.str() + " != 2";
    else if (c.product != Rational(4))
        c.failed = "g'(x0-) * g'(x0+) = " + c.product.str() + " != 4 at x0 = " + c.fixed_point.str();
    c.pass = c.failed.empty();
    return c;
}

const char* to_string(PLVerdict v) {
    switch (v) {
    case PLVerdict::pl: return "pl";
    case PLVerdict::not_pl: return "not-pl";
    case PLVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

PLConjugacyVerdict pl_conjugacy_detect(const CarcassMap& g, unsigned depth,
                                       std::size_t max_points) {
    if (depth < 3) throw DomainError("PL-conjugacy detection needs depth >= 3");
    PLConjugacyVerdict out;
    out.necessary = pl_conjugacy_necessary(g);
    out.threshold = g(first_kink(g));
    if (!out.necessary.pass) {
        out.verdict = PLVerdict::not_pl;
        out.failed_condition = out.necessary.failed;
        return out;
    }

    const PreimageLattice L = build_lattice(g, depth, max_points);
    const Rational w = Rational::pow2(static_cast<int>(depth) - 1) * L.mu(depth, 1);
    std::size_t deepest_positive = 0;
    for (unsigned n = 1; n <= depth; ++n) {
        const auto lv = L.level(n);
        const Rational step = w / Rational::pow2(static_cast<int>(n) - 1);
        for (std::size_t k = 0; k < lv.size() && lv[k] <= out.threshold; ++k) {
            ++out.nodes_checked;
            if (lv[k] != step * Rational(static_cast<std::int64_t>(k))) {
                out.detail = "mu(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                             lv[k].str() + " != w*k/2^(n-1) = " +
                             (step * Rational(static_cast<std::int64_t>(k))).str() + " with w = " +
                             w.str();
                return out;
            }
            if (n == depth && k > 0) ++deepest_positive;
        }
    }
    if (deepest_positive < 2) {
        out.detail = "fewer than two positive level-" + std::to_string(depth) +
                     " nodes at or below r = " + out.threshold.str();
        return out;
    }
    out.verdict = PLVerdict::pl;
    out.tangent = w;
    out.detail = std::to_string(out.nodes_checked) + " nodes at or below r match w*k/2^(n-1)";
    return out;
}

} // namespace carcass
