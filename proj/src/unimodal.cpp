#include "carcass/unimodal.hpp"

#include <string>

#include "carcass/errors.hpp"

namespace carcass {

CarcassMap validate_carcass(const PLMap& input) {
    PLMap m = simplify(input);
    const auto pts = m.breakpoints();
    if (!pts.front().y.is_zero())
        throw ValidationError("not a carcass map: g(0) = " + pts.front().y.str() + ", expected 0");
    if (!pts.back().y.is_zero())
        throw ValidationError("not a carcass map: g(1) = " + pts.back().y.str() + ", expected 0");

    std::size_t top = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].y > pts[top].y) top = i;
    if (pts[top].y != Rational(1))
        throw ValidationError("not a carcass map: peak value " + pts[top].y.str() + " != 1");

    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
        const int sign = (pts[s + 1].y - pts[s].y).sign();
        if (s < top && sign <= 0)
            throw ValidationError("not a carcass map: not strictly increasing on [0, v] (segment [" +
                                  pts[s].x.str() + ", " + pts[s + 1].x.str() + "])");
        if (s >= top && sign >= 0)
            throw ValidationError("not a carcass map: not strictly decreasing on [v, 1] (segment [" +
                                  pts[s].x.str() + ", " + pts[s + 1].x.str() + "])");
    }
    Rational v = pts[top].x;
    return CarcassMap(std::move(m), std::move(v));
}

CarcassMap tent() { return validate_carcass(PLMap({{0, 0}, {Rational(1, 2), 1}, {1, 0}})); }

Rational iterate(const CarcassMap& g, const Rational& x, unsigned n) {
    Rational y = x;
    for (unsigned i = 0; i < n; ++i) y = g(y);
    return y;
}

FirmnessVerdict firmness(const CarcassMap& g, unsigned n_max) {
    if (n_max == 0) throw ValidationError("firmness bound must be at least 1");
    FirmnessVerdict out;
    out.kinks = kinks(g.map());
    bool all_hit = true;
    unsigned n0 = 0;
    for (const Rational& k : out.kinks) {
        std::optional<unsigned> hit;
        Rational y = k;
        for (unsigned n = 1; n <= n_max; ++n) {
            y = g(y);
            if (y.is_zero()) {
                hit = n;
                break;
            }
        }
        if (hit) n0 = std::max(n0, *hit);
        else all_hit = false;
        out.hit_times.push_back(hit);
    }
    if (all_hit) {
        out.status = Firmness::firm;
        out.n0 = n0;
    }
    return out;
}

Rational positive_fixed_point(const CarcassMap& g) {
    const auto pts = g.map().breakpoints();
    for (std::size_t s = g.map().segment_index(g.peak()); s + 1 < pts.size(); ++s) {
        const Point& a = pts[s];
        const Point& b = pts[s + 1];
        // a.y - a.x >= 0 at the peak, b.y - b.x < 0 at 1, strictly decreasing in between
        const Rational da = a.y - a.x;
        const Rational db = b.y - b.x;
        if (da.is_zero()) return a.x;
        if (da.sign() > 0 && db.sign() <= 0) {
            const Rational slope = (b.y - a.y) / (b.x - a.x);
            return a.x + da / (Rational(1) - slope);
        }
    }
    throw InvariantError("carcass map has no positive fixed point");
}

Rational slope_at_zero(const CarcassMap& g) { return g.map().segment_slope(0); }

Rational first_kink(const CarcassMap& g) {
    // a carcass map always has its peak as a kink
    return kinks(g.map()).front();
}

} // namespace carcass
