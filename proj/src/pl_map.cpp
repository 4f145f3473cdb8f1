#include "carcass/pl_map.hpp"

#include <algorithm>
#include <string>

#include "carcass/errors.hpp"

namespace carcass {

namespace {

const Rational kZero{0};
const Rational kOne{1};

bool collinear(const Point& a, const Point& b, const Point& c) {
    return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

void require_unit(const Rational& x, const char* what) {
    if (x < kZero || x > kOne)
        throw DomainError(std::string(what) + " " + x.str() + " outside [0,1]");
}

} // namespace

PLMap::PLMap(std::vector<Point> breakpoints) : points_(std::move(breakpoints)) {
    if (points_.size() < 2) throw ValidationError("a map needs at least two breakpoints");
    if (points_.front().x != kZero) throw ValidationError("first breakpoint must have x = 0");
    if (points_.back().x != kOne) throw ValidationError("last breakpoint must have x = 1");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const Point& p = points_[i];
        if (p.y < kZero || p.y > kOne)
            throw ValidationError("breakpoint " + std::to_string(i) + " has y = " + p.y.str() +
                                  " outside [0,1]");
        if (i > 0 && !(points_[i - 1].x < p.x))
            throw ValidationError("breakpoint " + std::to_string(i) +
                                  " does not have strictly increasing x");
    }
}

PLMap PLMap::identity() { return PLMap({{0, 0}, {1, 1}}); }

Rational PLMap::segment_slope(std::size_t i) const {
    return (points_[i + 1].y - points_[i].y) / (points_[i + 1].x - points_[i].x);
}

std::size_t PLMap::segment_index(const Rational& x) const {
    auto it = std::upper_bound(points_.begin(), points_.end(), x,
                               [](const Rational& v, const Point& p) { return v < p.x; });
    const auto idx = static_cast<std::size_t>(it - points_.begin());
    // idx >= 1 because points_[0].x = 0 <= x
    return std::min(idx - 1, segment_count() - 1);
}

Rational eval(const PLMap& m, const Rational& x) {
    require_unit(x, "eval at x =");
    const auto pts = m.breakpoints();
    const std::size_t i = m.segment_index(x);
    const Point& a = pts[i];
    if (x == a.x) return a.y;
    const Point& b = pts[i + 1];
    if (x == b.x) return b.y;
    return a.y + (b.y - a.y) * ((x - a.x) / (b.x - a.x));
}

PLMap compose(const PLMap& outer, const PLMap& inner) {
    const auto in = inner.breakpoints();
    const auto out = outer.breakpoints();
    std::vector<Point> result;
    result.reserve(in.size() + out.size());
    result.push_back({in.front().x, eval(outer, in.front().y)});

    std::vector<Point> fresh;
    for (std::size_t s = 0; s + 1 < in.size(); ++s) {
        const Point& a = in[s];
        const Point& b = in[s + 1];
        fresh.clear();
        if (a.y != b.y) {
            const bool up = a.y < b.y;
            const Rational& lo = up ? a.y : b.y;
            const Rational& hi = up ? b.y : a.y;
            // outer breakpoints strictly inside (lo, hi)
            auto first = std::upper_bound(out.begin(), out.end(), lo,
                                          [](const Rational& v, const Point& p) { return v < p.x; });
            auto last = std::lower_bound(out.begin(), out.end(), hi,
                                         [](const Point& p, const Rational& v) { return p.x < v; });
            const Rational dx_dy = (b.x - a.x) / (b.y - a.y);
            for (auto it = first; it < last; ++it)
                fresh.push_back({a.x + (it->x - a.y) * dx_dy, it->y});
            if (!up) std::reverse(fresh.begin(), fresh.end());
        }
        for (auto& p : fresh) result.push_back(std::move(p));
        result.push_back({b.x, eval(outer, b.y)});
    }
    return simplify(PLMap(std::move(result)));
}

PLMap invert_monotone(const PLMap& m) {
    const auto pts = m.breakpoints();
    if (pts.front().y != kZero || pts.back().y != kOne)
        throw ValidationError("not a homeomorphism: endpoints must map 0 -> 0 and 1 -> 1");
    std::vector<Point> swapped;
    swapped.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0 && !(pts[i - 1].y < pts[i].y))
            throw ValidationError("not a homeomorphism: segment " + std::to_string(i - 1) +
                                  " has non-positive slope");
        swapped.push_back({pts[i].y, pts[i].x});
    }
    return PLMap(std::move(swapped));
}

std::vector<Rational> preimage_points(const PLMap& m, const Rational& y) {
    require_unit(y, "preimage of y =");
    const auto pts = m.breakpoints();
    std::vector<Rational> xs;
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
        const Point& a = pts[s];
        const Point& b = pts[s + 1];
        if (a.y == b.y) {
            if (a.y == y)
                throw DomainError("flat segment [" + a.x.str() + ", " + b.x.str() +
                                  "] at height " + y.str() + ": infinite preimage");
            continue;
        }
        const Rational& lo = a.y < b.y ? a.y : b.y;
        const Rational& hi = a.y < b.y ? b.y : a.y;
        if (y < lo || y > hi) continue;
        if (y == a.y) xs.push_back(a.x);
        else if (y == b.y) xs.push_back(b.x);
        else xs.push_back(a.x + (y - a.y) * ((b.x - a.x) / (b.y - a.y)));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::vector<Rational> kinks(const PLMap& m) {
    std::vector<Rational> out;
    const auto pts = m.breakpoints();
    for (std::size_t i = 1; i + 1 < pts.size(); ++i)
        if (!collinear(pts[i - 1], pts[i], pts[i + 1])) out.push_back(pts[i].x);
    return out;
}

Rational one_sided_slope(const PLMap& m, const Rational& x, Side side) {
    require_unit(x, "slope at x =");
    if (side == Side::left && x == kZero) throw DomainError("no left slope at x = 0");
    if (side == Side::right && x == kOne) throw DomainError("no right slope at x = 1");
    std::size_t i = m.segment_index(x);
    if (side == Side::left && m.breakpoints()[i].x == x) --i;
    return m.segment_slope(i);
}

PLMap simplify(const PLMap& m) {
    const auto pts = m.breakpoints();
    std::vector<Point> kept;
    kept.reserve(pts.size());
    for (const Point& p : pts) {
        if (kept.size() >= 2 && collinear(kept[kept.size() - 2], kept.back(), p))
            kept.back() = p;
        else
            kept.push_back(p);
    }
    return PLMap(std::move(kept));
}

std::vector<std::size_t> collinearity_defects(std::span<const Point> points) {
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i - 1].x == points[i].x)
            throw ValidationError("duplicate x = " + points[i].x.str() + " at index " +
                                  std::to_string(i));
        if (points[i].x < points[i - 1].x)
            throw ValidationError("points not sorted by x at index " + std::to_string(i));
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < points.size(); ++i)
        if (!collinear(points[i - 1], points[i], points[i + 1])) out.push_back(i);
    return out;
}

bool same_function(const PLMap& a, const PLMap& b) { return simplify(a) == simplify(b); }

} // namespace carcass
