#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "carcass/rational.hpp"

namespace carcass {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class Side { left, right };

// Continuous piecewise-linear function on [0,1], given by its breakpoints.
// Abscissae are strictly increasing from 0 to 1 and every ordinate lies in
// [0,1]; the function is the linear interpolant between consecutive
// breakpoints. Operations that build new maps return them simplified.
class PLMap {
public:
    // Validates the breakpoint list; does not simplify.
    explicit PLMap(std::vector<Point> breakpoints);

    static PLMap identity();

    std::span<const Point> breakpoints() const { return points_; }
    std::size_t size() const { return points_.size(); }
    std::size_t segment_count() const { return points_.size() - 1; }

    // Slope of segment i, i.e. between breakpoints i and i+1.
    Rational segment_slope(std::size_t i) const;

    // Index of the segment containing x; for a breakpoint the segment to
    // its right (the last segment for x = 1).
    std::size_t segment_index(const Rational& x) const;

    friend bool operator==(const PLMap&, const PLMap&) = default;

private:
    std::vector<Point> points_;
};

Rational eval(const PLMap& m, const Rational& x);

// outer o inner, simplified.
PLMap compose(const PLMap& outer, const PLMap& inner);

// Inverse of a strictly increasing map with m(0)=0, m(1)=1.
PLMap invert_monotone(const PLMap& m);

// All x with m(x) = y, ascending. Throws if a segment is constant at y.
std::vector<Rational> preimage_points(const PLMap& m, const Rational& y);

// Interior abscissae where the left and right slopes differ.
std::vector<Rational> kinks(const PLMap& m);

Rational one_sided_slope(const PLMap& m, const Rational& x, Side side);

PLMap simplify(const PLMap& m);

// Indices i (interior) where points i-1, i, i+1 are not collinear.
// Points must have strictly increasing x.
std::vector<std::size_t> collinearity_defects(std::span<const Point> points);

// Exact equality of the canonical (simplified) forms.
bool same_function(const PLMap& a, const PLMap& b);

} // namespace carcass
