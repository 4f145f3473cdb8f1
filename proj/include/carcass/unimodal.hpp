#pragma once

#include <optional>
#include <vector>

#include "carcass/pl_map.hpp"

namespace carcass {

// Piecewise-linear unimodal map: g(0) = g(1) = 0, g(v) = 1, strictly
// increasing on [0,v] and strictly decreasing on [v,1]. Stored simplified.
class CarcassMap {
public:
    const PLMap& map() const { return map_; }
    const Rational& peak() const { return peak_; }

    Rational operator()(const Rational& x) const { return eval(map_, x); }

    friend bool operator==(const CarcassMap&, const CarcassMap&) = default;

private:
    CarcassMap(PLMap m, Rational v) : map_(std::move(m)), peak_(std::move(v)) {}
    friend CarcassMap validate_carcass(const PLMap& m);

    PLMap map_;
    Rational peak_;
};

// Throws ValidationError naming the violated clause.
CarcassMap validate_carcass(const PLMap& m);

CarcassMap tent();

// g^n(x); n = 0 returns x.
Rational iterate(const CarcassMap& g, const Rational& x, unsigned n);

enum class Firmness { firm, unknown_within_bound };

struct FirmnessVerdict {
    Firmness status = Firmness::unknown_within_bound;
    std::optional<unsigned> n0;
    std::vector<Rational> kinks;
    // First n >= 1 with g^n(kink) = 0, aligned with `kinks`; empty when
    // not reached within the bound.
    std::vector<std::optional<unsigned>> hit_times;

    bool firm() const { return status == Firmness::firm; }
};

FirmnessVerdict firmness(const CarcassMap& g, unsigned n_max);

// The fixed point x0 in (v,1], found on the decreasing branch.
Rational positive_fixed_point(const CarcassMap& g);

// Right slope at 0.
Rational slope_at_zero(const CarcassMap& g);

// Smallest positive kink.
Rational first_kink(const CarcassMap& g);

} // namespace carcass
