#pragma once

#include <optional>
#include <string>
#include <vector>

#include "carcass/lattice.hpp"

namespace carcass {

// h o base o h^{-1}, validated, with h o base = g o h checked exactly.
CarcassMap conjugate_by(const PLMap& h, const CarcassMap& base);

// h o g1 == g2 o h as canonical maps.
bool verify_conjugacy(const PLMap& h, const CarcassMap& g1, const CarcassMap& g2);

// Interpolant through (mu(n,k)(g1), mu(n,k)(g2)), simplified.
PLMap lattice_conjugacy(const CarcassMap& g1, const CarcassMap& g2, unsigned n,
                        std::size_t max_points = kDefaultMaxLatticePoints);

// Entry n-2 is max over level-(n+1) nodes of |h_n - h_{n+1}|, n = 2..depth-1.
std::vector<Rational> conjugacy_convergence_profile(const CarcassMap& g1, const CarcassMap& g2,
                                                    unsigned depth,
                                                    std::size_t max_points = kDefaultMaxLatticePoints);

// Necessary conditions for a piecewise-linear conjugacy with the tent map:
// g'(0) = 2 and g'(x0-) * g'(x0+) = 4 at the positive fixed point x0.
struct NecessaryConditions {
    Rational slope_at_zero;
    Rational fixed_point;
    Rational left_slope;
    Rational right_slope;
    Rational product;
    bool pass = false;
    std::string failed; // empty when pass
};

NecessaryConditions pl_conjugacy_necessary(const CarcassMap& g);

enum class PLVerdict { pl, not_pl, inconclusive };

const char* to_string(PLVerdict v);

struct PLConjugacyVerdict {
    PLVerdict verdict = PLVerdict::inconclusive;
    std::optional<Rational> tangent;  // w, present iff pl
    Rational threshold;               // r = g(first positive kink)
    std::string failed_condition;     // present iff not-pl
    std::string detail;
    std::size_t nodes_checked = 0;
    NecessaryConditions necessary;
};

// Tests mu(n,k) = w k / 2^{n-1} on every lattice node at or below r, with
// w = 2^{depth-1} mu(depth,1).
PLConjugacyVerdict pl_conjugacy_detect(const CarcassMap& g, unsigned depth,
                                       std::size_t max_points = kDefaultMaxLatticePoints);

} // namespace carcass
