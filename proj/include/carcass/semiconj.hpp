#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "carcass/conjugacy.hpp"

namespace carcass {

enum class SolutionKind { exact_pl, lattice_sampled };

// A self-semiconjugation psi (psi o g = g o psi) with tangent index t,
// either as an exact map or as its values on one lattice level.
struct SemiconjSolution {
    SolutionKind kind = SolutionKind::exact_pl;
    unsigned t = 1;
    std::optional<PLMap> body;  // exact_pl
    unsigned level = 0;         // lattice_sampled
    std::vector<Point> points;  // lattice_sampled
};

// t-tooth zig-zag: breakpoints (k/t, k mod 2).
PLMap xi(unsigned t);

bool verify_commutation(const PLMap& psi, const CarcassMap& g);

// h o xi_t o h^{-1}, checked to commute with conjugate_by(h, tent()).
SemiconjSolution psi_exact(const PLMap& h, unsigned t);

// [0, x0]; each verified to be a fixed point of g.
std::vector<Rational> constant_solutions(const CarcassMap& g);

// j with xi_t(k / 2^{n-1}) = j / 2^{n-1}.
std::uint64_t dyadic_index_map(unsigned t, unsigned n, std::uint64_t k);

// Points (mu(n,k), mu(n, dyadic_index_map(t,n,k))) for k = 0..2^{n-1}.
SemiconjSolution psi_lattice(const CarcassMap& g, unsigned t, unsigned n,
                             std::size_t max_points = kDefaultMaxLatticePoints);
SemiconjSolution psi_lattice(const PreimageLattice& L, unsigned t, unsigned n);

// mu(n,t) / mu(n,1).
Rational tangent_estimate(const CarcassMap& g, unsigned t, unsigned n,
                          std::size_t max_points = kDefaultMaxLatticePoints);

struct FirstKinkCheck {
    bool pass = false;
    Rational g_kink;       // a, first positive kink of g
    Rational g_slope;      // g'(0)
    Rational psi_slope;    // psi'(0)
    Rational predicted;    // a g'(0) / psi'(0)
    std::optional<Rational> actual; // first positive kink of psi, if any
};

// Requires psi'(0) > g'(0); throws ValidationError otherwise.
FirstKinkCheck first_kink_check(const CarcassMap& g, const SemiconjSolution& psi);

enum class NonlinearityVerdict { pl_consistent, non_pl_evidence };

const char* to_string(NonlinearityVerdict v);

struct NonlinearityProfile {
    unsigned t = 0;
    unsigned n_min = 0;
    std::vector<std::size_t> defects; // c_n for n = n_min..n_max
    NonlinearityVerdict verdict = NonlinearityVerdict::pl_consistent;
};

// non-pl-evidence iff the defect counts strictly increase over the last
// three levels. A heuristic, not a proof.
NonlinearityProfile nonlinearity_evidence(const CarcassMap& g, unsigned t, unsigned n_min,
                                          unsigned n_max,
                                          std::size_t max_points = kDefaultMaxLatticePoints);

enum class Lemma35Status {
    pass,
    fail,
    not_applicable_not_firm,
    not_applicable_power_of_two,
    not_applicable_hypothesis,
};

const char* to_string(Lemma35Status s);

struct Lemma35Result {
    Lemma35Status status = Lemma35Status::not_applicable_hypothesis;
    unsigned t = 0;
    std::optional<unsigned> n0;
    std::size_t collinear_nodes = 0;       // initial run through the origin, incl. 0
    std::optional<Rational> slope;         // of that run
    std::optional<Rational> threshold;     // a: largest image value on the run
    std::map<std::uint64_t, Rational> delta_table;
    std::string detail;
};

inline constexpr unsigned kDefaultFirmnessBound = 32;

Lemma35Result lemma_3_5_check(const CarcassMap& g, unsigned t, unsigned depth,
                              unsigned firmness_bound = kDefaultFirmnessBound,
                              std::size_t max_points = kDefaultMaxLatticePoints);

bool is_power_of_two(unsigned t);

} // namespace carcass
