#pragma once

// Reference maps, a seeded random corpus and brute-force oracles shared by
// the unit tests and the acceptance runner. The oracles deliberately avoid
// the library's own search and composition routines.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "carcass/conjugacy.hpp"
#include "carcass/lattice.hpp"
#include "carcass/pl_map.hpp"
#include "carcass/rational.hpp"
#include "carcass/semiconj.hpp"
#include "carcass/unimodal.hpp"

namespace oracle {

using carcass::CarcassMap;
using carcass::PLMap;
using carcass::Point;
using carcass::Rational;

inline Rational R(const char* s) { return Rational::parse(s); }

inline PLMap pl(std::initializer_list<std::pair<const char*, const char*>> pts) {
    std::vector<Point> v;
    for (const auto& [x, y] : pts) v.push_back({R(x), R(y)});
    return PLMap(std::move(v));
}

// Reference maps, by content.
inline PLMap tent_map() { return pl({{"0", "0"}, {"1/2", "1"}, {"1", "0"}}); }
inline PLMap g_a_map() {
    return pl({{"0", "0"}, {"1/8", "1/4"}, {"1/4", "1"}, {"5/8", "1/4"}, {"1", "0"}});
}
inline PLMap g_b_map() { return pl({{"0", "0"}, {"1/3", "1"}, {"1", "0"}}); }
inline PLMap h_a_map() { return pl({{"0", "0"}, {"1/2", "1/4"}, {"1", "1"}}); }

inline CarcassMap g_a() { return carcass::validate_carcass(g_a_map()); }
inline CarcassMap g_b() { return carcass::validate_carcass(g_b_map()); }

// Linear scan evaluation.
inline Rational eval(const std::vector<Point>& pts, const Rational& x) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i].x <= x && x <= pts[i + 1].x)
            return pts[i].y + (pts[i + 1].y - pts[i].y) * (x - pts[i].x) / (pts[i + 1].x - pts[i].x);
    }
    throw std::out_of_range("oracle::eval outside domain");
}

inline std::vector<Point> points(const PLMap& m) { return {m.breakpoints().begin(), m.breakpoints().end()}; }

inline Rational eval(const PLMap& m, const Rational& x) { return eval(points(m), x); }

// Zig-zag by the floor formula: with m = floor(t x) and r = t x - m,
// xi_t(x) = r for m even and 1 - r for m odd.
inline Rational xi(unsigned t, const Rational& x) {
    const Rational tx = Rational(t) * x;
    mpz_class m;
    mpz_fdiv_q(m.get_mpz_t(), tx.numerator().get_mpz_t(), tx.denominator().get_mpz_t());
    const Rational r = tx - Rational(mpq_class(m));
    return mpz_even_p(m.get_mpz_t()) ? r : Rational(1) - r;
}

// Every x with m(x) = y, by solving each segment directly.
inline std::vector<Rational> solve(const std::vector<Point>& pts, const Rational& y) {
    std::set<Rational> out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Point& a = pts[i];
        const Point& b = pts[i + 1];
        const Rational lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
        if (y < lo || y > hi) continue;
        if (a.y == b.y) throw std::logic_error("flat segment");
        out.insert(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    return {out.begin(), out.end()};
}

// g^{-n}(0), grown one preimage step at a time from {0}.
inline std::vector<Rational> preimage_level(const PLMap& g, unsigned n) {
    const auto pts = points(g);
    std::set<Rational> cur{Rational(0)};
    for (unsigned i = 0; i < n; ++i) {
        std::set<Rational> next;
        for (const auto& y : cur)
            for (auto& x : solve(pts, y)) next.insert(x);
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

// Interior points whose neighbours are not collinear with them.
inline std::size_t defect_count(const std::vector<Point>& p) {
    std::size_t c = 0;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        const Rational cross =
            (p[i].x - p[i - 1].x) * (p[i + 1].y - p[i].y) - (p[i].y - p[i - 1].y) * (p[i + 1].x - p[i].x);
        if (!cross.is_zero()) ++c;
    }
    return c;
}

// Seeded corpus generator.
class Corpus {
public:
    explicit Corpus(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }

    // Distinct sorted rationals strictly inside (0,1), denominators <= 64.
    std::vector<Rational> interior(std::size_t count) {
        std::set<Rational> s;
        while (s.size() < count) {
            const auto q = static_cast<std::int64_t>(uniform(2, 64));
            const auto p = static_cast<std::int64_t>(uniform(1, static_cast<std::uint64_t>(q - 1)));
            s.insert(Rational(p, q));
        }
        return {s.begin(), s.end()};
    }

    // Strictly increasing PL homeomorphism of [0,1] with 1..6 kinks.
    PLMap homeomorphism() {
        for (;;) {
            const std::size_t k = uniform(1, 6);
            const auto xs = interior(k);
            const auto ys = interior(k);
            std::vector<Point> pts{{0, 0}};
            for (std::size_t i = 0; i < k; ++i) pts.push_back({xs[i], ys[i]});
            pts.push_back({1, 1});
            PLMap h(std::move(pts));
            if (!carcass::kinks(h).empty()) return h;
        }
    }

    // Any PL self-map with 1..8 segments and ordinates in [0,1].
    PLMap map() {
        const std::size_t k = uniform(0, 7);
        const auto xs = interior(k);
        std::vector<Point> pts;
        pts.push_back({0, ordinate()});
        for (const auto& x : xs) pts.push_back({x, ordinate()});
        pts.push_back({1, ordinate()});
        return PLMap(std::move(pts));
    }

    Rational ordinate() {
        const auto q = static_cast<std::int64_t>(uniform(1, 64));
        return Rational(static_cast<std::int64_t>(uniform(0, static_cast<std::uint64_t>(q))), q);
    }

    Rational unit() { return ordinate(); }

private:
    std::mt19937_64 rng_;
};

inline constexpr std::uint64_t kCorpusSeed = 20261016;
inline constexpr std::size_t kCorpusSize = 50;

inline std::vector<PLMap> homeomorphism_corpus(std::size_t n = kCorpusSize) {
    Corpus c(kCorpusSeed);
    std::vector<PLMap> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(c.homeomorphism());
    return out;
}

} // namespace oracle
