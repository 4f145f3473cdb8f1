#include <doctest.h>

#include <set>

#include "carcass/errors.hpp"
#include "carcass/pl_map.hpp"
#include "support/oracles.hpp"

using namespace carcass;
using oracle::pl;
using oracle::R;

TEST_CASE("constructor validates the breakpoint list") {
    CHECK_THROWS_AS(PLMap({{0, 0}}), ValidationError);
    CHECK_THROWS_AS(pl({{"1/4", "0"}, {"1", "1"}}), ValidationError);
    CHECK_THROWS_AS(pl({{"0", "0"}, {"3/4", "1"}}), ValidationError);
    CHECK_THROWS_AS(pl({{"0", "0"}, {"1/2", "3/2"}, {"1", "0"}}), ValidationError);
    CHECK_THROWS_AS(pl({{"0", "0"}, {"1/2", "-1/2"}, {"1", "0"}}), ValidationError);
    CHECK_THROWS_AS(pl({{"0", "0"}, {"1/2", "1"}, {"1/2", "0"}, {"1", "0"}}), ValidationError);
    CHECK_THROWS_AS(pl({{"0", "0"}, {"2/3", "1"}, {"1/3", "0"}, {"1", "0"}}), ValidationError);
    CHECK_NOTHROW(pl({{"0", "1/2"}, {"1", "1/2"}}));
}

TEST_CASE("eval") {
    const PLMap tent = oracle::tent_map();
    CHECK(eval(tent, R("1/2")) == 1);
    CHECK(eval(tent, R("3/4")) == R("1/2"));
    CHECK(eval(tent, 0) == 0);
    CHECK(eval(tent, 1) == 0);
    CHECK(eval(oracle::h_a_map(), R("3/4")) == R("5/8"));
    CHECK_THROWS_AS(eval(tent, R("-1/8")), DomainError);
    CHECK_THROWS_AS(eval(tent, R("9/8")), DomainError);
}

TEST_CASE("segments") {
    const PLMap g = oracle::g_a_map();
    CHECK(g.segment_count() == 4);
    CHECK(g.segment_slope(0) == 2);
    CHECK(g.segment_slope(1) == 6);
    CHECK(g.segment_slope(2) == -2);
    CHECK(g.segment_slope(3) == R("-2/3"));
    CHECK(g.segment_index(0) == 0);
    CHECK(g.segment_index(R("1/8")) == 1);
    CHECK(g.segment_index(R("1/2")) == 2);
    CHECK(g.segment_index(1) == 3);
}

TEST_CASE("compose") {
    const PLMap tent = oracle::tent_map();
    CHECK(compose(PLMap::identity(), tent) == tent);
    CHECK(compose(tent, PLMap::identity()) == tent);

    const PLMap saw = compose(tent, tent);
    CHECK(kinks(saw) == std::vector<Rational>{R("1/4"), R("1/2"), R("3/4")});
    for (int k = 0; k <= 16; ++k) {
        const Rational x(k, 16);
        CHECK(eval(saw, x) == oracle::eval(tent, oracle::eval(tent, x)));
    }

    const PLMap h = oracle::h_a_map();
    CHECK(compose(compose(h, tent), invert_monotone(h)) == oracle::g_a_map());
}

TEST_CASE("invert_monotone") {
    const PLMap h = oracle::h_a_map();
    CHECK(invert_monotone(PLMap::identity()) == PLMap::identity());
    CHECK(invert_monotone(h) == pl({{"0", "0"}, {"1/4", "1/2"}, {"1", "1"}}));
    CHECK(invert_monotone(invert_monotone(h)) == h);
    CHECK_THROWS_AS(invert_monotone(oracle::tent_map()), ValidationError);
    CHECK_THROWS_AS(invert_monotone(pl({{"0", "0"}, {"1", "1/2"}})), ValidationError);
    CHECK_THROWS_AS(invert_monotone(pl({{"0", "0"}, {"1/2", "1/2"}, {"3/4", "1/2"}, {"1", "1"}})),
                    ValidationError);
}

TEST_CASE("preimage_points") {
    CHECK(preimage_points(oracle::tent_map(), 0) == std::vector<Rational>{0, 1});
    CHECK(preimage_points(oracle::tent_map(), 1) == std::vector<Rational>{R("1/2")});
    CHECK(preimage_points(oracle::g_a_map(), R("1/4")) == std::vector<Rational>{R("1/8"), R("5/8")});
    CHECK(preimage_points(oracle::tent_map(), R("1/2")) ==
          std::vector<Rational>{R("1/4"), R("3/4")});
    CHECK(preimage_points(oracle::g_b_map(), R("1/3")) == std::vector<Rational>{R("1/9"), R("7/9")});
    const PLMap flat = pl({{"0", "0"}, {"1/3", "1/2"}, {"2/3", "1/2"}, {"1", "1"}});
    CHECK_THROWS_AS(preimage_points(flat, R("1/2")), DomainError);
    CHECK(preimage_points(flat, R("1/4")) == std::vector<Rational>{R("1/6")});
    CHECK_THROWS_AS(preimage_points(oracle::tent_map(), R("3/2")), DomainError);
}

TEST_CASE("kinks") {
    CHECK(kinks(PLMap::identity()).empty());
    CHECK(kinks(oracle::tent_map()) == std::vector<Rational>{R("1/2")});
    CHECK(kinks(oracle::g_a_map()) == std::vector<Rational>{R("1/8"), R("1/4"), R("5/8")});
    // collinear breakpoints are not kinks
    CHECK(kinks(pl({{"0", "0"}, {"1/4", "1/4"}, {"1/2", "1/2"}, {"1", "0"}})) ==
          std::vector<Rational>{R("1/2")});
}

TEST_CASE("one_sided_slope") {
    CHECK(one_sided_slope(oracle::tent_map(), 0, Side::right) == 2);
    CHECK(one_sided_slope(oracle::g_a_map(), R("1/2"), Side::left) == -2);
    CHECK(one_sided_slope(oracle::g_a_map(), R("1/2"), Side::right) == -2);
    CHECK(one_sided_slope(oracle::g_b_map(), R("1/3"), Side::left) == 3);
    CHECK(one_sided_slope(oracle::g_b_map(), R("1/3"), Side::right) == R("-3/2"));
    CHECK_THROWS_AS(one_sided_slope(oracle::tent_map(), 0, Side::left), DomainError);
    CHECK_THROWS_AS(one_sided_slope(oracle::tent_map(), 1, Side::right), DomainError);
}

TEST_CASE("simplify") {
    CHECK(simplify(pl({{"0", "0"}, {"1/2", "1/2"}, {"1", "1"}})) == PLMap::identity());
    CHECK(simplify(oracle::tent_map()) == oracle::tent_map());
    CHECK(simplify(compose(oracle::tent_map(), PLMap::identity())) == oracle::tent_map());
    CHECK(simplify(pl({{"0", "1/2"}, {"1/3", "1/2"}, {"2/3", "1/2"}, {"1", "1/2"}})) ==
          pl({{"0", "1/2"}, {"1", "1/2"}}));
    CHECK(same_function(pl({{"0", "0"}, {"1/2", "1/2"}, {"1", "1"}}), PLMap::identity()));
    CHECK_FALSE(same_function(oracle::tent_map(), PLMap::identity()));
}

TEST_CASE("collinearity_defects") {
    const std::vector<Point> line{{0, 0}, {R("1/3"), R("1/6")}, {1, R("1/2")}};
    CHECK(collinearity_defects(line).empty());
    const std::vector<Point> tent_samples{{R("1/4"), R("1/2")}, {R("1/2"), 1}, {R("3/4"), R("1/2")}};
    CHECK(collinearity_defects(tent_samples) == std::vector<std::size_t>{1});
    const std::vector<Point> psi3{
        {R("1/27"), R("7/27")}, {R("3/27"), R("21/27")}, {R("7/27"), R("25/27")}};
    CHECK(collinearity_defects(psi3) == std::vector<std::size_t>{1});
    const std::vector<Point> dup{{0, 0}, {0, 1}, {1, 1}};
    CHECK_THROWS_AS(collinearity_defects(dup), ValidationError);
}

TEST_CASE("property: composition agrees with pointwise evaluation") {
    oracle::Corpus c(1);
    for (int i = 0; i < 60; ++i) {
        const PLMap a = c.map(), b = c.map();
        const PLMap ab = compose(a, b);
        for (int j = 0; j < 200; ++j) {
            const Rational x = c.unit();
            REQUIRE(eval(ab, x) == oracle::eval(a, oracle::eval(b, x)));
        }
    }
}

TEST_CASE("property: inverse round trip") {
    oracle::Corpus c(2);
    for (int i = 0; i < 60; ++i) {
        const PLMap h = c.homeomorphism();
        CHECK(compose(h, invert_monotone(h)) == PLMap::identity());
        CHECK(compose(invert_monotone(h), h) == PLMap::identity());
        CHECK(invert_monotone(invert_monotone(h)) == h);
    }
}

TEST_CASE("property: image of a linear piece scales by the slope") {
    oracle::Corpus c(3);
    for (int i = 0; i < 60; ++i) {
        const PLMap m = c.map();
        const auto bp = m.breakpoints();
        for (std::size_t s = 0; s + 1 < bp.size(); ++s) {
            const Rational a = bp[s].x + (bp[s + 1].x - bp[s].x) * c.unit();
            const Rational b = a + (bp[s + 1].x - a) * c.unit();
            CHECK(abs(eval(m, b) - eval(m, a)) == abs(m.segment_slope(s)) * (b - a));
        }
    }
}

TEST_CASE("property: simplify preserves values at breakpoints and midpoints") {
    oracle::Corpus c(4);
    for (int i = 0; i < 60; ++i) {
        const PLMap m = c.map();
        const PLMap s = simplify(m);
        CHECK(collinearity_defects(s.breakpoints()).size() == s.size() - 2);
        const auto bp = m.breakpoints();
        for (std::size_t j = 0; j < bp.size(); ++j) {
            CHECK(eval(s, bp[j].x) == bp[j].y);
            if (j + 1 < bp.size()) {
                const Rational mid = (bp[j].x + bp[j + 1].x) / 2;
                CHECK(eval(s, mid) == oracle::eval(m, mid));
            }
        }
    }
}

TEST_CASE("property: kinks of a composition come from the inner kinks or outer-kink preimages") {
    oracle::Corpus c(5);
    for (int i = 0; i < 60; ++i) {
        const PLMap a = simplify(c.map()), b = simplify(c.map());
        std::set<Rational> allowed;
        for (const auto& k : kinks(b)) allowed.insert(k);
        bool flat = false;
        for (const auto& k : kinks(a)) {
            try {
                for (const auto& x : preimage_points(b, k)) allowed.insert(x);
            } catch (const DomainError&) {
                flat = true;
            }
        }
        if (flat) continue;
        for (const auto& k : kinks(compose(a, b))) CHECK(allowed.count(k) == 1);
    }
}

TEST_CASE("property: preimage_points matches the segment solver") {
    oracle::Corpus c(6);
    for (int i = 0; i < 60; ++i) {
        const PLMap m = c.map();
        const Rational y = c.unit();
        std::vector<Rational> expected;
        try {
            expected = oracle::solve(oracle::points(m), y);
        } catch (const std::logic_error&) {
            CHECK_THROWS_AS(preimage_points(m, y), DomainError);
            continue;
        }
        CHECK(preimage_points(m, y) == expected);
    }
}
