#include <doctest.h>

#include "carcass/conjugacy.hpp"
#include "carcass/errors.hpp"
#include "support/oracles.hpp"

using namespace carcass;
using oracle::pl;
using oracle::R;

TEST_CASE("conjugate_by") {
    CHECK(conjugate_by(PLMap::identity(), tent()) == tent());
    CHECK(conjugate_by(oracle::h_a_map(), tent()).map() == oracle::g_a_map());
    CHECK_THROWS_AS(conjugate_by(oracle::tent_map(), tent()), ValidationError);
    for (const auto& h : oracle::homeomorphism_corpus(20))
        CHECK(slope_at_zero(conjugate_by(h, tent())) == 2);
}

TEST_CASE("verify_conjugacy") {
    CHECK(verify_conjugacy(PLMap::identity(), tent(), tent()));
    CHECK(verify_conjugacy(oracle::h_a_map(), tent(), oracle::g_a()));
    CHECK_FALSE(verify_conjugacy(oracle::h_a_map(), tent(), oracle::g_b()));
    CHECK_FALSE(verify_conjugacy(PLMap::identity(), tent(), oracle::g_a()));
}

TEST_CASE("lattice_conjugacy") {
    for (unsigned n = 1; n <= 6; ++n) CHECK(lattice_conjugacy(tent(), tent(), n) == PLMap::identity());
    CHECK(lattice_conjugacy(tent(), oracle::g_a(), 2) == oracle::h_a_map());
    for (unsigned n = 3; n <= 7; ++n) CHECK(lattice_conjugacy(tent(), oracle::g_a(), n) == oracle::h_a_map());
    CHECK(lattice_conjugacy(tent(), oracle::g_b(), 3) ==
          pl({{"0", "0"}, {"1/4", "1/9"}, {"1/2", "1/3"}, {"3/4", "7/9"}, {"1", "1"}}));
}

TEST_CASE("conjugacy_convergence_profile") {
    for (const auto& r : conjugacy_convergence_profile(tent(), tent(), 8)) CHECK(r == 0);
    const auto a = conjugacy_convergence_profile(tent(), oracle::g_a(), 8);
    CHECK(a.size() == 6);
    for (const auto& r : a) CHECK(r == 0);
    const auto b = conjugacy_convergence_profile(tent(), oracle::g_b(), 8);
    CHECK(b.size() == 6);
    for (const auto& r : b) CHECK(r > 0);
    CHECK(conjugacy_convergence_profile(tent(), oracle::g_b(), 2).empty());
    CHECK_THROWS_AS(conjugacy_convergence_profile(tent(), oracle::g_b(), 1), DomainError);

    // h_3 and h_4 differ at 1/8, a fresh level-4 node
    const PLMap h3 = lattice_conjugacy(tent(), oracle::g_b(), 3);
    const PLMap h4 = lattice_conjugacy(tent(), oracle::g_b(), 4);
    CHECK(eval(h3, R("1/8")) == R("1/18"));
    CHECK(eval(h4, R("1/8")) == R("1/27"));
}

TEST_CASE("pl_conjugacy_necessary") {
    const auto t = pl_conjugacy_necessary(tent());
    CHECK(t.pass);
    CHECK(t.product == 4);
    CHECK(t.fixed_point == R("2/3"));
    const auto a = pl_conjugacy_necessary(oracle::g_a());
    CHECK(a.pass);
    CHECK(a.fixed_point == R("1/2"));
    CHECK(a.left_slope == -2);
    CHECK(a.right_slope == -2);
    const auto b = pl_conjugacy_necessary(oracle::g_b());
    CHECK_FALSE(b.pass);
    CHECK(b.slope_at_zero == 3);
    CHECK(b.failed == "g'(0) = 3 != 2");

    // slope 2 at 0, but the product at the fixed point is not 4
    const auto c = validate_carcass(pl({{"0", "0"}, {"1/4", "1/2"}, {"1/2", "1"}, {"3/4", "3/4"}, {"1", "0"}}));
    const auto nc = pl_conjugacy_necessary(c);
    CHECK_FALSE(nc.pass);
    CHECK(nc.fixed_point == R("3/4"));
    CHECK(nc.product == 3);
}

TEST_CASE("pl_conjugacy_detect") {
    const auto t = pl_conjugacy_detect(tent(), 8);
    CHECK(t.verdict == PLVerdict::pl);
    CHECK(t.tangent == Rational(1));
    CHECK(t.threshold == 1);

    const auto a = pl_conjugacy_detect(oracle::g_a(), 8);
    CHECK(a.verdict == PLVerdict::pl);
    CHECK(a.tangent == R("1/2"));
    CHECK(a.threshold == R("1/4"));

    const auto b = pl_conjugacy_detect(oracle::g_b(), 8);
    CHECK(b.verdict == PLVerdict::not_pl);
    CHECK(b.failed_condition == "g'(0) = 3 != 2");
    CHECK_FALSE(b.tangent.has_value());

    CHECK_THROWS_AS(pl_conjugacy_detect(tent(), 2), DomainError);
    CHECK(std::string(to_string(PLVerdict::not_pl)) == "not-pl");
}

TEST_CASE("property: conjugates of the tent map") {
    for (const auto& h : oracle::homeomorphism_corpus()) {
        const CarcassMap g = conjugate_by(h, tent());
        CHECK(verify_conjugacy(h, tent(), g));
        CHECK(pl_conjugacy_necessary(g).pass);

        const PLMap hn = lattice_conjugacy(tent(), g, 6);
        const auto bp = hn.breakpoints();
        CHECK(bp.front() == Point{0, 0});
        CHECK(bp.back() == Point{1, 1});
        for (std::size_t i = 0; i < hn.segment_count(); ++i) CHECK(hn.segment_slope(i) > 0);

        const auto v = pl_conjugacy_detect(g, 10);
        CHECK(v.verdict == PLVerdict::pl);
        CHECK(v.tangent == h.segment_slope(0));
    }
}
