#include <random>

#include "doctest.h"
#include "evidec/expectation.hpp"
#include "testutil.hpp"

using namespace evidec;

namespace {

MassFunction wheel2() {
    return make_mass_function({1, 5, 10, 20}, {{{1}, 0.4},
                                               {{5}, 0.2},
                                               {{10}, 0.2},
                                               {{20}, 0.1},
                                               {{1, 5, 10, 20}, 0.1}});
}

MassFunction wheel1() {
    return make_mass_function({1, 5, 10, 20}, {{{1}, 0.4}, {{5}, 0.3}, {{10}, 0.2}, {{20}, 0.1}});
}

}  // namespace

TEST_CASE("probabilistic expectation") {
    PointDistribution w1(Frame({1, 5, 10, 20}), {0.4, 0.3, 0.2, 0.1});
    CHECK(probabilistic_expect(w1) == doctest::Approx(5.90).epsilon(1e-12));

    PointDistribution point(Frame({3, 8}), {0.0, 1.0});
    CHECK(probabilistic_expect(point) == doctest::Approx(8.0));

    PointDistribution uniform(Frame({1, 20}), {0.5, 0.5});
    CHECK(probabilistic_expect(uniform) == doctest::Approx(10.5));
}

TEST_CASE("expected value interval") {
    ExpectedValueInterval e = evi(wheel2());
    CHECK(e.lower == doctest::Approx(5.50).epsilon(1e-12));
    CHECK(e.upper == doctest::Approx(7.40).epsilon(1e-12));

    ExpectedValueInterval bayesian = evi(wheel1());
    CHECK(bayesian.lower == doctest::Approx(5.90).epsilon(1e-12));
    CHECK(bayesian.upper == bayesian.lower);

    MassFunction vacuous = make_mass_function({1, 5, 10, 20}, {{{1, 5, 10, 20}, 1.0}});
    CHECK(evi(vacuous).lower == 1.0);
    CHECK(evi(vacuous).upper == 20.0);
}

TEST_CASE("rho interpolation") {
    ExpectedValueInterval e{5.50, 7.40};
    CHECK(rho_expect(e, Rho(0.0)) == 5.50);
    for (double rho : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        CHECK(rho_expect(e, Rho(rho)) == doctest::Approx(5.50 + 1.90 * rho).epsilon(1e-12));
    }
    CHECK(rho_expect({7.0, 7.0}, Rho(0.3)) == doctest::Approx(7.0));
    CHECK_THROWS_AS(Rho(1.5), Error);
    CHECK_THROWS_AS(Rho(-0.1), Error);
}

TEST_CASE("per-source rho") {
    SUBCASE("constant map reduces to the interval interpolation") {
        MassFunction m = wheel2();
        for (double rho : {0.0, 0.3, 1.0}) {
            CHECK(rho_expect_per_source(m, RhoMap(rho)) ==
                  doctest::Approx(rho_expect(evi(m), Rho(rho))).epsilon(1e-12));
        }
    }
    SUBCASE("all-zero map gives the lower bound") {
        std::mt19937_64 rng(11);
        MassFunction m = testutil::random_mass_function(rng);
        CHECK(rho_expect_per_source(m, RhoMap(0.0)) == doctest::Approx(evi(m).lower));
    }
    SUBCASE("two sources with opposite attitudes") {
        MassFunction m = make_mass_function({1, 5, 10, 20}, {{{1, 10}, 0.5}, {{5, 20}, 0.5}});
        RhoMap rhos;
        rhos.set({1, 10}, 1.0);
        rhos.set({5, 20}, 0.0);
        CHECK(rho_expect_per_source(m, rhos) == doctest::Approx(7.5));
    }
    SUBCASE("missing rho for a non-singleton focal element") {
        MassFunction m = wheel2();
        RhoMap rhos;
        rhos.set({1}, 0.5);  // singletons never need one
        CHECK_THROWS_AS(rho_expect_per_source(m, rhos), Error);
    }
}

TEST_CASE("induced distribution") {
    SUBCASE("matches the closed form for Wheel #2") {
        MassFunction m = wheel2();
        for (double rho : {0.0, 0.25, 0.5, 1.0}) {
            PointDistribution p = induced_distribution(m, Rho(rho));
            CHECK(p.probabilities[0] == doctest::Approx(0.5 - 0.1 * rho).epsilon(1e-12));
            CHECK(p.probabilities[1] == doctest::Approx(0.2).epsilon(1e-12));
            CHECK(p.probabilities[2] == doctest::Approx(0.2).epsilon(1e-12));
            CHECK(p.probabilities[3] == doctest::Approx(0.1 + 0.1 * rho).epsilon(1e-12));
        }
    }
    SUBCASE("Bayesian mass functions are fixed points") {
        MassFunction m = wheel1();
        PointDistribution p = induced_distribution(m, Rho(0.7));
        CHECK(p.probabilities == std::vector<double>{0.4, 0.3, 0.2, 0.1});
    }
    SUBCASE("vacuous at rho=1 concentrates on the maximum") {
        MassFunction v = make_mass_function({1, 5, 10, 20}, {{{1, 5, 10, 20}, 1.0}});
        PointDistribution p = induced_distribution(v, Rho(1.0));
        CHECK(p.probabilities == std::vector<double>{0.0, 0.0, 0.0, 1.0});
    }
    SUBCASE("theorem: induced expectation equals the interpolated interval") {
        std::mt19937_64 rng(20260826);
        std::uniform_real_distribution<double> rho_dist(0.0, 1.0);
        for (int trial = 0; trial < 300; ++trial) {
            MassFunction m = testutil::random_mass_function(rng);
            double rho = rho_dist(rng);
            double via_distribution = probabilistic_expect(induced_distribution(m, Rho(rho)));
            double via_interval = rho_expect(evi(m), Rho(rho));
            CHECK(via_distribution == doctest::Approx(via_interval).epsilon(1e-9));
        }
    }
}

TEST_CASE("pignistic and proportional transforms") {
    MassFunction m = wheel2();
    CHECK(pignistic_expect(m) == doctest::Approx(6.30).epsilon(1e-12));
    CHECK(proportional_expect(m) == doctest::Approx(6.00).epsilon(1e-12));

    SUBCASE("Bayesian mass functions are unchanged") {
        MassFunction b = wheel1();
        CHECK(pignistic_expect(b) == doctest::Approx(5.90).epsilon(1e-12));
        CHECK(proportional_expect(b) == doctest::Approx(5.90).epsilon(1e-12));
    }
    SUBCASE("vacuous over five values") {
        MassFunction v = make_mass_function({1, 2, 5, 10, 20}, {{{1, 2, 5, 10, 20}, 1.0}});
        CHECK(pignistic_expect(v) == doctest::Approx(7.60).epsilon(1e-12));
        CHECK_THROWS_AS(proportional_expect(v), Error);
    }
    SUBCASE("both transforms stay inside the EVI") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 200; ++trial) {
            MassFunction r = testutil::random_mass_function(rng);
            ExpectedValueInterval e = evi(r);
            double pig = pignistic_expect(r);
            CHECK(pig >= e.lower - 1e-9);
            CHECK(pig <= e.upper + 1e-9);
            try {
                double prop = proportional_expect(r);
                CHECK(prop >= e.lower - 1e-9);
                CHECK(prop <= e.upper + 1e-9);
            } catch (const Error& err) {
                // Focal elements without singleton support have no base.
                CHECK(err.code() == ErrorCode::NoSingletonMass);
            }
        }
    }
}

TEST_CASE("frame augmentation leaves the EVI alone inside focal bounds") {
    // Extra values strictly between a focal element's min and max change
    // nothing; values outside move the corresponding bound.
    MassFunction four = make_mass_function({1, 5, 10, 20}, {{{1, 5, 10, 20}, 1.0}});
    MassFunction five = make_mass_function({1, 2, 5, 10, 20}, {{{1, 2, 5, 10, 20}, 1.0}});
    for (double rho : {0.0, 0.2, 0.5, 0.9, 1.0}) {
        CHECK(rho_expect(evi(four), Rho(rho)) == doctest::Approx(1 + 19 * rho).epsilon(1e-12));
        CHECK(rho_expect(evi(five), Rho(rho)) == doctest::Approx(1 + 19 * rho).epsilon(1e-12));
    }
    MassFunction with50 = make_mass_function({1, 5, 10, 20, 50}, {{{1, 5, 10, 20, 50}, 1.0}});
    for (double rho : {0.0, 0.5, 1.0}) {
        CHECK(rho_expect(evi(with50), Rho(rho)) == doctest::Approx(1 + 49 * rho).epsilon(1e-12));
    }
}

TEST_CASE("Lesh EEB and EEV") {
    MassFunction m = wheel2();
    SUBCASE("zero-width interval collapses to the probability") {
        MassFunction b = wheel1();
        for (double tau : {0.0, 0.5, 1.0}) {
            CHECK(lesh_eeb(b, {5}, tau) == doctest::Approx(0.3).epsilon(1e-12));
        }
    }
    CHECK(lesh_eeb(m, {1}, 0.0) == doctest::Approx(0.45).epsilon(1e-12));
    CHECK(lesh_eeb(m, {1}, 1.0) == doctest::Approx(0.455).epsilon(1e-12));

    // Frozen from the singleton belief intervals [0.4,0.5], [0.2,0.3],
    // [0.2,0.3], [0.1,0.2]: 1*0.45 + 5*0.25 + 10*0.25 + 20*0.15 = 7.20,
    // plus sum(a) * 0.1^2 / 2 = 0.18 at tau = 1.
    CHECK(lesh_eev(m, 0.0) == doctest::Approx(7.20).epsilon(1e-12));
    CHECK(lesh_eev(m, 1.0) == doctest::Approx(7.38).epsilon(1e-12));
    CHECK(lesh_eev(wheel1(), 0.0) == doctest::Approx(5.90).epsilon(1e-12));
}

TEST_CASE("rho_expect is monotone and stays inside the interval") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        MassFunction m = testutil::random_mass_function(rng);
        ExpectedValueInterval e = evi(m);
        double previous = e.lower - 1e-12;
        for (int i = 0; i <= 10; ++i) {
            double rho = i / 10.0;
            double value = rho_expect(e, Rho(rho));
            CHECK(value >= e.lower - 1e-9);
            CHECK(value <= e.upper + 1e-9);
            CHECK(value >= previous - 1e-12);
            previous = value;
        }
    }
}
