#include <cmath>
#include <random>

#include "doctest.h"
#include "evidec/io.hpp"
#include "evidec/oracle.hpp"
#include "testutil.hpp"

using namespace evidec;

namespace {

std::string data_path(const char* name) {
    return std::string(EVIDEC_DATA_DIR) + "/" + name;
}

MassFunction wheel2() {
    return make_mass_function({1, 5, 10, 20}, {{{1}, 0.4},
                                               {{5}, 0.2},
                                               {{10}, 0.2},
                                               {{20}, 0.1},
                                               {{1, 5, 10, 20}, 0.1}});
}

}  // namespace

TEST_CASE("selection enumeration") {
    SUBCASE("wheel #2 has four selections") {
        auto selections = enumerate_selections(wheel2());
        REQUIRE(selections.size() == 4);
        std::vector<double> expectations;
        for (const auto& s : selections) expectations.push_back(s.expected_value);
        std::sort(expectations.begin(), expectations.end());
        // 5.4 + 0.1 * v for v in {1, 5, 10, 20}
        CHECK(expectations[0] == doctest::Approx(5.5).epsilon(1e-12));
        CHECK(expectations[1] == doctest::Approx(5.9).epsilon(1e-12));
        CHECK(expectations[2] == doctest::Approx(6.4).epsilon(1e-12));
        CHECK(expectations[3] == doctest::Approx(7.4).epsilon(1e-12));
    }
    SUBCASE("Bayesian mass function has exactly one") {
        MassFunction b = make_mass_function({1, 5}, {{{1}, 0.25}, {{5}, 0.75}});
        auto selections = enumerate_selections(b);
        REQUIRE(selections.size() == 1);
        CHECK(selections[0].expected_value == doctest::Approx(4.0));
    }
    SUBCASE("two focal pairs give four selections") {
        MassFunction m = make_mass_function({1, 2, 3, 4}, {{{1, 2}, 0.5}, {{3, 4}, 0.5}});
        CHECK(enumerate_selections(m).size() == 4);
    }
    SUBCASE("selection choices come from their focal elements") {
        std::mt19937_64 rng(3);
        MassFunction m = testutil::random_mass_function(rng);
        for (const auto& s : enumerate_selections(m)) {
            for (std::size_t i = 0; i < m.focals().size(); ++i) {
                const auto& elements = m.focals()[i].elements;
                CHECK(std::find(elements.begin(), elements.end(),
                                s.selection.choices[i]) != elements.end());
            }
        }
    }
    SUBCASE("guard trips on oversized enumerations") {
        std::vector<double> frame;
        for (int i = 0; i < 25; ++i) frame.push_back(i);
        std::vector<std::pair<std::vector<double>, double>> assignments;
        for (int i = 0; i < 7; ++i) {
            assignments.emplace_back(frame, 1.0 / 7.0);
        }
        // 7 identical focals merge; build distinct large focals instead.
        assignments.clear();
        for (int i = 0; i < 7; ++i) {
            std::vector<double> subset(frame.begin() + i, frame.begin() + i + 18);
            assignments.emplace_back(subset, 1.0 / 7.0);
        }
        MassFunction big = make_mass_function(frame, assignments);
        CHECK_THROWS_AS(enumerate_selections(big), Error);
    }
}

TEST_CASE("oracle EVI matches the analytic EVI exactly") {
    MassFunction m = wheel2();
    ExpectedValueInterval a = evi(m);
    ExpectedValueInterval o = oracle_evi(m);
    CHECK(o.lower == a.lower);
    CHECK(o.upper == a.upper);
    CHECK(a.lower == doctest::Approx(5.50).epsilon(1e-12));
    CHECK(a.upper == doctest::Approx(7.40).epsilon(1e-12));

    SUBCASE("vacuous") {
        MassFunction v = make_mass_function({1, 5, 10, 20}, {{{1, 5, 10, 20}, 1.0}});
        CHECK(oracle_evi(v).lower == 1.0);
        CHECK(oracle_evi(v).upper == 20.0);
    }
    SUBCASE("randomized instances, bit-exact, expectations inside the EVI") {
        std::mt19937_64 rng(20260826);
        for (int trial = 0; trial < 300; ++trial) {
            MassFunction r = testutil::random_mass_function(rng);
            ExpectedValueInterval analytic = evi(r);
            auto selections = enumerate_selections(r);
            ExpectedValueInterval enumerated = oracle_evi(r);
            CHECK(enumerated.lower == analytic.lower);
            CHECK(enumerated.upper == analytic.upper);
            for (const auto& s : selections) {
                CHECK(s.expected_value >= analytic.lower);
                CHECK(s.expected_value <= analytic.upper);
            }
        }
    }
}

TEST_CASE("nature simulation") {
    MassFunction m = wheel2();
    SUBCASE("deterministic given the seed") {
        SimulationReport a = simulate_nature(m, Rho(0.5), 10000, 7);
        SimulationReport b = simulate_nature(m, Rho(0.5), 10000, 7);
        CHECK(a.empirical_mean == b.empirical_mean);
        CHECK(a.standard_error == b.standard_error);
    }
    SUBCASE("converges to the interval endpoints") {
        SimulationReport lo = simulate_nature(m, Rho(0.0), 100000, 7);
        CHECK(std::abs(lo.empirical_mean - 5.50) <= 3.0 * lo.standard_error);
        SimulationReport hi = simulate_nature(m, Rho(1.0), 100000, 7);
        CHECK(std::abs(hi.empirical_mean - 7.40) <= 3.0 * hi.standard_error);
    }
    SUBCASE("Bayesian mass functions ignore rho") {
        MassFunction b =
            make_mass_function({1, 5, 10, 20}, {{{1}, 0.4}, {{5}, 0.3}, {{10}, 0.2}, {{20}, 0.1}});
        for (double rho : {0.0, 1.0}) {
            SimulationReport r = simulate_nature(b, Rho(rho), 100000, 11);
            CHECK(std::abs(r.empirical_mean - 5.90) <= 3.0 * r.standard_error);
        }
    }
    SUBCASE("standard error definition") {
        SimulationReport r = simulate_nature(m, Rho(0.5), 1000, 3);
        CHECK(r.samples == 1000);
        CHECK(r.seed == 3);
        CHECK(r.standard_error > 0.0);
    }
    SUBCASE("rejects zero samples") {
        CHECK_THROWS_AS(simulate_nature(m, Rho(0.5), 0, 1), Error);
    }
}

TEST_CASE("tree value by strategy enumeration") {
    SUBCASE("oil #1") {
        Problem p = load_problem(data_path("oil1.json"));
        CHECK(oracle_tree_value(p.tree, Rho(0.5)) == doctest::Approx(22500.0).epsilon(1e-9));
    }
    SUBCASE("oil #2 at rho = 0.5 over its 32 pure strategies") {
        Problem p = load_problem(data_path("oil2.json"));
        double oracle = oracle_tree_value(p.tree, Rho(0.5));
        CHECK(oracle == doctest::Approx(27500.0).epsilon(1e-9));
        CHECK(oracle == doctest::Approx(evaluate(p.tree, Rho(0.5)).root.scalar).epsilon(1e-12));
    }
    SUBCASE("single leaf") {
        CHECK(oracle_tree_value(make_leaf({10, 20}), Rho(0.25)) == doctest::Approx(12.5));
    }
    SUBCASE("randomized trees match backward induction") {
        std::mt19937_64 rng(20260826);
        for (int trial = 0; trial < 60; ++trial) {
            NodePtr tree = testutil::random_tree(rng);
            for (double rho : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                CHECK(oracle_tree_value(tree, Rho(rho)) ==
                      doctest::Approx(evaluate(tree, Rho(rho)).root.scalar).epsilon(1e-9));
            }
        }
    }
}
