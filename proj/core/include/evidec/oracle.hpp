#pragma once

#include <cstdint>
#include <vector>

#include "evidec/decision_tree.hpp"
#include "evidec/expectation.hpp"

namespace evidec {

/// One concrete outcome picked from each focal element.
struct SelectionFunction {
    std::vector<double> choices;  // aligned with MassFunction::focals()
};

struct Selection {
    SelectionFunction selection;
    PointDistribution distribution;
    double expected_value = 0.0;
};

constexpr std::uint64_t kMaxSelections = 1'000'000;
constexpr std::uint64_t kMaxPureStrategies = 100'000;

/// Every way of resolving each focal element to a single member, with the
/// resulting distribution and its expectation. Guarded by kMaxSelections.
std::vector<Selection> enumerate_selections(const MassFunction& m);

/// [min, max] of the enumerated expectations; equals evi(m) exactly.
ExpectedValueInterval oracle_evi(const MassFunction& m);

struct SimulationReport {
    std::uint64_t samples = 0;
    double empirical_mean = 0.0;
    double standard_error = 0.0;  // sample stdev / sqrt(samples)
    std::uint64_t seed = 0;
};

/// Monte Carlo check of the rho interpolation: draw a focal element by mass,
/// then take its sup with probability rho and its inf otherwise. Uses
/// std::mt19937_64 with 53-bit uniform draws and inverse-CDF selection, so a
/// fixed seed reproduces the stream exactly across platforms.
SimulationReport simulate_nature(const MassFunction& m, Rho rho, std::uint64_t samples,
                                 std::uint64_t seed);

/// Max over every pure strategy of the strategy-restricted scalar value.
/// Guarded by kMaxPureStrategies.
double oracle_tree_value(const NodePtr& root, Rho rho);

}  // namespace evidec
