#include "evidec/sensitivity.hpp"

#include <cmath>

namespace evidec {

ComparisonResult indifference_rho(const ExpectedValueInterval& e1,
                                  const ExpectedValueInterval& e2) {
    const double a = e1.lower - e2.lower;
    const double b = e2.upper - e1.upper;

    if (a == 0.0 && b == 0.0) {
        return {ComparisonKind::IndifferentEverywhere, 0.0, 0, 0};
    }
    // Componentwise ordering decides without any rho assumption.
    if (a >= 0.0 && b <= 0.0) {
        return {ComparisonKind::AlwaysFirst, 0.0, 1, 1};
    }
    if (a <= 0.0 && b >= 0.0) {
        return {ComparisonKind::AlwaysSecond, 0.0, 2, 2};
    }
    // Remaining cases have sign(a) == sign(b), so a + b != 0 and the
    // difference rho -> a - rho * (a + b) crosses zero at a / (a + b).
    const double t = a / (a + b);
    if (t <= 0.0 || t >= 1.0) {
        // Crossing outside (0, 1): the sign at rho = 0 decides everywhere.
        return a > 0.0 ? ComparisonResult{ComparisonKind::AlwaysFirst, 0.0, 1, 1}
                       : ComparisonResult{ComparisonKind::AlwaysSecond, 0.0, 2, 2};
    }
    if (a + b > 0.0) {
        return {ComparisonKind::Threshold, t, 1, 2};
    }
    return {ComparisonKind::Threshold, t, 2, 1};
}

bool dominance(const ExpectedValueInterval& e1, const ExpectedValueInterval& e2) {
    return e1.lower >= e2.lower && e1.upper >= e2.upper &&
           (e1.lower > e2.lower || e1.upper > e2.upper);
}

namespace {

Strategy strategy_at(const NodePtr& root, double rho) {
    return extract_strategy(evaluate(root, Rho(rho)));
}

}  // namespace

std::vector<StrategyRegion> strategy_regions(const NodePtr& root, int resolution) {
    if (resolution < 2) {
        throw Error(ErrorCode::InvalidArgument, "resolution must be at least 2");
    }

    struct GridPoint {
        double rho;
        Strategy strategy;
    };
    std::vector<GridPoint> grid;
    grid.reserve(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        double rho = static_cast<double>(i) / static_cast<double>(resolution - 1);
        grid.push_back({rho, strategy_at(root, rho)});
    }

    // Boundaries between adjacent grid points with distinct strategies,
    // refined by bisection on strategy identity.
    std::vector<double> boundaries;
    std::vector<Strategy> strategies{grid.front().strategy};
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (grid[i].strategy == strategies.back()) continue;
        double lo = grid[i - 1].rho;
        double hi = grid[i].rho;
        const Strategy& left = strategies.back();
        while (hi - lo > kRegionBoundaryTolerance) {
            double mid = (lo + hi) / 2.0;
            if (strategy_at(root, mid) == left) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        boundaries.push_back((lo + hi) / 2.0);
        strategies.push_back(grid[i].strategy);
    }

    std::vector<StrategyRegion> regions;
    double low = 0.0;
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        double high = i < boundaries.size() ? boundaries[i] : 1.0;
        StrategyRegion region;
        region.rho_low = low;
        region.rho_high = high;
        region.strategy = strategies[i];
        region.value_at_low = evaluate(root, Rho(low)).root.scalar;
        region.value_at_high = evaluate(root, Rho(high)).root.scalar;
        regions.push_back(std::move(region));
        low = high;
    }
    return regions;
}

}  // namespace evidec
