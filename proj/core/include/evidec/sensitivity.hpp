#pragma once

#include <string>
#include <vector>

#include "evidec/decision_tree.hpp"

namespace evidec {

enum class ComparisonKind {
    AlwaysFirst,
    AlwaysSecond,
    Threshold,
    IndifferentEverywhere,
};

struct ComparisonResult {
    ComparisonKind kind = ComparisonKind::IndifferentEverywhere;
    double threshold = 0.0;  // meaningful only for Threshold, in (0, 1)
    // Which choice is preferred on each side of the threshold.
    int preferred_below = 0;
    int preferred_above = 0;
};

/// Solves rho_expect(e1, rho) = rho_expect(e2, rho) for rho. With
/// a = e1.lower - e2.lower and b = e2.upper - e1.upper the crossing is at
/// a / (a + b); choice 1 is preferred below it iff a + b > 0.
ComparisonResult indifference_rho(const ExpectedValueInterval& e1,
                                  const ExpectedValueInterval& e2);

/// True iff e1 >= e2 componentwise with at least one strict inequality,
/// making choice 1 preferred at every rho.
bool dominance(const ExpectedValueInterval& e1, const ExpectedValueInterval& e2);

struct StrategyRegion {
    double rho_low = 0.0;
    double rho_high = 1.0;
    Strategy strategy;
    double value_at_low = 0.0;   // root scalar at rho_low
    double value_at_high = 0.0;  // root scalar at rho_high
};

constexpr double kRegionBoundaryTolerance = 1e-6;
constexpr int kDefaultRegionResolution = 101;

/// Partitions rho in [0, 1] into maximal intervals of constant optimal
/// strategy: uniform grid of `resolution` points, boundaries refined by
/// bisection to kRegionBoundaryTolerance.
std::vector<StrategyRegion> strategy_regions(const NodePtr& root,
                                             int resolution = kDefaultRegionResolution);

}  // namespace evidec
