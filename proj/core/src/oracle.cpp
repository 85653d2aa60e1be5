#include "evidec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>

namespace evidec {

namespace {

std::size_t frame_index(const Frame& frame, double v) {
    auto it = std::lower_bound(frame.values().begin(), frame.values().end(), v);
    return static_cast<std::size_t>(it - frame.values().begin());
}

}  // namespace

std::vector<Selection> enumerate_selections(const MassFunction& m) {
    std::uint64_t count = 1;
    for (const auto& focal : m.focals()) {
        count *= focal.elements.size();
        if (count > kMaxSelections) {
            std::ostringstream msg;
            msg << "selection count exceeds the " << kMaxSelections << " guard";
            throw Error(ErrorCode::TooLarge, msg.str());
        }
    }

    const auto& focals = m.focals();
    std::vector<std::size_t> index(focals.size(), 0);
    std::vector<Selection> out;
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        std::vector<double> choices(focals.size());
        std::vector<double> probs(m.frame().size(), 0.0);
        // Expectation summed in focal order: monotone in the choices, so the
        // all-inf and all-sup selections land exactly on the interval bounds.
        double e = 0.0;
        for (std::size_t i = 0; i < focals.size(); ++i) {
            choices[i] = focals[i].elements[index[i]];
            probs[frame_index(m.frame(), choices[i])] += focals[i].mass;
            e += choices[i] * focals[i].mass;
        }
        PointDistribution dist(m.frame(), std::move(probs));
        out.push_back(Selection{SelectionFunction{std::move(choices)}, std::move(dist), e});

        for (std::size_t i = focals.size(); i-- > 0;) {
            if (++index[i] < focals[i].elements.size()) break;
            index[i] = 0;
        }
    }
    return out;
}

ExpectedValueInterval oracle_evi(const MassFunction& m) {
    auto selections = enumerate_selections(m);
    double lo = selections.front().expected_value;
    double hi = lo;
    for (const auto& s : selections) {
        lo = std::min(lo, s.expected_value);
        hi = std::max(hi, s.expected_value);
    }
    return ExpectedValueInterval{lo, hi};
}

SimulationReport simulate_nature(const MassFunction& m, Rho rho, std::uint64_t samples,
                                 std::uint64_t seed) {
    if (samples < 1) {
        throw Error(ErrorCode::InvalidArgument, "need at least one sample");
    }
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        // 53-bit mantissa draw in [0, 1).
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    const auto& focals = m.focals();
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        double u = uniform();
        double cumulative = 0.0;
        const FocalElement* picked = &focals.back();
        for (const auto& focal : focals) {
            cumulative += focal.mass;
            if (u < cumulative) {
                picked = &focal;
                break;
            }
        }
        double payoff = uniform() < rho.value() ? picked->sup() : picked->inf();
        sum += payoff;
        sum_sq += payoff * payoff;
    }

    double n = static_cast<double>(samples);
    double mean = sum / n;
    double variance = samples > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
    return SimulationReport{samples, mean, std::sqrt(variance / n), seed};
}

namespace {

struct DecisionSite {
    const DecisionNode* node;
    std::size_t arity;
};

void collect_decisions(const Node& node, std::vector<DecisionSite>& sites) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ChanceNode>) {
                for (const auto& branch : n.branches) collect_decisions(*branch.child, sites);
            } else if constexpr (std::is_same_v<T, DecisionNode>) {
                sites.push_back({&n, n.branches.size()});
                for (const auto& branch : n.branches) collect_decisions(*branch.child, sites);
            }
        },
        node.value);
}

// Scalar value with every decision fixed by `pick`, keyed by node address.
double fixed_strategy_value(const Node& node, Rho rho,
                            const std::map<const DecisionNode*, std::size_t>& pick) {
    return std::visit(
        [&](const auto& n) -> double {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, LeafNode>) {
                return n.outcomes.front() +
                       rho.value() * (n.outcomes.back() - n.outcomes.front());
            } else if constexpr (std::is_same_v<T, ChanceNode>) {
                double value = 0.0;
                for (const auto& branch : n.branches) {
                    value += branch.mass * fixed_strategy_value(*branch.child, rho, pick);
                }
                return value;
            } else {
                return fixed_strategy_value(*n.branches[pick.at(&n)].child, rho, pick);
            }
        },
        node.value);
}

}  // namespace

double oracle_tree_value(const NodePtr& root, Rho rho) {
    if (!root) throw Error(ErrorCode::InvalidArgument, "null tree");

    std::vector<DecisionSite> sites;
    collect_decisions(*root, sites);

    std::uint64_t count = 1;
    for (const auto& site : sites) {
        count *= site.arity;
        if (count > kMaxPureStrategies) {
            std::ostringstream msg;
            msg << "pure strategy count exceeds the " << kMaxPureStrategies << " guard";
            throw Error(ErrorCode::TooLarge, msg.str());
        }
    }

    std::vector<std::size_t> index(sites.size(), 0);
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint64_t k = 0; k < count; ++k) {
        std::map<const DecisionNode*, std::size_t> pick;
        for (std::size_t i = 0; i < sites.size(); ++i) pick[sites[i].node] = index[i];
        best = std::max(best, fixed_strategy_value(*root, rho, pick));

        for (std::size_t i = sites.size(); i-- > 0;) {
            if (++index[i] < sites[i].arity) break;
            index[i] = 0;
        }
    }
    return best;
}

}  // namespace evidec
