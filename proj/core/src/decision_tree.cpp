#include "evidec/decision_tree.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace evidec {

NodePtr make_leaf(std::vector<double> outcomes) {
    if (outcomes.empty()) {
        throw Error(ErrorCode::EmptyOutcome, "leaf must carry at least one payoff");
    }
    for (double v : outcomes) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::InvalidArgument, "leaf payoffs must be finite");
        }
    }
    std::sort(outcomes.begin(), outcomes.end());
    outcomes.erase(std::unique(outcomes.begin(), outcomes.end()), outcomes.end());
    return std::make_shared<const Node>(Node{LeafNode{std::move(outcomes)}});
}

NodePtr make_chance(std::string id, std::vector<ChanceBranch> branches) {
    if (branches.empty()) {
        throw Error(ErrorCode::SchemaError, "chance node '" + id + "' has no branches");
    }
    double total = 0.0;
    for (const auto& branch : branches) {
        if (!(branch.mass > 0.0) || branch.mass > 1.0 || !std::isfinite(branch.mass)) {
            std::ostringstream msg;
            msg << "chance node '" << id << "' branch mass " << branch.mass
                << " must lie in (0, 1]";
            throw Error(ErrorCode::NonPositiveMass, msg.str());
        }
        if (!branch.child) {
            throw Error(ErrorCode::SchemaError, "chance branch without a child");
        }
        total += branch.mass;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "chance node '" << id << "' masses sum to " << total << ", expected 1";
        throw Error(ErrorCode::MassSumViolation, msg.str());
    }
    return std::make_shared<const Node>(Node{ChanceNode{std::move(id), std::move(branches)}});
}

namespace {

NodePtr shift_leaves(const NodePtr& node, double delta) {
    if (delta == 0.0) return node;
    return std::visit(
        [&](const auto& n) -> NodePtr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, LeafNode>) {
                std::vector<double> shifted = n.outcomes;
                for (double& v : shifted) v += delta;
                return std::make_shared<const Node>(Node{LeafNode{std::move(shifted)}});
            } else if constexpr (std::is_same_v<T, ChanceNode>) {
                ChanceNode out{n.id, n.branches};
                for (auto& branch : out.branches) {
                    branch.child = shift_leaves(branch.child, delta);
                }
                return std::make_shared<const Node>(Node{std::move(out)});
            } else {
                DecisionNode out{n.id, n.branches};
                for (auto& branch : out.branches) {
                    branch.child = shift_leaves(branch.child, delta);
                }
                return std::make_shared<const Node>(Node{std::move(out)});
            }
        },
        node->value);
}

}  // namespace

NodePtr make_decision(std::string id, std::vector<DecisionBranch> branches) {
    if (branches.empty()) {
        throw Error(ErrorCode::SchemaError, "decision node '" + id + "' has no branches");
    }
    std::set<std::string> actions;
    for (auto& branch : branches) {
        if (!actions.insert(branch.action).second) {
            throw Error(ErrorCode::SchemaError,
                        "decision node '" + id + "' repeats action '" + branch.action + "'");
        }
        if (branch.cost < 0.0 || !std::isfinite(branch.cost)) {
            throw Error(ErrorCode::InvalidArgument, "branch cost must be nonnegative");
        }
        if (!branch.child) {
            throw Error(ErrorCode::SchemaError, "decision branch without a child");
        }
        branch.child = shift_leaves(branch.child, -branch.cost);
    }
    return std::make_shared<const Node>(Node{DecisionNode{std::move(id), std::move(branches)}});
}

namespace {

EvaluatedNode evaluate_node(const Node& node, Rho rho) {
    return std::visit(
        [&](const auto& n) -> EvaluatedNode {
            using T = std::decay_t<decltype(n)>;
            EvaluatedNode out;
            if constexpr (std::is_same_v<T, LeafNode>) {
                out.kind = NodeKind::Leaf;
                out.interval = {n.outcomes.front(), n.outcomes.back()};
            } else if constexpr (std::is_same_v<T, ChanceNode>) {
                out.kind = NodeKind::Chance;
                out.id = n.id;
                for (const auto& branch : n.branches) {
                    EvaluatedNode child = evaluate_node(*branch.child, rho);
                    out.interval.lower += branch.mass * child.interval.lower;
                    out.interval.upper += branch.mass * child.interval.upper;
                    out.branch_labels.push_back(branch.event);
                    out.children.push_back(std::move(child));
                }
            } else {
                out.kind = NodeKind::Decision;
                out.id = n.id;
                for (const auto& branch : n.branches) {
                    out.branch_labels.push_back(branch.action);
                    out.children.push_back(evaluate_node(*branch.child, rho));
                }
                // Strictly-greater comparison keeps the earliest branch on ties.
                std::size_t best = 0;
                for (std::size_t i = 1; i < out.children.size(); ++i) {
                    if (rho_expect(out.children[i].interval, rho) >
                        rho_expect(out.children[best].interval, rho)) {
                        best = i;
                    }
                }
                out.chosen = best;
                out.interval = out.children[best].interval;
            }
            out.scalar = rho_expect(out.interval, rho);
            return out;
        },
        node.value);
}

void collect_strategy(const EvaluatedNode& node, Strategy& strategy) {
    switch (node.kind) {
        case NodeKind::Leaf:
            return;
        case NodeKind::Chance:
            for (const auto& child : node.children) collect_strategy(child, strategy);
            return;
        case NodeKind::Decision:
            strategy[node.id] = node.chosen_action();
            collect_strategy(node.children[*node.chosen], strategy);
            return;
    }
}

}  // namespace

EvaluatedTree evaluate(const NodePtr& root, Rho rho) {
    if (!root) throw Error(ErrorCode::InvalidArgument, "null tree");
    return EvaluatedTree{evaluate_node(*root, rho), rho.value()};
}

Strategy extract_strategy(const EvaluatedTree& tree) {
    Strategy strategy;
    collect_strategy(tree.root, strategy);
    return strategy;
}

double evaluate_scalar(const NodePtr& root, Rho rho) {
    if (!root) throw Error(ErrorCode::InvalidArgument, "null tree");
    return std::visit(
        [&](const auto& n) -> double {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, LeafNode>) {
                return n.outcomes.front() +
                       rho.value() * (n.outcomes.back() - n.outcomes.front());
            } else if constexpr (std::is_same_v<T, ChanceNode>) {
                double value = 0.0;
                for (const auto& branch : n.branches) {
                    value += branch.mass * evaluate_scalar(branch.child, rho);
                }
                return value;
            } else {
                double best = evaluate_scalar(n.branches.front().child, rho);
                for (std::size_t i = 1; i < n.branches.size(); ++i) {
                    best = std::max(best, evaluate_scalar(n.branches[i].child, rho));
                }
                return best;
            }
        },
        root->value);
}

}  // namespace evidec
