#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "evidec/expectation.hpp"

namespace evidec {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Set of possible net payoffs; only min and max enter any computation.
struct LeafNode {
    std::vector<double> outcomes;  // sorted, nonempty
};

struct ChanceBranch {
    std::string event;
    double mass = 0.0;
    NodePtr child;
};

/// Branches carry a mass function; events may overlap.
struct ChanceNode {
    std::string id;
    std::vector<ChanceBranch> branches;
};

struct DecisionBranch {
    std::string action;
    double cost = 0.0;  // folded into the subtree's leaves at load time
    NodePtr child;
};

struct DecisionNode {
    std::string id;
    std::vector<DecisionBranch> branches;
};

struct Node {
    std::variant<LeafNode, ChanceNode, DecisionNode> value;
};

NodePtr make_leaf(std::vector<double> outcomes);
NodePtr make_chance(std::string id, std::vector<ChanceBranch> branches);

/// Builds a decision node, folding each branch's cost into every leaf payoff
/// of that branch's subtree. Evaluation sees net payoffs only; the cost field
/// is kept as a record of the original document.
NodePtr make_decision(std::string id, std::vector<DecisionBranch> branches);

enum class NodeKind { Leaf, Chance, Decision };

struct EvaluatedNode {
    NodeKind kind = NodeKind::Leaf;
    std::string id;                     // empty for leaves
    ExpectedValueInterval interval;
    double scalar = 0.0;                // rho_expect(interval, rho)
    std::optional<std::size_t> chosen;  // decision nodes: index of the chosen branch
    std::vector<std::string> branch_labels;
    std::vector<EvaluatedNode> children;

    const std::string& chosen_action() const { return branch_labels[*chosen]; }
};

struct EvaluatedTree {
    EvaluatedNode root;
    double rho = 0.0;
};

/// Strategy: decision-node id -> chosen action, restricted to nodes reachable
/// under the strategy's own choices.
using Strategy = std::map<std::string, std::string>;

/// Backward induction. Leaves yield [min, max]; chance nodes the mass-weighted
/// interval sum; decision nodes adopt the branch whose interval maximizes the
/// rho-scalar. Ties break by branch order.
EvaluatedTree evaluate(const NodePtr& root, Rho rho);

Strategy extract_strategy(const EvaluatedTree& tree);

/// Scalar-only propagation cross-check; equals evaluate(...).root.scalar.
double evaluate_scalar(const NodePtr& root, Rho rho);

}  // namespace evidec
