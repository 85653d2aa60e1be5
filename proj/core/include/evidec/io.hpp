#pragma once

#include <string>

#include "evidec/decision_tree.hpp"
#include "evidec/frame.hpp"

namespace evidec {

/// Parses {"frame":[...], "masses":[{"elements":[...], "mass":...}]}.
MassFunction parse_mass_function(const std::string& json_text);
MassFunction load_mass_function(const std::string& path);

struct Problem {
    std::string name;
    NodePtr tree;
};

/// Parses {"name":..., "tree":...} with kind leaf/chance/decision nodes.
/// Decision-branch costs are folded into the branch's leaf payoffs.
Problem parse_problem(const std::string& json_text);
Problem load_problem(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace evidec
