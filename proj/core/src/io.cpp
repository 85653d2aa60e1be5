#include "evidec/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace evidec {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw Error(ErrorCode::SchemaError, "input is not valid JSON");
    }
    return doc;
}

std::vector<double> number_array(const json& value, const char* where) {
    if (!value.is_array()) {
        throw Error(ErrorCode::SchemaError, std::string(where) + " must be an array of numbers");
    }
    std::vector<double> out;
    for (const auto& item : value) {
        if (!item.is_number()) {
            throw Error(ErrorCode::SchemaError,
                        std::string(where) + " must contain only numbers");
        }
        out.push_back(item.get<double>());
    }
    return out;
}

double number_field(const json& obj, const char* key) {
    if (!obj.contains(key) || !obj[key].is_number()) {
        throw Error(ErrorCode::SchemaError, std::string("missing numeric field '") + key + "'");
    }
    return obj[key].get<double>();
}

std::string string_field(const json& obj, const char* key) {
    if (!obj.contains(key) || !obj[key].is_string()) {
        throw Error(ErrorCode::SchemaError, std::string("missing string field '") + key + "'");
    }
    return obj[key].get<std::string>();
}

NodePtr parse_node(const json& value, std::set<std::string>& decision_ids) {
    if (!value.is_object()) {
        throw Error(ErrorCode::SchemaError, "node must be a JSON object");
    }
    std::string kind = string_field(value, "kind");
    if (kind == "leaf") {
        if (!value.contains("outcomes")) {
            throw Error(ErrorCode::EmptyOutcome, "leaf without outcomes");
        }
        return make_leaf(number_array(value["outcomes"], "outcomes"));
    }
    if (kind == "chance") {
        std::string id = string_field(value, "id");
        if (!value.contains("branches") || !value["branches"].is_array()) {
            throw Error(ErrorCode::SchemaError, "chance node '" + id + "' needs branches");
        }
        std::vector<ChanceBranch> branches;
        for (const auto& b : value["branches"]) {
            branches.push_back(ChanceBranch{string_field(b, "event"), number_field(b, "mass"),
                                            parse_node(b.at("child"), decision_ids)});
        }
        return make_chance(std::move(id), std::move(branches));
    }
    if (kind == "decision") {
        std::string id = string_field(value, "id");
        if (!decision_ids.insert(id).second) {
            throw Error(ErrorCode::SchemaError, "duplicate decision node id '" + id + "'");
        }
        if (!value.contains("branches") || !value["branches"].is_array()) {
            throw Error(ErrorCode::SchemaError, "decision node '" + id + "' needs branches");
        }
        std::vector<DecisionBranch> branches;
        for (const auto& b : value["branches"]) {
            if (!b.is_object() || !b.contains("child")) {
                throw Error(ErrorCode::SchemaError, "decision branch needs a child");
            }
            double cost = b.contains("cost") ? number_field(b, "cost") : 0.0;
            branches.push_back(DecisionBranch{string_field(b, "action"), cost,
                                              parse_node(b["child"], decision_ids)});
        }
        return make_decision(std::move(id), std::move(branches));
    }
    throw Error(ErrorCode::SchemaError, "unknown node kind '" + kind + "'");
}

}  // namespace

MassFunction parse_mass_function(const std::string& json_text) {
    json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("frame") || !doc.contains("masses")) {
        throw Error(ErrorCode::SchemaError, "expected an object with 'frame' and 'masses'");
    }
    std::vector<double> frame = number_array(doc["frame"], "frame");
    if (!doc["masses"].is_array()) {
        throw Error(ErrorCode::SchemaError, "'masses' must be an array");
    }
    std::vector<std::pair<std::vector<double>, double>> assignments;
    for (const auto& entry : doc["masses"]) {
        if (!entry.is_object() || !entry.contains("elements")) {
            throw Error(ErrorCode::SchemaError,
                        "each mass entry needs 'elements' and 'mass'");
        }
        assignments.emplace_back(number_array(entry["elements"], "elements"),
                                 number_field(entry, "mass"));
    }
    return make_mass_function(std::move(frame), std::move(assignments));
}

MassFunction load_mass_function(const std::string& path) {
    return parse_mass_function(read_file(path));
}

Problem parse_problem(const std::string& json_text) {
    json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("tree")) {
        throw Error(ErrorCode::SchemaError, "expected an object with 'name' and 'tree'");
    }
    std::set<std::string> decision_ids;
    Problem problem;
    problem.name = doc.contains("name") ? string_field(doc, "name") : "";
    problem.tree = parse_node(doc["tree"], decision_ids);
    return problem;
}

Problem load_problem(const std::string& path) { return parse_problem(read_file(path)); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::SchemaError, "cannot read file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace evidec
