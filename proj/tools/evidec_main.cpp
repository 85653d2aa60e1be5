// evidec: expected value intervals, belief-function decision trees, and
// rho-sensitivity reports from JSON inputs.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "evidec/io.hpp"
#include "evidec/oracle.hpp"
#include "evidec/sensitivity.hpp"

namespace {

using nlohmann::json;

constexpr const char* kFormatVersion = "1";

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return std::string("fnv1a:") + buf;
}

json report_header(const std::string& command, const std::string& path,
                   const std::string& content) {
    return json{{"format_version", kFormatVersion},
                {"command", command},
                {"input", {{"path", path}, {"digest", fnv1a_digest(content)}}}};
}

void emit(const json& report, const std::string& format, const std::string& table) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << table;
    }
}

std::string money(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string interval_str(const evidec::ExpectedValueInterval& e) {
    return "[" + money(e.lower) + ", " + money(e.upper) + "]";
}

json interval_json(const evidec::ExpectedValueInterval& e) {
    return json{{"lower", e.lower}, {"upper", e.upper}};
}

json strategy_json(const evidec::Strategy& s) {
    json out = json::object();
    for (const auto& [node, action] : s) out[node] = action;
    return out;
}

// ---- evi -------------------------------------------------------------

int cmd_evi(const std::string& path, std::optional<double> rho, bool transforms,
            const std::string& format) {
    std::string content = evidec::read_file(path);
    evidec::MassFunction m = evidec::parse_mass_function(content);
    evidec::ExpectedValueInterval e = evidec::evi(m);

    json report = report_header("evi", path, content);
    report["results"]["evi"] = interval_json(e);

    std::string table = "EVI: " + interval_str(e) + "\n";
    if (rho) {
        double scalar = evidec::rho_expect(e, evidec::Rho(*rho));
        evidec::PointDistribution induced = evidec::induced_distribution(m, evidec::Rho(*rho));
        report["results"]["rho"] = *rho;
        report["results"]["rho_expect"] = scalar;
        json dist = json::array();
        for (std::size_t i = 0; i < induced.frame.size(); ++i) {
            dist.push_back(json{{"value", induced.frame.values()[i]},
                                {"probability", induced.probabilities[i]}});
        }
        report["results"]["induced_distribution"] = dist;

        table += "rho = " + money(*rho) + ": E = " + money(scalar) + "\n";
        table += "induced distribution:\n";
        for (std::size_t i = 0; i < induced.frame.size(); ++i) {
            table += "  p(" + money(induced.frame.values()[i]) + ") = " +
                     std::to_string(induced.probabilities[i]) + "\n";
        }
    }
    if (transforms) {
        double pig = evidec::pignistic_expect(m);
        report["results"]["pignistic"] = pig;
        table += "pignistic:    " + money(pig) + "\n";
        try {
            double prop = evidec::proportional_expect(m);
            report["results"]["proportional"] = prop;
            table += "proportional: " + money(prop) + "\n";
        } catch (const evidec::Error&) {
            report["results"]["proportional"] = nullptr;
            table += "proportional: undefined (no singleton mass)\n";
        }
    }
    emit(report, format, table);
    return 0;
}

// ---- evaluate --------------------------------------------------------

json evaluated_node_json(const evidec::EvaluatedNode& node) {
    json out;
    switch (node.kind) {
        case evidec::NodeKind::Leaf: out["kind"] = "leaf"; break;
        case evidec::NodeKind::Chance: out["kind"] = "chance"; break;
        case evidec::NodeKind::Decision: out["kind"] = "decision"; break;
    }
    if (!node.id.empty()) out["id"] = node.id;
    out["interval"] = interval_json(node.interval);
    out["value"] = node.scalar;
    if (node.chosen) out["chosen"] = node.chosen_action();
    if (!node.children.empty()) {
        json children = json::array();
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            json child = evaluated_node_json(node.children[i]);
            child["branch"] = node.branch_labels[i];
            children.push_back(std::move(child));
        }
        out["branches"] = std::move(children);
    }
    return out;
}

void evaluated_node_table(const evidec::EvaluatedNode& node, int depth, std::string* out,
                          const std::string& branch = "", bool chosen = false) {
    std::string line(static_cast<std::size_t>(depth) * 2, ' ');
    if (!branch.empty()) line += (chosen ? "* " : "- ") + branch + ": ";
    switch (node.kind) {
        case evidec::NodeKind::Leaf: line += "leaf "; break;
        case evidec::NodeKind::Chance: line += "chance '" + node.id + "' "; break;
        case evidec::NodeKind::Decision: line += "decision '" + node.id + "' "; break;
    }
    line += interval_str(node.interval) + "  E = " + money(node.scalar);
    if (node.chosen) line += "  -> " + node.chosen_action();
    *out += line + "\n";
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        bool is_chosen = node.chosen && *node.chosen == i;
        evaluated_node_table(node.children[i], depth + 1, out, node.branch_labels[i], is_chosen);
    }
}

int cmd_evaluate(const std::string& path, double rho, const std::string& format) {
    std::string content = evidec::read_file(path);
    evidec::Problem problem = evidec::parse_problem(content);
    evidec::EvaluatedTree tree = evidec::evaluate(problem.tree, evidec::Rho(rho));
    evidec::Strategy strategy = evidec::extract_strategy(tree);

    json report = report_header("evaluate", path, content);
    report["results"]["name"] = problem.name;
    report["results"]["rho"] = rho;
    report["results"]["root_interval"] = interval_json(tree.root.interval);
    report["results"]["root_value"] = tree.root.scalar;
    report["results"]["strategy"] = strategy_json(strategy);
    report["results"]["tree"] = evaluated_node_json(tree.root);

    std::string table = "problem: " + problem.name + "  (rho = " + money(rho) + ")\n";
    evaluated_node_table(tree.root, 0, &table);
    table += "root value: " + money(tree.root.scalar) + "  interval " +
             interval_str(tree.root.interval) + "\n";
    table += "strategy:\n";
    for (const auto& [node, action] : strategy) {
        table += "  " + node + ": " + action + "\n";
    }
    emit(report, format, table);
    return 0;
}

// ---- sensitivity -----------------------------------------------------

int cmd_sensitivity(const std::string& path, int resolution, const std::string& format) {
    std::string content = evidec::read_file(path);
    evidec::Problem problem = evidec::parse_problem(content);
    auto regions = evidec::strategy_regions(problem.tree, resolution);

    json report = report_header("sensitivity", path, content);
    report["results"]["name"] = problem.name;
    report["results"]["resolution"] = resolution;
    json out = json::array();
    for (const auto& region : regions) {
        out.push_back(json{{"rho_low", region.rho_low},
                           {"rho_high", region.rho_high},
                           {"value_at_low", region.value_at_low},
                           {"value_at_high", region.value_at_high},
                           {"strategy", strategy_json(region.strategy)}});
    }
    report["results"]["regions"] = std::move(out);

    std::string table = "problem: " + problem.name + "\n";
    for (const auto& region : regions) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "rho in [%.6f, %.6f]  value %s -> %s\n",
                      region.rho_low, region.rho_high, money(region.value_at_low).c_str(),
                      money(region.value_at_high).c_str());
        table += buf;
        for (const auto& [node, action] : region.strategy) {
            table += "    " + node + ": " + action + "\n";
        }
    }
    emit(report, format, table);
    return 0;
}

// ---- oracle ----------------------------------------------------------

int cmd_oracle(const std::string& path, double rho, std::uint64_t samples, std::uint64_t seed,
               const std::string& format) {
    std::string content = evidec::read_file(path);
    json doc = json::parse(content, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw evidec::Error(evidec::ErrorCode::SchemaError, "input is not a JSON object");
    }

    json report = report_header("oracle", path, content);
    json checks = json::array();
    std::string table;
    bool all_pass = true;

    auto record = [&](const std::string& name, double analytic, double observed, double tol,
                      bool pass) {
        checks.push_back(json{{"check", name},
                              {"analytic", analytic},
                              {"observed", observed},
                              {"tolerance", tol},
                              {"pass", pass}});
        table += (pass ? "PASS  " : "FAIL  ") + name + ": analytic " + money(analytic) +
                 ", oracle " + money(observed) + "\n";
        all_pass = all_pass && pass;
    };

    if (doc.contains("tree")) {
        evidec::Problem problem = evidec::parse_problem(content);
        double analytic = evidec::evaluate(problem.tree, evidec::Rho(rho)).root.scalar;
        double oracle = evidec::oracle_tree_value(problem.tree, evidec::Rho(rho));
        record("strategy enumeration", analytic, oracle, 1e-9,
               std::abs(analytic - oracle) <= 1e-9);
    } else {
        evidec::MassFunction m = evidec::parse_mass_function(content);
        evidec::ExpectedValueInterval analytic = evidec::evi(m);
        evidec::ExpectedValueInterval enumerated = evidec::oracle_evi(m);
        record("selection enumeration (lower)", analytic.lower, enumerated.lower, 0.0,
               analytic.lower == enumerated.lower);
        record("selection enumeration (upper)", analytic.upper, enumerated.upper, 0.0,
               analytic.upper == enumerated.upper);

        double expected = evidec::rho_expect(analytic, evidec::Rho(rho));
        evidec::SimulationReport sim = evidec::simulate_nature(m, evidec::Rho(rho), samples, seed);
        double tol = 4.0 * sim.standard_error;
        record("monte carlo mean", expected, sim.empirical_mean, tol,
               std::abs(sim.empirical_mean - expected) <= tol);
        report["results"]["simulation"] = json{{"samples", sim.samples},
                                               {"seed", sim.seed},
                                               {"empirical_mean", sim.empirical_mean},
                                               {"standard_error", sim.standard_error}};
    }

    report["results"]["rho"] = rho;
    report["results"]["checks"] = std::move(checks);
    report["results"]["pass"] = all_pass;
    emit(report, format, table);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision making with belief functions"};
    app.require_subcommand(1);

    std::string format = "table";

    std::string evi_path;
    std::optional<double> evi_rho;
    bool transforms = false;
    auto* evi_cmd = app.add_subcommand("evi", "Expected value interval of a mass function");
    evi_cmd->add_option("file", evi_path, "mass-function JSON document")->required();
    evi_cmd->add_option("--rho", evi_rho, "cooperation probability in [0,1]");
    evi_cmd->add_flag("--transforms", transforms, "also print pignistic/proportional values");
    evi_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    std::string eval_path;
    double eval_rho = 0.0;
    auto* eval_cmd = app.add_subcommand("evaluate", "Backward induction on a decision tree");
    eval_cmd->add_option("file", eval_path, "problem JSON document")->required();
    eval_cmd->add_option("--rho", eval_rho, "cooperation probability in [0,1]")->required();
    eval_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    std::string sens_path;
    int resolution = evidec::kDefaultRegionResolution;
    auto* sens_cmd = app.add_subcommand("sensitivity", "Strategy regions over rho in [0,1]");
    sens_cmd->add_option("file", sens_path, "problem JSON document")->required();
    sens_cmd->add_option("--resolution", resolution, "rho grid size")->check(CLI::Range(2, 1000000));
    sens_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    std::string oracle_path;
    double oracle_rho = 0.0;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force / Monte Carlo verification");
    oracle_cmd->add_option("file", oracle_path, "mass-function or problem JSON document")
        ->required();
    oracle_cmd->add_option("--rho", oracle_rho, "cooperation probability in [0,1]")->required();
    oracle_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--seed", seed);
    oracle_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            return app.exit(e);
        }
        app.exit(e);
        return 2;
    }

    try {
        if (evi_cmd->parsed()) return cmd_evi(evi_path, evi_rho, transforms, format);
        if (eval_cmd->parsed()) return cmd_evaluate(eval_path, eval_rho, format);
        if (sens_cmd->parsed()) return cmd_sensitivity(sens_path, resolution, format);
        if (oracle_cmd->parsed()) {
            return cmd_oracle(oracle_path, oracle_rho, samples, seed, format);
        }
    } catch (const evidec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
