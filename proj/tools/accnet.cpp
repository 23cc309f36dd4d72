// accnet: accessibility-index toolkit for small transportation networks.
//
// Subcommands: validate | rank | sweep | alpha | axioms | dominance | example
// Exit codes: 0 success, 1 usage error, 2 validation failure, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "accnet/axioms.hpp"
#include "accnet/fixtures.hpp"
#include "accnet/indices.hpp"
#include "accnet/io.hpp"
#include "accnet/network.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct InputOpts {
    std::string fixture;
    std::string input;
    std::string format;
    bool allow_triangle_violation = false;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
    auto* fx = cmd->add_option("--fixture", in.fixture,
                               "Built-in fixture: fig1|fig2_d|fig2_dprime|fig4|ralik|fig6");
    auto* path = cmd->add_option("--input", in.input, "Path to a network file");
    auto* fmt = cmd->add_option("--format", in.format,
                                "Input format: edge-list|matrix-csv|json (with --input)");
    fx->excludes(path);
    path->needs(fmt);
    fmt->needs(path);
    cmd->add_flag("--allow-triangle-violation", in.allow_triangle_violation,
                  "Permit computations on networks violating the triangle inequality");
}

accnet::TransportationNetwork resolve_input(const InputOpts& in) {
    if (!in.fixture.empty()) {
        auto fx = accnet::fixture_by_name(in.fixture);
        if (!fx) throw accnet::domain_error("unknown fixture '" + in.fixture + "'");
        return fx->net;
    }
    if (in.input.empty())
        throw accnet::domain_error("either --fixture or --input/--format is required");
    auto format = accnet::format_from_name(in.format);
    if (!format) throw accnet::domain_error("unknown format '" + in.format + "'");
    std::ifstream f(in.input);
    if (!f) throw accnet::domain_error("cannot open '" + in.input + "'");
    return accnet::load_network(f, *format);
}

// Returns the network for a computing subcommand, enforcing the override
// contract for non-metric inputs. Exits with kExitValidation when refused.
accnet::TransportationNetwork require_computable(const InputOpts& in) {
    accnet::TransportationNetwork net = resolve_input(in);
    if (!net.metric && !in.allow_triangle_violation) {
        std::cerr << "error: network violates the triangle inequality; rerun with "
                     "--allow-triangle-violation to compute on it anyway\n";
        std::exit(kExitValidation);
    }
    return net;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw accnet::domain_error("cannot write '" + out_path + "'");
    f << text;
}

std::string render_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_validate(const InputOpts& in, double tol, const std::string& out) {
    accnet::TransportationNetwork net = resolve_input(in);
    const double use_tol = tol >= 0 ? tol : accnet::default_triangle_tol(net);
    const accnet::ValidationReport rep = accnet::validate(net, use_tol);

    std::ostringstream os;
    os << "symmetric: " << (rep.symmetric ? "ok" : "FAIL") << "\n"
       << "zero diagonal: " << (rep.zero_diagonal ? "ok" : "FAIL") << "\n"
       << "nonnegative: " << (rep.nonnegative ? "ok" : "FAIL") << "\n"
       << "triangle violations: " << rep.triangle_violations.size() << "\n";
    size_t shown = 0;
    for (const auto& v : rep.triangle_violations) {
        if (++shown > 10) {
            os << "  ...\n";
            break;
        }
        os << "  d(" << net.labels[v.i] << "," << net.labels[v.j] << ") > d("
           << net.labels[v.i] << "," << net.labels[v.k] << ") + d(" << net.labels[v.k] << ","
           << net.labels[v.j] << ") by " << accnet::format_sig(v.slack) << "\n";
    }
    if (!rep.metric_ok() && in.allow_triangle_violation)
        os << "verdict: non-metric (accepted under --allow-triangle-violation)\n";
    else
        os << "verdict: " << (rep.metric_ok() ? "metric" : "non-metric") << "\n";
    write_output(out, os.str());
    if (rep.metric_ok() || in.allow_triangle_violation) return kExitOk;
    return kExitValidation;
}

int cmd_rank(const InputOpts& in, const std::string& index, std::optional<double> alpha,
             double tie_tol, const std::string& emit, const std::string& out) {
    const auto id = accnet::index_from_name(index);
    if (!id) throw accnet::domain_error("unknown index '" + index + "'");
    const accnet::TransportationNetwork net = require_computable(in);
    const accnet::AccessibilityVector v = accnet::evaluate_index(*id, net, alpha);
    const accnet::Ranking r = accnet::ranking(v, tie_tol);

    if (emit == "json") {
        nlohmann::json j;
        j["index"] = index;
        if (alpha) j["alpha"] = *alpha;
        if (v.non_metric) j["non_metric"] = true;
        j["labels"] = net.labels;
        j["scores"] = v.scores;
        j["classes"] = nlohmann::json::array();
        for (const auto& cls : r.classes) {
            std::vector<std::string> names;
            for (int i : cls) names.push_back(net.labels[i]);
            j["classes"].push_back(names);
        }
        write_output(out, render_json(j));
    } else {
        std::string text = "label,score,class\n";
        for (int i = 0; i < net.n; ++i)
            text += net.labels[i] + "," + accnet::format_sig(v.scores[i]) + "," +
                    std::to_string(r.class_of[i] + 1) + "\n";
        if (v.non_metric) text += "# non-metric network\n";
        write_output(out, text);
    }
    return kExitOk;
}

int cmd_sweep(const InputOpts& in, double amin, double amax, int steps, const std::string& out) {
    const accnet::TransportationNetwork net = require_computable(in);
    const accnet::SweepTable table = accnet::sweep(net, amin, amax, steps);
    write_output(out, accnet::sweep_to_csv(table, net.labels));
    return kExitOk;
}

int cmd_alpha(const InputOpts& in, const std::string& out) {
    const accnet::TransportationNetwork net = require_computable(in);
    const accnet::AlphaDiagnostics diag = accnet::reasonable_alpha(net);
    nlohmann::json j;
    j["alpha_exist"] = diag.alpha_exist;
    j["alpha_hat"] = diag.alpha_hat;
    j["capped_by_existence"] = diag.capped_by_existence;
    j["iterations"] = diag.bisection_iterations;
    j["trace"] = nlohmann::json::array();
    for (const auto& [a, c] : diag.trace) j["trace"].push_back({a, c});
    write_output(out, render_json(j));
    return kExitOk;
}

int cmd_axioms(const InputOpts& in, std::vector<std::string> indices, std::optional<double> alpha,
               int trials, std::uint64_t seed, const std::string& out) {
    const accnet::TransportationNetwork net = require_computable(in);
    if (indices.empty()) {
        indices = {"dsum", "dprod", "invdsum", "dsum-nt", "ecc-lex"};
        if (alpha) indices.push_back("gds");
    }
    std::vector<accnet::AxiomVerdict> verdicts;
    for (const std::string& name : indices) {
        const auto id = accnet::index_from_name(name);
        if (!id) throw accnet::domain_error("unknown index '" + name + "'");
        const std::optional<double> a =
            *id == accnet::IndexId::GeneralizedDistanceSum ? alpha : std::nullopt;
        if (*id == accnet::IndexId::GeneralizedDistanceSum && !alpha)
            throw accnet::domain_error("--alpha is required for the generalized index");
        verdicts.push_back(accnet::check_ano(*id, a, net, trials, seed));
        if (net.n >= 3) verdicts.push_back(accnet::check_dp(*id, a, net));
        if (net.n >= 4) {
            verdicts.push_back(accnet::check_idd(*id, a, net, trials, seed + 1));
            verdicts.push_back(accnet::check_iid(*id, a, net, trials, seed + 2));
        }
        if (net.n >= 3) verdicts.push_back(accnet::check_prd(*id, a, net, trials, seed + 3));
        if (*id == accnet::IndexId::GeneralizedDistanceSum) {
            for (auto& v : accnet::check_prop2(net, {*alpha})) verdicts.push_back(std::move(v));
        }
    }
    write_output(out, render_json(accnet::verdicts_to_json(verdicts)));
    return kExitOk;
}

int cmd_dominance(const InputOpts& in, const std::string& emit, const std::string& out) {
    const accnet::TransportationNetwork net = require_computable(in);
    const std::vector<accnet::DominancePair> pairs = accnet::dominance_pairs(net);
    if (emit == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& p : pairs)
            j.push_back({{"dominator", net.labels[p.dominator]},
                         {"dominated", net.labels[p.dominated]}});
        write_output(out, render_json(j));
    } else {
        std::string text;
        for (const auto& p : pairs)
            text += net.labels[p.dominator] + " dominates " + net.labels[p.dominated] + "\n";
        if (pairs.empty()) text = "no dominance pairs\n";
        write_output(out, text);
    }
    return kExitOk;
}

int cmd_example(const std::string& name, const std::string& out) {
    const auto fx = accnet::fixture_by_name(name);
    if (!fx) throw accnet::domain_error("unknown fixture '" + name + "'");
    nlohmann::json j = accnet::network_to_json(fx->net);
    j["name"] = fx->name;
    j["provenance"] = fx->provenance;
    write_output(out, render_json(j));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Accessibility indices for transportation networks"};
    app.require_subcommand(1);

    InputOpts in;
    std::string index = "dsum";
    std::vector<std::string> indices;
    double alpha_flag = -1.0;
    double amin = 0.0, amax = 0.0;
    int steps = 0;
    int trials = 100;
    std::uint64_t seed = 1;
    double tol = -1.0;
    std::string out, emit = "csv", example_name;

    auto* validate_cmd = app.add_subcommand("validate", "Check the network against the model");
    add_input_flags(validate_cmd, in);
    validate_cmd->add_option("--tol", tol, "Triangle-inequality tolerance");
    validate_cmd->add_option("--out", out, "Write output to a file");

    auto* rank_cmd = app.add_subcommand("rank", "Score and rank the nodes");
    add_input_flags(rank_cmd, in);
    rank_cmd->add_option("--index", index,
                         "Index: dsum|dprod|invdsum|dsum-nt|ecc-lex|gds")->required();
    rank_cmd->add_option("--alpha", alpha_flag, "Parameter for the generalized index");
    rank_cmd->add_option("--tol", tol, "Relative tie tolerance for classes");
    rank_cmd->add_option("--emit", emit, "Output format: csv|json");
    rank_cmd->add_option("--out", out, "Write output to a file");

    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate the generalized index on a grid");
    add_input_flags(sweep_cmd, in);
    sweep_cmd->add_option("--alpha-min", amin, "Grid start")->required();
    sweep_cmd->add_option("--alpha-max", amax, "Grid end")->required();
    sweep_cmd->add_option("--steps", steps, "Grid size (>= 2)")->required();
    sweep_cmd->add_option("--out", out, "Write output to a file");

    auto* alpha_cmd = app.add_subcommand("alpha", "Parameter diagnostics");
    add_input_flags(alpha_cmd, in);
    alpha_cmd->add_option("--out", out, "Write output to a file");

    auto* axioms_cmd = app.add_subcommand("axioms", "Run the axiom checkers");
    add_input_flags(axioms_cmd, in);
    axioms_cmd->add_option("--index", indices, "Indices to check (repeatable)");
    axioms_cmd->add_option("--alpha", alpha_flag, "Parameter for the generalized index");
    axioms_cmd->add_option("--trials", trials, "Trials per axiom");
    axioms_cmd->add_option("--seed", seed, "Random seed");
    axioms_cmd->add_option("--out", out, "Write output to a file");

    auto* dom_cmd = app.add_subcommand("dominance", "List dominance pairs");
    add_input_flags(dom_cmd, in);
    dom_cmd->add_option("--emit", emit, "Output format: csv|json");
    dom_cmd->add_option("--out", out, "Write output to a file");

    auto* example_cmd = app.add_subcommand("example", "Print a fixture with its provenance");
    example_cmd->add_option("name", example_name, "Fixture name")->required();
    example_cmd->add_option("--out", out, "Write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::optional<double> alpha =
        alpha_flag > 0 ? std::optional<double>(alpha_flag) : std::nullopt;

    try {
        if (validate_cmd->parsed()) return cmd_validate(in, tol, out);
        if (rank_cmd->parsed())
            return cmd_rank(in, index, alpha, tol >= 0 ? tol : 1e-9, emit, out);
        if (sweep_cmd->parsed()) return cmd_sweep(in, amin, amax, steps, out);
        if (alpha_cmd->parsed()) return cmd_alpha(in, out);
        if (axioms_cmd->parsed()) return cmd_axioms(in, indices, alpha, trials, seed, out);
        if (dom_cmd->parsed()) return cmd_dominance(in, emit, out);
        if (example_cmd->parsed()) return cmd_example(example_name, out);
    } catch (const accnet::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const accnet::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const accnet::numeric_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
