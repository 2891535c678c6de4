// Command-line front end: structural predictions, brute-force component
// analysis, witness queries, and config-driven sweeps. One JSON object per
// command on stdout; exit 0 = success/match, 1 = mismatch found, 2 = error.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fslab/explorer.hpp"
#include "fslab/graph.hpp"
#include "fslab/harness.hpp"
#include "fslab/oracle.hpp"
#include "fslab/perm.hpp"

namespace {

using nlohmann::ordered_json;

int cmd_predict(const std::string& g6, const std::string& part) {
    fslab::Graph x = fslab::parse_graph6(g6, fslab::Graph::max_vertices);
    fslab::Partition p = fslab::Partition::parse(part);
    ordered_json out{
        {"graph6", fslab::encode_graph6(x)},
        {"partition", p.to_string()},
        {"profile", fslab::profile_json(fslab::classify(x))},
        {"prediction", fslab::prediction_json(fslab::predict(x, p))},
    };
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_brute(const std::string& g6, const std::string& part, int max_n) {
    fslab::Graph x = fslab::parse_graph6(g6, max_n);
    fslab::Partition p = fslab::Partition::parse(part);
    fslab::ComponentSummary summary =
        fslab::component_count(x, fslab::complete_multipartite(p), max_n);
    std::cout << fslab::summary_json(summary).dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& g6, const std::string& part, int max_n) {
    fslab::Graph x = fslab::parse_graph6(g6, max_n);
    fslab::Partition p = fslab::Partition::parse(part);
    fslab::Prediction pred = fslab::predict(x, p);
    fslab::ComponentSummary brute =
        fslab::component_count(x, fslab::complete_multipartite(p), max_n);
    bool match = fslab::prediction_matches(pred, brute.count());
    ordered_json out{
        {"graph6", fslab::encode_graph6(x)},
        {"partition", p.to_string()},
        {"prediction", fslab::prediction_json(pred)},
        {"brute_count", brute.count()},
        {"component_sizes", brute.sizes()},
        {"match", match},
    };
    std::cout << out.dump() << "\n";
    return match ? 0 : 1;
}

int cmd_kappa(const std::string& g6) {
    fslab::Graph x = fslab::parse_graph6(g6, fslab::Graph::max_vertices);
    std::optional<int> k = fslab::kappa(x);
    ordered_json out{{"graph6", fslab::encode_graph6(x)}};
    if (k)
        out["kappa"] = *k;
    else
        out["kappa"] = "infinity";
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_path(const std::string& g6, const std::string& part, const std::string& sigma_csv,
             const std::string& target_csv, int max_n) {
    fslab::Graph x = fslab::parse_graph6(g6, max_n);
    fslab::Partition p = fslab::Partition::parse(part);
    fslab::Perm from = fslab::Perm::parse(sigma_csv);
    fslab::Perm to = fslab::Perm::parse(target_csv);
    auto path = fslab::swap_path(x, fslab::complete_multipartite(p), from, to, max_n);
    ordered_json out{{"graph6", fslab::encode_graph6(x)}, {"partition", p.to_string()},
                     {"from", from.to_string()},          {"to", to.to_string()},
                     {"found", path.has_value()}};
    if (path) {
        out["length"] = path->edges.size();
        ordered_json steps = ordered_json::array();
        for (auto [a, b] : path->edges) steps.push_back(ordered_json::array({a, b}));
        out["edges"] = std::move(steps);
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_exchangeable(const std::string& g6, const std::string& part, int u, int v,
                     const std::string& sigma_csv, int max_n) {
    fslab::Graph x = fslab::parse_graph6(g6, max_n);
    fslab::Partition p = fslab::Partition::parse(part);
    fslab::Perm sigma = fslab::Perm::parse(sigma_csv);
    bool ok = fslab::exchangeable(x, fslab::complete_multipartite(p), u, v, sigma, max_n);
    ordered_json out{{"graph6", fslab::encode_graph6(x)},
                     {"partition", p.to_string()},
                     {"u", u},
                     {"v", v},
                     {"sigma", sigma.to_string()},
                     {"exchangeable", ok}};
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_sweep(const std::string& config_path) {
    fslab::SweepConfig cfg = fslab::SweepConfig::parse_file(config_path);
    fslab::Report report = fslab::run_sweep(cfg);
    std::string rendered = report.render(cfg.format);
    if (cfg.output.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + cfg.output);
        out << rendered;
    }
    return report.mismatches() > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"friends-and-strangers graph laboratory"};
    app.require_subcommand(1);

    std::string g6, part, sigma_csv, target_csv, config_path;
    int u = 0, v = 0;
    int max_n = fslab::explorer_vertex_cap;

    CLI::App* predict = app.add_subcommand("predict", "structural connectivity prediction");
    predict->add_option("graph6", g6, "graph6 code of X")->required();
    predict->add_option("partition", part, "target class sizes, e.g. 1,2,3")->required();

    CLI::App* brute = app.add_subcommand("brute", "exhaustive component analysis");
    brute->add_option("graph6", g6)->required();
    brute->add_option("partition", part)->required();
    brute->add_option("--max-n", max_n, "state-space vertex cap");

    CLI::App* verify = app.add_subcommand("verify", "prediction vs brute force");
    verify->add_option("graph6", g6)->required();
    verify->add_option("partition", part)->required();
    verify->add_option("--max-n", max_n, "state-space vertex cap");

    CLI::App* kappa_cmd = app.add_subcommand("kappa", "least connecting book parameter");
    kappa_cmd->add_option("graph6", g6)->required();

    CLI::App* path = app.add_subcommand("path", "shortest friendly-swap sequence");
    path->add_option("graph6", g6)->required();
    path->add_option("partition", part)->required();
    path->add_option("from", sigma_csv, "start bijection, e.g. 2,0,1,3")->required();
    path->add_option("to", target_csv, "target bijection")->required();
    path->add_option("--max-n", max_n, "state-space vertex cap");

    CLI::App* exch = app.add_subcommand("exchangeable", "can u and v be swapped from sigma");
    exch->add_option("graph6", g6)->required();
    exch->add_option("partition", part)->required();
    exch->add_option("u", u)->required();
    exch->add_option("v", v)->required();
    exch->add_option("sigma", sigma_csv)->required();
    exch->add_option("--max-n", max_n, "state-space vertex cap");

    CLI::App* sweep = app.add_subcommand("sweep", "config-driven oracle-vs-brute sweep");
    sweep->add_option("--config", config_path, "key=value or JSON config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (predict->parsed()) return cmd_predict(g6, part);
        if (brute->parsed()) return cmd_brute(g6, part, max_n);
        if (verify->parsed()) return cmd_verify(g6, part, max_n);
        if (kappa_cmd->parsed()) return cmd_kappa(g6);
        if (path->parsed()) return cmd_path(g6, part, sigma_csv, target_csv, max_n);
        if (exch->parsed()) return cmd_exchangeable(g6, part, u, v, sigma_csv, max_n);
        if (sweep->parsed()) return cmd_sweep(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
