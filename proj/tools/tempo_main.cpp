#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tempo/design.hpp"
#include "tempo/graph_io.hpp"
#include "tempo/hardness.hpp"
#include "tempo/random_temporal.hpp"
#include "tempo/reachability.hpp"
#include "tempo/removal.hpp"
#include "tempo/temporal_graph.hpp"

using nlohmann::json;

namespace {

tempo::XorFormula load_formula(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return tempo::parse_formula(in);
}

json removed_pairs(const std::vector<std::pair<tempo::Edge, tempo::Label>>& removed) {
    json out = json::array();
    for (const auto& [edge, label] : removed) out.push_back({edge.first, edge.second, label});
    return out;
}

json router_record(const tempo::RouterReport& r) {
    json rec{{"n", r.n},
             {"model", r.clique ? "clique" : "gnp"},
             {"alpha", r.alpha},
             {"seed", r.seed},
             {"kept_labels", r.kept_labels},
             {"tc", r.tc_verdict}};
    if (r.clique) {
        rec["gamma"] = r.gamma;
        rec["lane_count"] = r.path_count;
    } else {
        rec["p"] = r.p;
        rec["theta_count"] = r.path_count;
        rec["unattached"] = r.unattached;
    }
    return rec;
}

int run(int argc, char** argv) {
    CLI::App app{"design, verify and sparsify temporally connected graphs"};
    app.require_subcommand(1);

    std::string path, formula_path, bits;
    int source = 0, start_time = 0, root = 0, k = 0, n = 0, alpha = 0, trials = 1;
    unsigned threads = 1;
    std::uint64_t seed = 0, node_budget = 0;
    double gamma = 1.0, p = 0.5;
    bool greedy = false, exact = false, clique = false, gnp = false;

    auto* check = app.add_subcommand("check-tc", "verify temporal connectivity");
    check->add_option("file", path)->required();
    check->add_option("--threads", threads);

    auto* fm = app.add_subcommand("foremost", "earliest arrivals from a source");
    fm->add_option("file", path)->required();
    fm->add_option("--source", source)->required();
    fm->add_option("--start-time", start_time);

    auto* design = app.add_subcommand("design", "label a spanning tree of the input graph");
    design->add_option("file", path)->required();
    design->add_option("--root", root);

    auto* cube = app.add_subcommand("hypercube", "single-labelled hypercube design");
    cube->add_option("k", k)->required();

    auto* reduce = app.add_subcommand("reduce-clique", "drop one label per group of four");
    reduce->add_option("file", path)->required();

    auto* removal = app.add_subcommand("removal", "remove labels, keep connectivity");
    removal->add_option("file", path)->required();
    removal->add_flag("--greedy", greedy);
    removal->add_flag("--exact", exact);
    auto* removal_seed = removal->add_option("--seed", seed);
    removal->add_option("--node-budget", node_budget);

    auto* gadget = app.add_subcommand("gadget", "reduction graph of a monotone XOR formula");
    gadget->add_option("formula", formula_path)->required();

    auto* assign = app.add_subcommand("assign", "labelling induced by an assignment");
    assign->add_option("formula", formula_path)->required();
    assign->add_option("bits", bits)->required();

    auto* sparsify = app.add_subcommand("sparsify", "router-based label sparsification trials");
    sparsify->add_flag("--clique", clique);
    sparsify->add_flag("--gnp", gnp);
    sparsify->add_option("--n", n)->required();
    sparsify->add_option("--alpha", alpha)->required();
    sparsify->add_option("--gamma", gamma);
    sparsify->add_option("--p", p);
    sparsify->add_option("--trials", trials);
    sparsify->add_option("--seed", seed)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (check->parsed()) {
        auto g = tempo::load_graph_file(path);
        auto report = tempo::temporal_connectivity_report(g);
        json out{{"tc", report.tc}, {"witness_failures", json::array()}};
        for (const auto& [u, v] : report.failures) out["witness_failures"].push_back({u, v});
        std::cout << out.dump(2) << '\n';
        return report.tc ? 0 : 1;
    }
    if (fm->parsed()) {
        auto g = tempo::load_graph_file(path);
        auto res = tempo::foremost(g, source, start_time);
        json arrival = json::object(), journeys = json::object();
        for (tempo::Vertex v = 0; v < g.vertex_count(); ++v) {
            std::string key = std::to_string(v);
            arrival[key] = res.arrival[v] ? json(*res.arrival[v]) : json(nullptr);
            if (auto j = tempo::reconstruct(res, v)) {
                json steps = json::array();
                for (const auto& step : j->steps) steps.push_back({step.from, step.to, step.label});
                journeys[key] = steps;
            }
        }
        json out{{"source", source},
                 {"start_time", start_time},
                 {"arrival", arrival},
                 {"journeys", journeys}};
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (design->parsed()) {
        auto g = tempo::load_graph_file(path);
        tempo::write_graph(std::cout, tempo::spanning_tree_labelling(g, root).labelling);
        return 0;
    }
    if (cube->parsed()) {
        tempo::write_graph(std::cout, tempo::hypercube_design(k).labelling);
        return 0;
    }
    if (reduce->parsed()) {
        auto g = tempo::load_graph_file(path);
        tempo::write_graph(std::cout, tempo::clique_slse_reduce(g));
        return 0;
    }
    if (removal->parsed()) {
        if (greedy == exact) throw CLI::ValidationError("removal", "pick one of --greedy/--exact");
        if (greedy && !*removal_seed)
            throw CLI::ValidationError("removal", "--greedy needs --seed");
        auto g = tempo::load_graph_file(path);
        tempo::RemovalResult result;
        if (greedy) {
            result = tempo::greedy_removal(g, seed);
        } else {
            tempo::ExactOptions options;
            options.order_seed = seed;
            if (node_budget > 0) options.node_budget = node_budget;
            result = tempo::removal_profit_exact(g, options);
        }
        json out{{"mode", greedy ? "greedy" : "exact"},
                 {"profit", result.profit},
                 {"exact", result.exact},
                 {"removed", removed_pairs(result.removed)},
                 {"residual_cost", tempo::cost(result.residual)}};
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (gadget->parsed()) {
        tempo::write_graph(std::cout, tempo::build_gadget(load_formula(formula_path)).graph);
        return 0;
    }
    if (assign->parsed()) {
        auto phi = load_formula(formula_path);
        if (static_cast<int>(bits.size()) != phi.variable_count)
            throw std::runtime_error("assignment needs one bit per variable");
        tempo::Assignment tau;
        for (char c : bits) {
            if (c != '0' && c != '1') throw std::runtime_error("assignment bits must be 0 or 1");
            tau.push_back(c == '1');
        }
        tempo::write_graph(std::cout, tempo::assignment_to_labelling(phi, tau));
        return 0;
    }
    if (sparsify->parsed()) {
        if (clique == gnp) throw CLI::ValidationError("sparsify", "pick one of --clique/--gnp");
        if (trials < 1) throw CLI::ValidationError("sparsify", "trials must be positive");
        json records = json::array();
        long long successes = 0, kept_total = 0, paths_total = 0;
        for (int trial = 0; trial < trials; ++trial) {
            std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);
            tempo::RouterReport report =
                clique ? tempo::clique_router_sparsify(n, alpha, gamma, trial_seed).second
                       : tempo::gnp_router_sparsify(n, p, alpha, trial_seed).second;
            records.push_back(router_record(report));
            successes += report.tc_verdict;
            kept_total += report.kept_labels;
            paths_total += report.path_count;
        }
        json out{{"trials", records},
                 {"aggregate",
                  {{"success_rate", static_cast<double>(successes) / trials},
                   {"mean_kept_labels", static_cast<double>(kept_total) / trials},
                   {"mean_path_count", static_cast<double>(paths_total) / trials}}}};
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
