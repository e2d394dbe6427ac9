#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netcoop/experiment.hpp"

namespace {

std::vector<netcoop::Algorithm> parse_algorithm_list(const std::string& csv) {
    std::vector<netcoop::Algorithm> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty algorithm token in '" + csv + "'");
        netcoop::Algorithm a = netcoop::parse_algorithm(tok);
        for (netcoop::Algorithm seen : out)
            if (seen == a) throw std::invalid_argument("duplicate algorithm '" + tok + "'");
        out.push_back(a);
    }
    if (out.empty()) throw std::invalid_argument("--algorithms requires at least one algorithm");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank networks, run an evolutionary prisoner's dilemma on them, and "
                 "correlate rank with cooperativity"};
    app.require_subcommand(1);

    std::string dataset, format, out_dir, algorithms = "sd,pagerank,hits,cl,bw,cc";
    std::string average_mode = "per-realization", strategy3_mode = "var-vs-var";
    std::string rank_algorithm, rank_format;
    bool directed = false, no_symmetrize = false;
    double b = 0, beta = 0.85, epsilon = 1e-9;
    int time_window = 500, reps = 10;
    std::uint64_t seed = 0;

    CLI::App* run = app.add_subcommand("run", "full pipeline: rank, simulate, write series CSVs");
    run->add_option("--dataset", dataset, "dataset file")->required();
    run->add_option("--format", format, "edgelist or gml")
        ->required()
        ->check(CLI::IsMember({"edgelist", "gml"}));
    run->add_flag("--directed", directed, "treat edge-list input as directed");
    run->add_flag("--no-symmetrize", no_symmetrize,
                  "rank on the raw directed view (the game always symmetrizes)");
    run->add_option("--b", b, "temptation payoff, > 1")->required();
    run->add_option("--time-window", time_window, "timesteps per realization");
    run->add_option("--reps", reps, "independent realizations");
    run->add_option("--seed", seed, "base RNG seed")->required();
    run->add_option("--beta", beta, "pagerank damping");
    run->add_option("--epsilon", epsilon, "KL smoothing");
    run->add_option("--algorithms", algorithms, "comma list of sd,pagerank,hits,cl,bw,cc");
    run->add_option("--average-mode", average_mode, "per-realization or pooled")
        ->check(CLI::IsMember({"per-realization", "pooled"}));
    run->add_option("--strategy3-mode", strategy3_mode, "var-vs-var or var-vs-mean")
        ->check(CLI::IsMember({"var-vs-var", "var-vs-mean"}));
    run->add_option("--out", out_dir, "output directory")->required();

    CLI::App* stats = app.add_subcommand("stats", "print dataset statistics");
    stats->add_option("--dataset", dataset, "dataset file")->required();
    stats->add_option("--format", format, "edgelist or gml")
        ->required()
        ->check(CLI::IsMember({"edgelist", "gml"}));

    CLI::App* rank = app.add_subcommand("rank", "print one rank vector as CSV");
    rank->add_option("--dataset", dataset, "dataset file")->required();
    rank->add_option("--algorithm", rank_algorithm, "sd, pagerank, hits, cl, bw or cc")
        ->required();
    rank->add_option("--format", rank_format, "edgelist or gml (default: from extension)")
        ->check(CLI::IsMember({"edgelist", "gml"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            netcoop::ExperimentConfig cfg;
            cfg.dataset_path = dataset;
            cfg.format = netcoop::parse_format(format);
            cfg.directed = directed;
            cfg.symmetrize = !no_symmetrize;
            cfg.algorithms = parse_algorithm_list(algorithms);
            cfg.b = b;
            cfg.time_window = time_window;
            cfg.repetitions = reps;
            cfg.seed = seed;
            cfg.beta = beta;
            cfg.epsilon = epsilon;
            cfg.average_mode = netcoop::parse_average_mode(average_mode);
            cfg.strategy3_mode = netcoop::parse_strategy3_mode(strategy3_mode);
            cfg.output_dir = out_dir;
            netcoop::RunManifest man = netcoop::run_experiment(cfg);
            std::cout << "wrote " << man.files.size() << " series files and " << man.manifest_path
                      << " in " << man.duration_seconds << " s\n";
        } else if (stats->parsed()) {
            netcoop::stats_command(dataset, netcoop::parse_format(format), std::cout);
        } else if (rank->parsed()) {
            netcoop::Format f = rank_format.empty() ? netcoop::infer_format(dataset)
                                                    : netcoop::parse_format(rank_format);
            netcoop::rank_command(dataset, f, netcoop::parse_algorithm(rank_algorithm),
                                  std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "netcoop: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
