#include "netcoop/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace netcoop {

namespace fs = std::filesystem;

Format parse_format(const std::string& token) {
    if (token == "edgelist") return Format::EdgeList;
    if (token == "gml") return Format::Gml;
    throw std::invalid_argument("unknown format '" + token + "' (expected edgelist or gml)");
}

Format infer_format(const std::string& path) {
    return fs::path(path).extension() == ".gml" ? Format::Gml : Format::EdgeList;
}

const char* format_name(Format f) { return f == Format::Gml ? "gml" : "edgelist"; }

AverageMode parse_average_mode(const std::string& token) {
    if (token == "per-realization") return AverageMode::PerRealization;
    if (token == "pooled") return AverageMode::Pooled;
    throw std::invalid_argument("unknown average mode '" + token +
                                "' (expected per-realization or pooled)");
}

const char* average_mode_name(AverageMode m) {
    return m == AverageMode::Pooled ? "pooled" : "per-realization";
}

Strategy3Mode parse_strategy3_mode(const std::string& token) {
    if (token == "var-vs-var") return Strategy3Mode::VarVsVar;
    if (token == "var-vs-mean") return Strategy3Mode::VarVsMean;
    throw std::invalid_argument("unknown strategy3 mode '" + token +
                                "' (expected var-vs-var or var-vs-mean)");
}

const char* strategy3_mode_name(Strategy3Mode m) {
    return m == Strategy3Mode::VarVsMean ? "var-vs-mean" : "var-vs-var";
}

void ExperimentConfig::validate() const {
    if (dataset_path.empty()) throw std::invalid_argument("config: dataset path required");
    if (output_dir.empty()) throw std::invalid_argument("config: output directory required");
    if (!(b > 1.0)) throw std::invalid_argument("config: b must be > 1");
    if (time_window < 1) throw std::invalid_argument("config: time_window must be >= 1");
    if (repetitions < 1) throw std::invalid_argument("config: repetitions must be >= 1");
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("config: beta must be in (0,1)");
    if (epsilon < 0.0) throw std::invalid_argument("config: epsilon must be >= 0");
    if (algorithms.empty()) throw std::invalid_argument("config: no algorithms selected");
}

Graph load_dataset(const std::string& path, Format format, bool directed) {
    return format == Format::Gml ? load_gml(path) : load_edge_list(path, directed);
}

std::string dataset_stem(const std::string& path) {
    std::string stem = fs::path(path).stem().string();
    return stem.empty() ? std::string("dataset") : stem;
}

std::uint64_t trajectory_checksum(const std::vector<Trajectory>& trajs) {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    for (const auto& tr : trajs) {
        mix(static_cast<std::uint64_t>(tr.n));
        mix(static_cast<std::uint64_t>(tr.time_window));
        for (std::uint8_t byte : tr.snapshots) mix(byte);
    }
    return h;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

RankVector compute_rank(const Graph& g, Algorithm a, double beta) {
    switch (a) {
        case Algorithm::SD: return simple_degree(g);
        case Algorithm::PageRank: return pagerank(g, beta);
        case Algorithm::HITS: return hits(g);
        case Algorithm::CL: return closeness(g);
        case Algorithm::BW: return betweenness(g);
        case Algorithm::CC: return clustering_coefficient(g);
    }
    throw std::logic_error("unhandled algorithm");
}

void print_stats(const GraphStats& s, std::ostream& os) {
    os << "nodes: " << s.node_count << '\n'
       << "edges: " << s.edge_count << '\n'
       << "half_edges: " << 2 * s.edge_count << '\n'
       << "avg_degree: " << fmt_double(s.avg_degree) << '\n'
       << "degree_std: " << fmt_double(s.degree_std) << '\n'
       << "clustering: " << fmt_double(s.mean_clustering) << '\n';
}

} // namespace

void write_series_csv(const CorrelationSeries& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "timestep,value,omitted\n";
    std::size_t next_omit = 0;
    for (std::size_t t = 0; t < s.values.size(); ++t) {
        bool omitted = next_omit < s.omitted.size() &&
                       s.omitted[next_omit] == static_cast<int>(t);
        if (omitted) {
            ++next_omit;
            out << (t + 1) << ",,1\n";
        } else {
            out << (t + 1) << ',' << fmt_double(s.values[t]) << ",0\n";
        }
    }
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

RunManifest run_experiment(const ExperimentConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    cfg.validate();

    RunManifest man;
    man.config = cfg;

    std::string stage = "load";
    std::vector<std::string> written;
    try {
        Graph loaded = load_dataset(cfg.dataset_path, cfg.format, cfg.directed);
        Graph game_g = symmetrize(loaded);
        const Graph& rank_g = cfg.symmetrize ? game_g : loaded;
        man.stats = stats(game_g);

        stage = "game";
        GameParams params{cfg.b, cfg.time_window, cfg.repetitions, cfg.seed};
        std::vector<Trajectory> trajs = run_game(game_g, params);
        man.trajectory_checksum = trajectory_checksum(trajs);

        stage = "output-dir";
        fs::create_directories(cfg.output_dir);
        const std::string stem = dataset_stem(cfg.dataset_path);

        for (Algorithm a : cfg.algorithms) {
            stage = std::string("rank ") + algorithm_name(a);
            RankVector rank = compute_rank(rank_g, a, cfg.beta);

            stage = std::string("series ") + algorithm_name(a);
            CorrelationSeries series[3];
            series[0] = strategy1_series(game_g, binarize(rank), trajs, cfg.average_mode);
            series[0].algorithm = a;
            series[1] = strategy2_series(game_g, rank, trajs, cfg.epsilon, cfg.average_mode);
            series[2] = strategy3_series(game_g, rank, trajs, cfg.epsilon, cfg.strategy3_mode,
                                         cfg.average_mode);

            stage = std::string("write ") + algorithm_name(a);
            for (const CorrelationSeries& s : series) {
                std::string name =
                    stem + "." + algorithm_name(a) + "." + strategy_name(s.strategy) + ".csv";
                std::string path = (fs::path(cfg.output_dir) / name).string();
                write_series_csv(s, path);
                written.push_back(path);
                man.files.push_back(path);
            }
        }
    } catch (const std::exception& e) {
        for (const std::string& p : written) {
            std::error_code ec;
            fs::remove(p, ec);
        }
        throw std::runtime_error("run failed [" + stage + "] on '" + cfg.dataset_path +
                                 "': " + e.what());
    }

    man.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string alg_list;
    for (Algorithm a : cfg.algorithms) {
        if (!alg_list.empty()) alg_list += ',';
        alg_list += algorithm_name(a);
    }

    man.manifest_path = (fs::path(cfg.output_dir) / "manifest.txt").string();
    std::ofstream mf(man.manifest_path, std::ios::binary);
    if (!mf) throw std::runtime_error("cannot open '" + man.manifest_path + "' for writing");
    mf << "netcoop run manifest\n"
       << "version: " << man.version << '\n'
       << "dataset: " << cfg.dataset_path << '\n'
       << "format: " << format_name(cfg.format) << '\n'
       << "directed_input: " << (cfg.directed ? 1 : 0) << '\n'
       << "symmetrize: " << (cfg.symmetrize ? 1 : 0) << '\n'
       << "algorithms: " << alg_list << '\n'
       << "b: " << fmt_double(cfg.b) << '\n'
       << "time_window: " << cfg.time_window << '\n'
       << "repetitions: " << cfg.repetitions << '\n'
       << "seed: " << cfg.seed << '\n'
       << "beta: " << fmt_double(cfg.beta) << '\n'
       << "epsilon: " << fmt_double(cfg.epsilon) << '\n'
       << "average_mode: " << average_mode_name(cfg.average_mode) << '\n'
       << "strategy3_mode: " << strategy3_mode_name(cfg.strategy3_mode) << '\n';
    print_stats(man.stats, mf);
    char csum[32];
    std::snprintf(csum, sizeof(csum), "%016llx",
                  static_cast<unsigned long long>(man.trajectory_checksum));
    mf << "trajectory_checksum: " << csum << '\n'
       << "duration_seconds: " << fmt_double(man.duration_seconds) << '\n'
       << "series_files: " << man.files.size() << '\n';
    for (const std::string& p : man.files) mf << "  " << fs::path(p).filename().string() << '\n';
    if (!mf) throw std::runtime_error("write failed for '" + man.manifest_path + "'");
    return man;
}

GraphStats stats_command(const std::string& dataset_path, Format format, std::ostream& os) {
    Graph g = load_dataset(dataset_path, format, false);
    GraphStats s = stats(g);
    print_stats(s, os);
    return s;
}

void rank_command(const std::string& dataset_path, Format format, Algorithm a, std::ostream& os) {
    Graph g = symmetrize(load_dataset(dataset_path, format, false));
    RankVector r = compute_rank(g, a, 0.85);
    os << "node_index,raw,normalized\n";
    for (std::size_t i = 0; i < r.values.size(); ++i)
        os << i << ',' << fmt_double(r.values[i]) << ',' << fmt_double(r.normalized[i]) << '\n';
}

} // namespace netcoop
