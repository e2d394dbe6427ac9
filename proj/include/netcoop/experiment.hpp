#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netcoop/correlation.hpp"
#include "netcoop/graph.hpp"
#include "netcoop/pd_game.hpp"
#include "netcoop/ranking.hpp"

namespace netcoop {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { EdgeList, Gml };

Format parse_format(const std::string& token);      // edgelist | gml
Format infer_format(const std::string& path);       // .gml -> Gml, else EdgeList
const char* format_name(Format f);

AverageMode parse_average_mode(const std::string& token);   // per-realization | pooled
const char* average_mode_name(AverageMode m);
Strategy3Mode parse_strategy3_mode(const std::string& token); // var-vs-var | var-vs-mean
const char* strategy3_mode_name(Strategy3Mode m);

struct ExperimentConfig {
    std::string dataset_path;
    Format format = Format::EdgeList;
    bool directed = false;       // edge-list loader hint; GML declares itself
    bool symmetrize = true;      // ranking view; the game always runs symmetrized
    std::vector<Algorithm> algorithms{std::begin(kAllAlgorithms), std::end(kAllAlgorithms)};
    double b = 1.8;
    int time_window = 500;
    int repetitions = 10;
    std::uint64_t seed = 0;
    double beta = 0.85;
    double epsilon = 1e-9;
    AverageMode average_mode = AverageMode::PerRealization;
    Strategy3Mode strategy3_mode = Strategy3Mode::VarVsVar;
    std::string output_dir;

    void validate() const; // throws std::invalid_argument
};

struct RunManifest {
    ExperimentConfig config;
    GraphStats stats;
    std::vector<std::string> files;   // 3 * |algorithms| series CSVs, in write order
    std::uint64_t trajectory_checksum = 0;
    double duration_seconds = 0;
    std::string version = kVersion;
    std::string manifest_path;
};

Graph load_dataset(const std::string& path, Format format, bool directed);

// "karate.edgelist" -> "karate"
std::string dataset_stem(const std::string& path);

// FNV-1a over every snapshot byte of every realization, in order
std::uint64_t trajectory_checksum(const std::vector<Trajectory>& trajs);

// header "timestep,value,omitted", 1-based timesteps, %.15g values,
// omitted rows as "t,,1"
void write_series_csv(const CorrelationSeries& s, const std::string& path);

RunManifest run_experiment(const ExperimentConfig& cfg);

GraphStats stats_command(const std::string& dataset_path, Format format, std::ostream& os);

void rank_command(const std::string& dataset_path, Format format, Algorithm a, std::ostream& os);

} // namespace netcoop
