#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "netcoop/experiment.hpp"

using namespace netcoop;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("netcoop_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

std::string karate_path() { return std::string(NETCOOP_DATA_DIR) + "/karate.edgelist"; }

ExperimentConfig karate_config(const std::string& out_dir) {
    ExperimentConfig cfg;
    cfg.dataset_path = karate_path();
    cfg.format = Format::EdgeList;
    cfg.seed = 42;
    cfg.output_dir = out_dir;
    return cfg;
}

} // namespace

TEST_SUITE("experiment") {

TEST_CASE("format parsing and inference") {
    CHECK(parse_format("edgelist") == Format::EdgeList);
    CHECK(parse_format("gml") == Format::Gml);
    CHECK_THROWS_AS(parse_format("csv"), std::invalid_argument);

    CHECK(infer_format("data/dolphins.gml") == Format::Gml);
    CHECK(infer_format("data/karate.edgelist") == Format::EdgeList);
    CHECK(infer_format("plain") == Format::EdgeList);

    CHECK(std::string(format_name(Format::Gml)) == "gml");
    CHECK(std::string(format_name(Format::EdgeList)) == "edgelist");
}

TEST_CASE("mode parsing") {
    CHECK(parse_average_mode("per-realization") == AverageMode::PerRealization);
    CHECK(parse_average_mode("pooled") == AverageMode::Pooled);
    CHECK_THROWS_AS(parse_average_mode("mean"), std::invalid_argument);
    CHECK(std::string(average_mode_name(AverageMode::PerRealization)) == "per-realization");

    CHECK(parse_strategy3_mode("var-vs-var") == Strategy3Mode::VarVsVar);
    CHECK(parse_strategy3_mode("var-vs-mean") == Strategy3Mode::VarVsMean);
    CHECK_THROWS_AS(parse_strategy3_mode("other"), std::invalid_argument);
    CHECK(std::string(strategy3_mode_name(Strategy3Mode::VarVsMean)) == "var-vs-mean");
}

TEST_CASE("dataset_stem strips directory and extension") {
    CHECK(dataset_stem("data/karate.edgelist") == "karate");
    CHECK(dataset_stem("/abs/path/dolphins.gml") == "dolphins");
    CHECK(dataset_stem("plain") == "plain");
}

TEST_CASE("config validation") {
    TempDir tmp;
    ExperimentConfig ok = karate_config(tmp.str());
    CHECK_NOTHROW(ok.validate());

    auto expect_invalid = [](ExperimentConfig c) {
        CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    };
    ExperimentConfig c = ok;
    c.dataset_path.clear();
    expect_invalid(c);
    c = ok;
    c.output_dir.clear();
    expect_invalid(c);
    c = ok;
    c.b = 1.0;
    expect_invalid(c);
    c = ok;
    c.time_window = 0;
    expect_invalid(c);
    c = ok;
    c.repetitions = 0;
    expect_invalid(c);
    c = ok;
    c.beta = 1.0;
    expect_invalid(c);
    c = ok;
    c.beta = 0.0;
    expect_invalid(c);
    c = ok;
    c.epsilon = -1e-12;
    expect_invalid(c);
    c = ok;
    c.algorithms.clear();
    expect_invalid(c);
}

TEST_CASE("trajectory checksum follows fnv-1a over header and snapshots") {
    Trajectory tr;
    tr.n = 2;
    tr.time_window = 1;
    tr.snapshots = {1, 0};
    tr.cooperativity = {0.5};

    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(2);
    mix(1);
    mix(1);
    mix(0);
    CHECK(trajectory_checksum({tr}) == h);

    // sensitive to every component
    Trajectory flip = tr;
    flip.snapshots = {0, 1};
    CHECK(trajectory_checksum({flip}) != trajectory_checksum({tr}));
    CHECK(trajectory_checksum({tr, tr}) != trajectory_checksum({tr}));
    CHECK(trajectory_checksum({}) == 14695981039346656037ULL);
}

TEST_CASE("trajectory checksum separates seeds and matches reruns") {
    Graph g = load_edge_list(karate_path(), false);
    GameParams p{1.8, 60, 4, 7};
    auto a = run_game(g, p);
    auto b = run_game(g, p);
    CHECK(trajectory_checksum(a) == trajectory_checksum(b));
    GameParams p2 = p;
    p2.seed = 8;
    CHECK(trajectory_checksum(run_game(g, p2)) != trajectory_checksum(a));
}

TEST_CASE("write_series_csv emits the documented layout") {
    TempDir tmp;
    CorrelationSeries s;
    s.values = {0.5, std::numeric_limits<double>::quiet_NaN(), 1.0 / 3.0};
    s.omitted = {1};
    std::string path = (tmp.path / "series.csv").string();
    write_series_csv(s, path);
    CHECK(slurp(path) ==
          "timestep,value,omitted\n"
          "1,0.5,0\n"
          "2,,1\n"
          "3,0.333333333333333,0\n");
}

TEST_CASE("write_series_csv handles an omitted first timestep") {
    TempDir tmp;
    CorrelationSeries s;
    s.values = {std::numeric_limits<double>::quiet_NaN(), 2.0};
    s.omitted = {0};
    std::string path = (tmp.path / "series.csv").string();
    write_series_csv(s, path);
    auto ls = lines_of(slurp(path));
    REQUIRE(ls.size() == 3);
    CHECK(ls[1] == "1,,1");
    CHECK(ls[2] == "2,2,0");
}

TEST_CASE("write_series_csv keeps at least 12 significant digits") {
    TempDir tmp;
    CorrelationSeries s;
    s.values = {0.6931471805599453, 3.4359891659686946e-8, 123.45678901234567, 1e-300};
    std::string path = (tmp.path / "series.csv").string();
    write_series_csv(s, path);
    auto ls = lines_of(slurp(path));
    REQUIRE(ls.size() == 5);
    for (std::size_t t = 0; t < s.values.size(); ++t) {
        std::string row = ls[t + 1];
        auto c1 = row.find(','), c2 = row.rfind(',');
        double parsed = std::stod(row.substr(c1 + 1, c2 - c1 - 1));
        CHECK(parsed == doctest::Approx(s.values[t]).epsilon(1e-12));
    }
}

TEST_CASE("write_series_csv rejects unwritable paths") {
    CorrelationSeries s;
    s.values = {1.0};
    CHECK_THROWS_AS(write_series_csv(s, "/nonexistent_dir_xyz/out.csv"), std::runtime_error);
}

TEST_CASE("stats command prints the summary block") {
    TempDir tmp;
    std::string path = (tmp.path / "triangle.edgelist").string();
    std::ofstream(path) << "a b\nb c\nc a\n";
    std::ostringstream os;
    GraphStats st = stats_command(path, Format::EdgeList, os);
    CHECK(os.str() ==
          "nodes: 3\n"
          "edges: 3\n"
          "half_edges: 6\n"
          "avg_degree: 2\n"
          "degree_std: 0\n"
          "clustering: 1\n");
    CHECK(st.node_count == 3);
    CHECK(st.edge_count == 3);
}

TEST_CASE("rank command prints raw and normalized columns") {
    TempDir tmp;
    std::string path = (tmp.path / "triangle.edgelist").string();
    std::ofstream(path) << "a b\nb c\nc a\n";
    std::ostringstream os;
    rank_command(path, Format::EdgeList, Algorithm::SD, os);
    CHECK(os.str() ==
          "node_index,raw,normalized\n"
          "0,2,0.5\n"
          "1,2,0.5\n"
          "2,2,0.5\n");
}

TEST_CASE("run_experiment writes one series per algorithm-strategy pair") {
    TempDir tmp;
    ExperimentConfig cfg = karate_config((tmp.path / "out").string());
    RunManifest man = run_experiment(cfg);

    REQUIRE(man.files.size() == 18); // 6 algorithms x 3 strategies
    CHECK(man.stats.node_count == 34);
    CHECK(man.stats.edge_count == 78);
    CHECK(man.trajectory_checksum != 0);
    CHECK(man.duration_seconds >= 0);
    CHECK(man.version == std::string(kVersion));

    const char* algs[] = {"sd", "pagerank", "hits", "cl", "bw", "cc"};
    const char* strats[] = {"hamming", "klmean", "klvar"};
    std::size_t k = 0;
    for (const char* a : algs)
        for (const char* s : strats) {
            fs::path expect = tmp.path / "out" /
                              (std::string("karate.") + a + "." + s + ".csv");
            CHECK(man.files[k++] == expect.string());
            REQUIRE(fs::exists(expect));
            auto ls = lines_of(slurp(expect));
            CHECK(ls.size() == 501); // header + one row per timestep
            CHECK(ls[0] == "timestep,value,omitted");
            CHECK(ls[1].rfind("1,", 0) == 0);
            CHECK(ls[500].rfind("500,", 0) == 0);
        }

    REQUIRE(fs::exists(man.manifest_path));
    std::string manifest = slurp(man.manifest_path);
    CHECK(manifest.find("netcoop run manifest") != std::string::npos);
    CHECK(manifest.find("seed: 42") != std::string::npos);
    CHECK(manifest.find("b: 1.8") != std::string::npos);
    CHECK(manifest.find("nodes: 34") != std::string::npos);
    CHECK(manifest.find("series_files: 18") != std::string::npos);
    CHECK(manifest.find("karate.cc.klvar.csv") != std::string::npos);
}

TEST_CASE("run_experiment honors the algorithm subset") {
    TempDir tmp;
    ExperimentConfig cfg = karate_config((tmp.path / "out").string());
    cfg.algorithms = {Algorithm::SD};
    cfg.time_window = 50;
    cfg.repetitions = 2;
    RunManifest man = run_experiment(cfg);
    REQUIRE(man.files.size() == 3);
    CHECK(fs::exists(tmp.path / "out" / "karate.sd.hamming.csv"));
    CHECK(fs::exists(tmp.path / "out" / "karate.sd.klmean.csv"));
    CHECK(fs::exists(tmp.path / "out" / "karate.sd.klvar.csv"));
    CHECK(!fs::exists(tmp.path / "out" / "karate.pagerank.hamming.csv"));
}

TEST_CASE("reruns produce byte-identical series files") {
    TempDir tmp;
    ExperimentConfig a = karate_config((tmp.path / "a").string());
    ExperimentConfig b = karate_config((tmp.path / "b").string());
    RunManifest ma = run_experiment(a);
    RunManifest mb = run_experiment(b);
    REQUIRE(ma.files.size() == mb.files.size());
    CHECK(ma.trajectory_checksum == mb.trajectory_checksum);
    for (std::size_t i = 0; i < ma.files.size(); ++i)
        CHECK(slurp(ma.files[i]) == slurp(mb.files[i]));
}

TEST_CASE("results do not depend on the worker thread count") {
    TempDir tmp;
    ExperimentConfig cfg = karate_config((tmp.path / "t1").string());
    cfg.algorithms = {Algorithm::PageRank};
    cfg.time_window = 200;
    cfg.repetitions = 4;

    ::setenv("NETCOOP_THREADS", "1", 1);
    RunManifest m1 = run_experiment(cfg);
    cfg.output_dir = (tmp.path / "t4").string();
    ::setenv("NETCOOP_THREADS", "4", 1);
    RunManifest m4 = run_experiment(cfg);
    ::unsetenv("NETCOOP_THREADS");

    CHECK(m1.trajectory_checksum == m4.trajectory_checksum);
    REQUIRE(m1.files.size() == m4.files.size());
    for (std::size_t i = 0; i < m1.files.size(); ++i)
        CHECK(slurp(m1.files[i]) == slurp(m4.files[i]));
}

TEST_CASE("failed runs remove partial outputs") {
    TempDir tmp;
    ExperimentConfig cfg = karate_config((tmp.path / "out").string());
    cfg.algorithms = {Algorithm::SD, Algorithm::HITS};
    cfg.time_window = 30;
    cfg.repetitions = 2;

    // a directory squatting on a later output path makes its open fail
    fs::create_directories(tmp.path / "out" / "karate.hits.hamming.csv");

    bool threw = false;
    try {
        run_experiment(cfg);
    } catch (const std::runtime_error& e) {
        threw = true;
        std::string msg = e.what();
        CHECK(msg.find("run failed [write hits]") != std::string::npos);
        CHECK(msg.find("karate.edgelist") != std::string::npos);
    }
    CHECK(threw);
    CHECK(!fs::exists(tmp.path / "out" / "karate.sd.hamming.csv"));
    CHECK(!fs::exists(tmp.path / "out" / "karate.sd.klmean.csv"));
    CHECK(!fs::exists(tmp.path / "out" / "karate.sd.klvar.csv"));
    CHECK(!fs::exists(tmp.path / "out" / "manifest.txt"));
}

TEST_CASE("run_experiment rejects invalid configs up front") {
    ExperimentConfig cfg;
    cfg.dataset_path = karate_path();
    cfg.seed = 1;
    // output_dir left empty
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}

TEST_CASE("run_experiment wraps loader failures with stage context") {
    TempDir tmp;
    ExperimentConfig cfg = karate_config((tmp.path / "out").string());
    cfg.dataset_path = (tmp.path / "missing.edgelist").string();
    bool threw = false;
    try {
        run_experiment(cfg);
    } catch (const std::runtime_error& e) {
        threw = true;
        CHECK(std::string(e.what()).find("run failed [load]") != std::string::npos);
    }
    CHECK(threw);
}

} // TEST_SUITE
