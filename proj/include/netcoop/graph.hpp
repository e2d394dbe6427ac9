#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netcoop {

// Immutable after construction; safe to share across threads. Node ids are
// dense 0..n-1 (input labels are mapped in first-appearance order). Simple
// graph only: self-loops and duplicate edges are dropped at load time.
//
// Adjacency is CSR. For directed graphs three views are kept: out-, in-, and
// the symmetrized undirected view (degree/#d_i always means the undirected
// view). For undirected graphs the three views are the same arrays.
struct Graph {
    int n = 0;
    bool directed = false;
    std::vector<std::pair<int, int>> edges; // deduplicated; undirected edges stored once as (min,max)

    std::vector<std::int64_t> out_off, in_off, und_off;
    std::vector<std::int32_t> out_adj, in_adj, und_adj;

    std::span<const std::int32_t> out(int i) const {
        return {out_adj.data() + out_off[i], static_cast<std::size_t>(out_off[i + 1] - out_off[i])};
    }
    std::span<const std::int32_t> in(int i) const {
        return {in_adj.data() + in_off[i], static_cast<std::size_t>(in_off[i + 1] - in_off[i])};
    }
    std::span<const std::int32_t> und(int i) const {
        return {und_adj.data() + und_off[i], static_cast<std::size_t>(und_off[i + 1] - und_off[i])};
    }
    int out_degree(int i) const { return static_cast<int>(out_off[i + 1] - out_off[i]); }
    int degree(int i) const { return static_cast<int>(und_off[i + 1] - und_off[i]); }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }
};

struct GraphStats {
    int node_count = 0;
    std::int64_t edge_count = 0;
    double avg_degree = 0;
    double degree_std = 0;     // population std of undirected-view degrees
    double mean_clustering = 0;
};

// build from an explicit edge set (tests, generators); labels are the indices
Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges, bool directed);

// one edge per line, two whitespace-separated labels (int or string), '#' or
// '%' comment lines ignored
Graph load_edge_list(const std::string& path, bool directed);

// GML subset: graph [ directed 0|1 node [ id INT ] ... edge [ source INT
// target INT ] ... ]; extra scalar key/value fields are tolerated anywhere,
// nested blocks other than node/edge are an error naming the construct
Graph load_gml(const std::string& path);

Graph symmetrize(const Graph& g);

// hop distances along out-edges; unreachable nodes get kUnreachable
inline constexpr int kUnreachable = -1;
std::vector<int> bfs_distances(const Graph& g, int source);

GraphStats stats(const Graph& g);

// serialize as an edge list (dense indices); inverse of load_edge_list for
// round-trip checks
void write_edge_list(const Graph& g, const std::string& path);

} // namespace netcoop
