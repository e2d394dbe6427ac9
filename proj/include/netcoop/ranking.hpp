#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "netcoop/graph.hpp"

namespace netcoop {

enum class Algorithm { SD, PageRank, HITS, CL, BW, CC };

constexpr Algorithm kAllAlgorithms[] = {Algorithm::SD, Algorithm::PageRank, Algorithm::HITS,
                                        Algorithm::CL, Algorithm::BW, Algorithm::CC};

const char* algorithm_name(Algorithm a);      // sd, pagerank, hits, cl, bw, cc
Algorithm parse_algorithm(const std::string& token);

struct RankVector {
    Algorithm algorithm;
    std::vector<double> values;      // raw scores, all finite
    std::vector<double> normalized;  // min-max; all-equal vectors map to all-0.5
    bool converged = true;           // PageRank/HITS: tol reached within max_iter
    bool degenerate = false;         // HITS on an edgeless graph
};

struct BinaryVector {
    std::vector<std::uint8_t> bits;
};

// values[i] = degree in the undirected view
RankVector simple_degree(const Graph& g);

// fixed point of R_i = beta * sum_{j->i} R_j / outdeg(j) + (1-beta)/N from the
// uniform vector; dangling mass redistributed uniformly; stops when the L1
// change drops below tol
RankVector pagerank(const Graph& g, double beta = 0.85, double tol = 1e-10, int max_iter = 200);

// hub/authority iteration, both initialized to 1/N, L1-normalized every
// sweep; returns the authority vector (undirected edges count both ways, so
// hub == authority there)
RankVector hits(const Graph& g, double tol = 1e-10, int max_iter = 200);

// (reachable-1) / sum of distances to reachable nodes; isolated nodes score 0
RankVector closeness(const Graph& g);

// exact betweenness (Brandes), endpoints excluded, unordered pair counting on
// undirected graphs, no further normalization
RankVector betweenness(const Graph& g);

// 2 * E_nbrs / (d (d-1)); degree<2 scores 0
RankVector clustering_coefficient(const Graph& g);

// bits[i] = normalized[i] >= mean(normalized)
BinaryVector binarize(const RankVector& r);

} // namespace netcoop
