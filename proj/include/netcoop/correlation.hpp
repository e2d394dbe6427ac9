#pragma once
#include <vector>

#include "netcoop/graph.hpp"
#include "netcoop/pd_game.hpp"
#include "netcoop/ranking.hpp"

namespace netcoop {

enum class Strategy { NodeHamming, NeighborMeanKL, NeighborVarKL };

const char* strategy_name(Strategy s); // hamming, klmean, klvar

// average correlation values across realizations (default), or pool the
// strategy vectors per timestep first and correlate once. The two coincide
// for strategy 1 (the mismatch fraction is linear per position).
enum class AverageMode { PerRealization, Pooled };

// variance on both sides (default) vs rank variance against mean cooperativity
enum class Strategy3Mode { VarVsVar, VarVsMean };

struct CorrelationSeries {
    Strategy strategy;
    Algorithm algorithm;
    std::vector<double> values;        // per timestep; NaN where omitted
    std::vector<int> omitted;          // 0-based timestep indices with non-finite values
};

// fraction of differing positions
double hamming(const BinaryVector& a, const BinaryVector& b);

// out[i] = mean of x over i's neighbors; degree-0 nodes get 0
std::vector<double> neighbor_mean(const Graph& g, const std::vector<double>& x);

// out[i] = population variance of x over i's neighbors; degree-0 nodes get 0
std::vector<double> neighbor_variance(const Graph& g, const std::vector<double>& x);

// both inputs shifted by epsilon, normalized to sum 1, then sum p_k ln(p_k/q_k)
// with 0 ln(0/.) = 0. Returns +inf when some q_k = 0 < p_k (epsilon = 0).
// Throws on negative entries or an all-zero input with epsilon = 0.
double kl_divergence(const std::vector<double>& p, const std::vector<double>& q, double epsilon);

CorrelationSeries strategy1_series(const Graph& g, const BinaryVector& rank,
                                   const std::vector<Trajectory>& trajs,
                                   AverageMode mode = AverageMode::PerRealization);

// p = neighbor_mean of the normalized rank (fixed), q = neighbor_mean of each
// timestep's strategy vector; degree-0 nodes are excluded from both sides
// before normalization; non-finite timesteps are omitted
CorrelationSeries strategy2_series(const Graph& g, const RankVector& rank,
                                   const std::vector<Trajectory>& trajs, double epsilon,
                                   AverageMode mode = AverageMode::PerRealization);

CorrelationSeries strategy3_series(const Graph& g, const RankVector& rank,
                                   const std::vector<Trajectory>& trajs, double epsilon,
                                   Strategy3Mode s3 = Strategy3Mode::VarVsVar,
                                   AverageMode mode = AverageMode::PerRealization);

} // namespace netcoop
