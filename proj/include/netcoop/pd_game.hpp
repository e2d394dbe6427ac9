#pragma once
#include <cstdint>
#include <vector>

#include "netcoop/graph.hpp"
#include "netcoop/rng.hpp"

namespace netcoop {

// payoff for (own, neighbor): (C,C)->R, (C,D)->S, (D,C)->T, (D,D)->P
struct PayoffMatrix {
    double T, R, P, S;
    // T=b>1, R=1, P=S=0
    static PayoffMatrix nowak_may(double b) { return {b, 1.0, 0.0, 0.0}; }
};

struct GameParams {
    double b;                 // temptation / propensity to defect, > 1
    int time_window = 500;    // timesteps per realization
    int repetitions = 10;     // independent realizations
    std::uint64_t seed = 0;

    void validate() const;    // throws on b<=1, time_window<1, repetitions<1
};

// strategies: 1 = cooperate, 0 = defect
struct GameState {
    std::vector<std::uint8_t> strategies;
    std::vector<double> payoffs;
    std::int64_t clamp_events = 0; // imitation probabilities clamped to 1 (impossible under nowak_may)
};

struct Trajectory {
    int n = 0;
    int time_window = 0;
    std::vector<std::uint8_t> snapshots;   // time_window x n, row t = strategies after timestep t+1
    std::vector<double> cooperativity;     // per recorded snapshot, fraction of cooperators
    std::int64_t clamp_events = 0;

    const std::uint8_t* row(int t) const { return snapshots.data() + static_cast<std::size_t>(t) * n; }
};

// floor(N/2) cooperators placed uniformly at random without replacement
GameState init_state(const Graph& g, Rng& rng);

// fresh synchronous payoff pass: every node's payoff recomputed from the
// current strategy snapshot (previous payoffs discarded)
void payoff_round(const Graph& g, GameState& state, const PayoffMatrix& m);

// synchronous imitation sweep against the pre-update snapshot. Per node, in
// index order: pick one neighbor j uniformly; if PO_j > PO_i adopt j's
// strategy with probability (PO_j - PO_i)/(b * max(d_i, d_j)). Every node of
// degree >= 1 consumes exactly two draws (pick + acceptance) whether or not
// the acceptance draw is used; isolated nodes consume none. This fixed
// draw-count protocol is part of the determinism contract.
void strategy_update(const Graph& g, GameState& state, double b, Rng& rng);

// init_state seeded from (params.seed, realization_index), then time_window
// rounds of payoff_round + strategy_update, snapshot recorded after each
Trajectory run_realization(const Graph& g, const GameParams& params, int realization_index);

// params.repetitions independent realizations (realization_index 0..reps-1)
std::vector<Trajectory> run_game(const Graph& g, const GameParams& params);

} // namespace netcoop
