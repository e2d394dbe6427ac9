#include "netcoop/pd_game.hpp"

#include <algorithm>
#include <stdexcept>

#include "netcoop/parallel.hpp"
#include "netcoop/simd.hpp"

namespace netcoop {

void GameParams::validate() const {
    if (!(b > 1.0)) throw std::invalid_argument("GameParams: b must be > 1");
    if (time_window < 1) throw std::invalid_argument("GameParams: time_window must be >= 1");
    if (repetitions < 1) throw std::invalid_argument("GameParams: repetitions must be >= 1");
}

GameState init_state(const Graph& g, Rng& rng) {
    if (g.n < 2) throw std::invalid_argument("init_state: need at least 2 nodes");
    GameState st;
    st.strategies.assign(g.n, 0);
    st.payoffs.assign(g.n, 0.0);
    for (int i : sample_without_replacement(g.n, g.n / 2, rng)) st.strategies[i] = 1;
    return st;
}

void payoff_round(const Graph& g, GameState& state, const PayoffMatrix& m) {
    // staged as int32 so the CSR gather kernel can count cooperating
    // neighbors; sequential on purpose — run_game already parallelizes across
    // realizations
    std::vector<std::int32_t> coop(g.n);
    for (int i = 0; i < g.n; ++i) coop[i] = state.strategies[i];
    for (int i = 0; i < g.n; ++i) {
        auto nb = g.und(i);
        auto c = static_cast<double>(simd::gather_add_i32(coop.data(), nb.data(), nb.size()));
        double d = static_cast<double>(nb.size()) - c;
        state.payoffs[i] = state.strategies[i] ? c * m.R + d * m.S   // cooperator
                                               : c * m.T + d * m.P;  // defector
    }
}

void strategy_update(const Graph& g, GameState& state, double b, Rng& rng) {
    const std::vector<std::uint8_t> snap = state.strategies;
    const std::vector<double>& po = state.payoffs; // read-only this sweep
    for (int i = 0; i < g.n; ++i) {
        auto nb = g.und(i);
        if (nb.empty()) continue;
        int j = nb[rng.bounded(nb.size())];
        double u = rng.uniform01(); // always drawn: fixed draw count per node
        if (po[j] > po[i]) {
            double di = static_cast<double>(nb.size());
            double dj = static_cast<double>(g.degree(j));
            double p = (po[j] - po[i]) / (b * std::max(di, dj));
            if (p > 1.0) {
                p = 1.0;
                ++state.clamp_events;
            }
            if (u < p) state.strategies[i] = snap[j];
        }
    }
}

Trajectory run_realization(const Graph& g, const GameParams& params, int realization_index) {
    params.validate();
    Trajectory tr;
    tr.n = g.n;
    tr.time_window = params.time_window;
    tr.snapshots.resize(static_cast<std::size_t>(params.time_window) * g.n);
    tr.cooperativity.resize(params.time_window);

    Rng rng(derive_seed(params.seed, static_cast<std::uint64_t>(realization_index)));
    GameState st = init_state(g, rng);
    PayoffMatrix m = PayoffMatrix::nowak_may(params.b);
    for (int t = 0; t < params.time_window; ++t) {
        payoff_round(g, st, m);
        strategy_update(g, st, params.b, rng);
        std::uint8_t* row = tr.snapshots.data() + static_cast<std::size_t>(t) * g.n;
        std::copy(st.strategies.begin(), st.strategies.end(), row);
        tr.cooperativity[t] =
            static_cast<double>(simd::ones_count_u8(row, g.n)) / static_cast<double>(g.n);
    }
    tr.clamp_events = st.clamp_events;
    return tr;
}

std::vector<Trajectory> run_game(const Graph& g, const GameParams& params) {
    params.validate();
    std::vector<Trajectory> out(params.repetitions);
    parallel_chunks(params.repetitions, [&](int, int b, int e) {
        for (int r = b; r < e; ++r) out[r] = run_realization(g, params, r);
    });
    return out;
}

} // namespace netcoop
