#include "netcoop/correlation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "netcoop/parallel.hpp"
#include "netcoop/simd.hpp"

namespace netcoop {

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::NodeHamming: return "hamming";
        case Strategy::NeighborMeanKL: return "klmean";
        case Strategy::NeighborVarKL: return "klvar";
    }
    return "?";
}

double hamming(const BinaryVector& a, const BinaryVector& b) {
    if (a.bits.size() != b.bits.size())
        throw std::invalid_argument("hamming: length mismatch");
    if (a.bits.empty()) throw std::invalid_argument("hamming: empty vectors");
    return static_cast<double>(simd::mismatch_count_u8(a.bits.data(), b.bits.data(), a.bits.size())) /
           static_cast<double>(a.bits.size());
}

std::vector<double> neighbor_mean(const Graph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.n) throw std::invalid_argument("neighbor_mean: size mismatch");
    std::vector<double> out(g.n, 0.0);
    for (int i = 0; i < g.n; ++i) {
        auto nb = g.und(i);
        if (nb.empty()) continue;
        out[i] = simd::gather_add(x.data(), nb.data(), nb.size()) / static_cast<double>(nb.size());
    }
    return out;
}

std::vector<double> neighbor_variance(const Graph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.n) throw std::invalid_argument("neighbor_variance: size mismatch");
    std::vector<double> out(g.n, 0.0);
    for (int i = 0; i < g.n; ++i) {
        auto nb = g.und(i);
        if (nb.empty()) continue;
        double mu = simd::gather_add(x.data(), nb.data(), nb.size()) / static_cast<double>(nb.size());
        out[i] = simd::gather_sq_dev_add(x.data(), nb.data(), nb.size(), mu) /
                 static_cast<double>(nb.size());
    }
    return out;
}

double kl_divergence(const std::vector<double>& p, const std::vector<double>& q, double epsilon) {
    if (p.size() != q.size()) throw std::invalid_argument("kl_divergence: length mismatch");
    if (p.empty()) throw std::invalid_argument("kl_divergence: empty vectors");
    if (epsilon < 0) throw std::invalid_argument("kl_divergence: negative epsilon");
    for (double v : p)
        if (v < 0) throw std::invalid_argument("kl_divergence: negative entry in p");
    for (double v : q)
        if (v < 0) throw std::invalid_argument("kl_divergence: negative entry in q");

    std::vector<double> ps(p), qs(q);
    for (double& v : ps) v += epsilon;
    for (double& v : qs) v += epsilon;
    double sp = simd::reduce_add(ps.data(), ps.size());
    double sq = simd::reduce_add(qs.data(), qs.size());
    if (sp == 0.0 || sq == 0.0)
        throw std::domain_error("kl_divergence: all-zero vector with epsilon=0");

    double acc = 0;
    for (std::size_t k = 0; k < ps.size(); ++k) {
        double pk = ps[k] / sp;
        if (pk == 0.0) continue; // 0 * ln(0/.) = 0
        double qk = qs[k] / sq;
        if (qk == 0.0) return std::numeric_limits<double>::infinity();
        acc += pk * std::log(pk / qk);
    }
    return acc;
}

namespace {

std::vector<int> active_nodes(const Graph& g) {
    std::vector<int> idx;
    idx.reserve(g.n);
    for (int i = 0; i < g.n; ++i)
        if (g.degree(i) > 0) idx.push_back(i);
    return idx;
}

std::vector<double> compact(const std::vector<double>& full, const std::vector<int>& idx) {
    std::vector<double> out(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) out[k] = full[idx[k]];
    return out;
}

void check_trajs(const Graph& g, const std::vector<Trajectory>& trajs) {
    if (trajs.empty()) throw std::invalid_argument("correlation: need at least one trajectory");
    for (const auto& tr : trajs) {
        if (tr.n != g.n) throw std::invalid_argument("correlation: trajectory node count mismatch");
        if (tr.time_window != trajs.front().time_window)
            throw std::invalid_argument("correlation: trajectories with different time windows");
    }
}

// guarded KL: degenerate inputs become NaN so the timestep can be omitted
double kl_or_nan(const std::vector<double>& p, const std::vector<double>& q, double epsilon) {
    try {
        return kl_divergence(p, q, epsilon);
    } catch (const std::domain_error&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

// shared driver for strategies 2 and 3: p is the fixed compacted rank-side
// distribution input; coop_side builds the cooperation-side per-node vector
// from a (possibly pooled) strategy vector
template <typename CoopSide>
CorrelationSeries kl_series(Strategy s, const Graph& g, const RankVector& rank,
                            const std::vector<Trajectory>& trajs, double epsilon,
                            AverageMode mode, const std::vector<double>& p_full,
                            CoopSide&& coop_side) {
    check_trajs(g, trajs);
    const std::vector<int> act = active_nodes(g);
    const std::vector<double> p = compact(p_full, act);
    const int tw = trajs.front().time_window;
    const int reps = static_cast<int>(trajs.size());

    CorrelationSeries out;
    out.strategy = s;
    out.algorithm = rank.algorithm;
    out.values.assign(tw, 0.0);

    parallel_chunks(tw, [&](int, int tb, int te) {
        std::vector<double> x(g.n);
        for (int t = tb; t < te; ++t) {
            double v;
            if (mode == AverageMode::PerRealization) {
                double acc = 0;
                for (int r = 0; r < reps; ++r) {
                    const std::uint8_t* row = trajs[r].row(t);
                    for (int i = 0; i < g.n; ++i) x[i] = row[i];
                    acc += kl_or_nan(p, compact(coop_side(x), act), epsilon);
                }
                v = acc / reps;
            } else {
                for (int i = 0; i < g.n; ++i) {
                    double m = 0;
                    for (int r = 0; r < reps; ++r) m += trajs[r].row(t)[i];
                    x[i] = m / reps;
                }
                v = kl_or_nan(p, compact(coop_side(x), act), epsilon);
            }
            out.values[t] = v;
        }
    });
    for (int t = 0; t < tw; ++t)
        if (!std::isfinite(out.values[t])) {
            out.values[t] = std::numeric_limits<double>::quiet_NaN();
            out.omitted.push_back(t);
        }
    return out;
}

} // namespace

CorrelationSeries strategy1_series(const Graph& g, const BinaryVector& rank,
                                   const std::vector<Trajectory>& trajs, AverageMode) {
    // both averaging modes coincide here: the mismatch fraction is a mean of
    // per-position indicators, so averaging over realizations commutes
    check_trajs(g, trajs);
    if (static_cast<int>(rank.bits.size()) != g.n)
        throw std::invalid_argument("strategy1_series: rank length mismatch");
    const int tw = trajs.front().time_window;
    const int reps = static_cast<int>(trajs.size());

    CorrelationSeries out;
    out.strategy = Strategy::NodeHamming;
    out.algorithm = Algorithm::SD; // caller overwrites; hamming input carries no algorithm tag
    out.values.assign(tw, 0.0);
    parallel_chunks(tw, [&](int, int tb, int te) {
        for (int t = tb; t < te; ++t) {
            double acc = 0;
            for (int r = 0; r < reps; ++r) {
                const std::uint8_t* row = trajs[r].row(t);
                acc += static_cast<double>(
                           simd::mismatch_count_u8(rank.bits.data(), row, rank.bits.size())) /
                       static_cast<double>(g.n);
            }
            out.values[t] = acc / reps;
        }
    });
    return out;
}

CorrelationSeries strategy2_series(const Graph& g, const RankVector& rank,
                                   const std::vector<Trajectory>& trajs, double epsilon,
                                   AverageMode mode) {
    if (static_cast<int>(rank.normalized.size()) != g.n)
        throw std::invalid_argument("strategy2_series: normalized rank view not populated");
    std::vector<double> p_full = neighbor_mean(g, rank.normalized);
    return kl_series(Strategy::NeighborMeanKL, g, rank, trajs, epsilon, mode, p_full,
                     [&](const std::vector<double>& x) { return neighbor_mean(g, x); });
}

CorrelationSeries strategy3_series(const Graph& g, const RankVector& rank,
                                   const std::vector<Trajectory>& trajs, double epsilon,
                                   Strategy3Mode s3, AverageMode mode) {
    if (static_cast<int>(rank.normalized.size()) != g.n)
        throw std::invalid_argument("strategy3_series: normalized rank view not populated");
    std::vector<double> p_full = neighbor_variance(g, rank.normalized);
    if (s3 == Strategy3Mode::VarVsVar) {
        return kl_series(Strategy::NeighborVarKL, g, rank, trajs, epsilon, mode, p_full,
                         [&](const std::vector<double>& x) { return neighbor_variance(g, x); });
    }
    return kl_series(Strategy::NeighborVarKL, g, rank, trajs, epsilon, mode, p_full,
                     [&](const std::vector<double>& x) { return neighbor_mean(g, x); });
}

} // namespace netcoop
