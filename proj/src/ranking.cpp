#include "netcoop/ranking.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "netcoop/parallel.hpp"
#include "netcoop/simd.hpp"

namespace netcoop {

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::SD: return "sd";
        case Algorithm::PageRank: return "pagerank";
        case Algorithm::HITS: return "hits";
        case Algorithm::CL: return "cl";
        case Algorithm::BW: return "bw";
        case Algorithm::CC: return "cc";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& token) {
    std::string t;
    for (char c : token) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "sd") return Algorithm::SD;
    if (t == "pagerank" || t == "pr") return Algorithm::PageRank;
    if (t == "hits") return Algorithm::HITS;
    if (t == "cl") return Algorithm::CL;
    if (t == "bw") return Algorithm::BW;
    if (t == "cc") return Algorithm::CC;
    throw std::invalid_argument("unknown ranking algorithm: " + token);
}

namespace {

void fill_normalized(RankVector& r) {
    double mn, mx;
    simd::min_max(r.values.data(), r.values.size(), &mn, &mx);
    r.normalized.resize(r.values.size());
    if (mx > mn) {
        double inv = 1.0 / (mx - mn);
        for (std::size_t i = 0; i < r.values.size(); ++i)
            r.normalized[i] = (r.values[i] - mn) * inv;
    } else {
        std::fill(r.normalized.begin(), r.normalized.end(), 0.5);
    }
}

RankVector make_rank(Algorithm a, std::vector<double> values) {
    RankVector r;
    r.algorithm = a;
    r.values = std::move(values);
    fill_normalized(r);
    return r;
}

} // namespace

RankVector simple_degree(const Graph& g) {
    std::vector<double> v(g.n);
    for (int i = 0; i < g.n; ++i) v[i] = g.degree(i);
    return make_rank(Algorithm::SD, std::move(v));
}

RankVector pagerank(const Graph& g, double beta, double tol, int max_iter) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("pagerank: beta must lie in (0,1)");
    if (!(tol > 0.0)) throw std::invalid_argument("pagerank: tol must be positive");
    int n = g.n;
    std::vector<double> r(n, 1.0 / n), next(n), contrib(n);
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        double dangling = 0;
        for (int j = 0; j < n; ++j) {
            int od = g.out_degree(j);
            if (od > 0) {
                contrib[j] = r[j] / od;
            } else {
                contrib[j] = 0;
                dangling += r[j];
            }
        }
        double base = (1.0 - beta) / n + beta * dangling / n;
        parallel_chunks(n, [&](int, int b, int e) {
            for (int i = b; i < e; ++i) {
                auto in = g.in(i);
                next[i] = base + beta * simd::gather_add(contrib.data(), in.data(), in.size());
            }
        });
        double delta = 0;
        for (int i = 0; i < n; ++i) delta += std::abs(next[i] - r[i]);
        r.swap(next);
        if (delta < tol) {
            converged = true;
            break;
        }
    }
    RankVector out = make_rank(Algorithm::PageRank, std::move(r));
    out.converged = converged;
    return out;
}

RankVector hits(const Graph& g, double tol, int max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("hits: tol must be positive");
    int n = g.n;
    std::vector<double> a(n, 1.0 / n), h(n, 1.0 / n), na(n), nh(n);
    bool converged = false, degenerate = false;
    for (int it = 0; it < max_iter; ++it) {
        parallel_chunks(n, [&](int, int b, int e) {
            for (int i = b; i < e; ++i) {
                auto in = g.in(i);
                na[i] = simd::gather_add(h.data(), in.data(), in.size());
            }
        });
        double sa = simd::reduce_add(na.data(), na.size());
        if (sa == 0.0) { // no edges: nothing points anywhere
            std::fill(a.begin(), a.end(), 1.0 / n);
            degenerate = true;
            converged = true;
            break;
        }
        for (int i = 0; i < n; ++i) na[i] /= sa;
        parallel_chunks(n, [&](int, int b, int e) {
            for (int j = b; j < e; ++j) {
                auto out = g.out(j);
                nh[j] = simd::gather_add(na.data(), out.data(), out.size());
            }
        });
        double sh = simd::reduce_add(nh.data(), nh.size());
        for (int j = 0; j < n; ++j) nh[j] /= sh;
        double da = 0, dh = 0;
        for (int i = 0; i < n; ++i) {
            da += std::abs(na[i] - a[i]);
            dh += std::abs(nh[i] - h[i]);
        }
        a.swap(na);
        h.swap(nh);
        if (da < tol && dh < tol) {
            converged = true;
            break;
        }
    }
    RankVector out = make_rank(Algorithm::HITS, std::move(a));
    out.converged = converged;
    out.degenerate = degenerate;
    return out;
}

RankVector closeness(const Graph& g) {
    int n = g.n;
    std::vector<double> v(n, 0.0);
    parallel_chunks(n, [&](int, int b, int e) {
        std::vector<int> dist(n), queue(n);
        for (int s = b; s < e; ++s) {
            std::fill(dist.begin(), dist.end(), kUnreachable);
            dist[s] = 0;
            queue[0] = s;
            int qn = 1;
            long long sum = 0, reach = 1;
            for (int head = 0; head < qn; ++head) {
                int u = queue[head];
                for (int w : g.out(u)) {
                    if (dist[w] == kUnreachable) {
                        dist[w] = dist[u] + 1;
                        sum += dist[w];
                        ++reach;
                        queue[qn++] = w;
                    }
                }
            }
            v[s] = reach > 1 ? static_cast<double>(reach - 1) / static_cast<double>(sum) : 0.0;
        }
    });
    return make_rank(Algorithm::CL, std::move(v));
}

RankVector betweenness(const Graph& g) {
    int n = g.n;
    int chunks = std::min(kChunks, n);
    std::vector<std::vector<double>> partial(chunks, std::vector<double>(n, 0.0));
    parallel_chunks(n, [&](int chunk, int b, int e) {
        std::vector<double>& bc = partial[chunk];
        std::vector<int> dist(n), order(n);
        std::vector<double> sigma(n), delta(n);
        std::vector<std::vector<int>> preds(n);
        for (int s = b; s < e; ++s) {
            std::fill(dist.begin(), dist.end(), kUnreachable);
            std::fill(sigma.begin(), sigma.end(), 0.0);
            std::fill(delta.begin(), delta.end(), 0.0);
            for (auto& p : preds) p.clear();
            dist[s] = 0;
            sigma[s] = 1;
            order[0] = s;
            int qn = 1;
            for (int head = 0; head < qn; ++head) {
                int u = order[head];
                for (int w : g.out(u)) {
                    if (dist[w] == kUnreachable) {
                        dist[w] = dist[u] + 1;
                        order[qn++] = w;
                    }
                    if (dist[w] == dist[u] + 1) {
                        sigma[w] += sigma[u];
                        preds[w].push_back(u);
                    }
                }
            }
            for (int k = qn - 1; k > 0; --k) { // reverse BFS order; skip s itself
                int w = order[k];
                double coef = (1.0 + delta[w]) / sigma[w];
                for (int u : preds[w]) delta[u] += sigma[u] * coef;
                bc[w] += delta[w];
            }
        }
    });
    std::vector<double> v(n, 0.0);
    for (int c = 0; c < chunks; ++c)
        for (int i = 0; i < n; ++i) v[i] += partial[c][i];
    if (!g.directed)
        for (double& x : v) x *= 0.5; // ordered-pair accumulation counted each unordered pair twice
    return make_rank(Algorithm::BW, std::move(v));
}

RankVector clustering_coefficient(const Graph& g) {
    int n = g.n;
    std::vector<double> v(n, 0.0);
    parallel_chunks(n, [&](int, int b, int e) {
        for (int i = b; i < e; ++i) {
            auto ni = g.und(i);
            int d = static_cast<int>(ni.size());
            if (d < 2) continue;
            std::int64_t twice_enbrs = 0;
            for (int j : ni) {
                auto nj = g.und(j);
                auto a = ni.begin();
                auto b2 = nj.begin();
                while (a != ni.end() && b2 != nj.end()) {
                    if (*a < *b2) ++a;
                    else if (*b2 < *a) ++b2;
                    else { ++twice_enbrs; ++a; ++b2; }
                }
            }
            v[i] = static_cast<double>(twice_enbrs) / (static_cast<double>(d) * (d - 1));
        }
    });
    return make_rank(Algorithm::CC, std::move(v));
}

BinaryVector binarize(const RankVector& r) {
    if (r.normalized.size() != r.values.size() || r.values.empty())
        throw std::invalid_argument("binarize: normalized view not populated");
    double mean = simd::reduce_add(r.normalized.data(), r.normalized.size()) /
                  static_cast<double>(r.normalized.size());
    BinaryVector b;
    b.bits.resize(r.normalized.size());
    for (std::size_t i = 0; i < r.normalized.size(); ++i)
        b.bits[i] = r.normalized[i] >= mean ? 1 : 0;
    return b;
}

} // namespace netcoop
