#include "netcoop/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "netcoop/parallel.hpp"
#include "netcoop/simd.hpp"

namespace netcoop {

namespace {

void build_csr(int n, const std::vector<std::pair<int, int>>& arcs,
               std::vector<std::int64_t>& off, std::vector<std::int32_t>& adj) {
    off.assign(n + 1, 0);
    for (auto [a, b] : arcs) off[a + 1]++;
    for (int i = 0; i < n; ++i) off[i + 1] += off[i];
    adj.resize(arcs.size());
    std::vector<std::int64_t> cur(off.begin(), off.end() - 1);
    for (auto [a, b] : arcs) adj[cur[a]++] = b;
    for (int i = 0; i < n; ++i)
        std::sort(adj.begin() + off[i], adj.begin() + off[i + 1]);
}

Graph finish(int n, std::vector<std::pair<int, int>> raw, bool directed) {
    if (n <= 0) throw std::runtime_error("empty graph");
    Graph g;
    g.n = n;
    g.directed = directed;

    // drop self-loops, canonicalize, dedupe
    std::vector<std::pair<int, int>> es;
    es.reserve(raw.size());
    for (auto [a, b] : raw) {
        if (a == b) continue;
        if (!directed && a > b) std::swap(a, b);
        es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    g.edges = std::move(es);

    if (directed) {
        std::vector<std::pair<int, int>> rev;
        rev.reserve(g.edges.size());
        for (auto [a, b] : g.edges) rev.emplace_back(b, a);
        build_csr(n, g.edges, g.out_off, g.out_adj);
        build_csr(n, rev, g.in_off, g.in_adj);
        // undirected view: union of arcs and reverses, deduped
        std::vector<std::pair<int, int>> und;
        und.reserve(g.edges.size());
        for (auto [a, b] : g.edges) und.emplace_back(std::min(a, b), std::max(a, b));
        std::sort(und.begin(), und.end());
        und.erase(std::unique(und.begin(), und.end()), und.end());
        std::vector<std::pair<int, int>> both;
        both.reserve(und.size() * 2);
        for (auto [a, b] : und) {
            both.emplace_back(a, b);
            both.emplace_back(b, a);
        }
        build_csr(n, both, g.und_off, g.und_adj);
    } else {
        std::vector<std::pair<int, int>> both;
        both.reserve(g.edges.size() * 2);
        for (auto [a, b] : g.edges) {
            both.emplace_back(a, b);
            both.emplace_back(b, a);
        }
        build_csr(n, both, g.und_off, g.und_adj);
        g.out_off = g.in_off = g.und_off;
        g.out_adj = g.in_adj = g.und_adj;
    }
    return g;
}

} // namespace

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges, bool directed) {
    for (auto [a, b] : edges)
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("from_edges: node index out of range");
    return finish(n, edges, directed);
}

Graph load_edge_list(const std::string& path, bool directed) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open edge list file: " + path);

    std::unordered_map<std::string, int> ids;
    std::vector<std::pair<int, int>> raw;
    auto intern = [&](const std::string& label) {
        auto [it, inserted] = ids.emplace(label, static_cast<int>(ids.size()));
        return it->second;
    };

    std::string line;
    long lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::size_t p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos) continue;
        if (line[p] == '#' || line[p] == '%') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra)) {
            throw std::runtime_error("malformed edge list line " + std::to_string(lineno) +
                                     " in " + path + ": expected exactly two labels");
        }
        int u = intern(a); // sequenced: first-appearance numbering must be left-to-right
        int v = intern(b);
        raw.emplace_back(u, v);
    }
    if (f.bad()) throw std::runtime_error("I/O error reading " + path);
    if (ids.empty()) throw std::runtime_error("empty graph: " + path);
    return finish(static_cast<int>(ids.size()), std::move(raw), directed);
}

namespace {

// minimal GML tokenizer: brackets, quoted strings, bare words/numbers
struct GmlLexer {
    explicit GmlLexer(std::string text) : s(std::move(text)) {}
    std::string s;
    std::size_t pos = 0;

    // returns empty string at EOF; '[' and ']' come through as themselves
    std::string next() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos >= s.size()) return {};
        char c = s[pos];
        if (c == '[' || c == ']') {
            ++pos;
            return std::string(1, c);
        }
        if (c == '"') {
            std::size_t end = s.find('"', pos + 1);
            if (end == std::string::npos) throw std::runtime_error("GML parse error: unterminated string");
            std::string tok = s.substr(pos, end - pos + 1); // keep quotes: marks it as a string
            pos = end + 1;
            return tok;
        }
        std::size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
               s[pos] != '[' && s[pos] != ']')
            ++pos;
        return s.substr(start, pos - start);
    }
};

bool is_integer(const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

// consume one scalar value for an uninterpreted key; nested blocks are the
// one unsupported construct
void skip_scalar(GmlLexer& lx, const std::string& key) {
    std::string v = lx.next();
    if (v == "[")
        throw std::runtime_error("GML parse error: nested construct '" + key + "' is not supported");
    if (v.empty() || v == "]")
        throw std::runtime_error("GML parse error: key '" + key + "' has no value");
}

} // namespace

Graph load_gml(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open GML file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    GmlLexer lx(buf.str());

    // tolerate top-level scalars (Creator "...", etc.) before the graph block
    std::string tok;
    for (;;) {
        tok = lx.next();
        if (tok.empty()) throw std::runtime_error("GML parse error: no graph block in " + path);
        if (tok == "graph") break;
        if (tok == "[" || tok == "]")
            throw std::runtime_error("GML parse error: unexpected '" + tok + "' before graph block");
        skip_scalar(lx, tok);
    }
    if (lx.next() != "[") throw std::runtime_error("GML parse error: expected '[' after 'graph'");

    bool directed = false;
    std::vector<long> node_ids;
    std::unordered_map<long, int> id_map;
    std::vector<std::pair<long, long>> gml_edges;

    for (;;) {
        tok = lx.next();
        if (tok.empty()) throw std::runtime_error("GML parse error: unterminated graph block");
        if (tok == "]") break;
        if (tok == "directed") {
            std::string v = lx.next();
            if (!is_integer(v)) throw std::runtime_error("GML parse error: directed needs 0 or 1");
            directed = std::stol(v) != 0;
        } else if (tok == "node" || tok == "edge") {
            bool is_node = tok == "node";
            if (lx.next() != "[")
                throw std::runtime_error("GML parse error: expected '[' after '" + tok + "'");
            long id = -1, src = -1, dst = -1;
            bool has_id = false, has_src = false, has_dst = false;
            for (;;) {
                std::string key = lx.next();
                if (key.empty()) throw std::runtime_error("GML parse error: unterminated " + tok + " block");
                if (key == "]") break;
                if (key == "[")
                    throw std::runtime_error("GML parse error: nested construct inside '" + tok + "' is not supported");
                if (is_node && key == "id") {
                    std::string v = lx.next();
                    if (!is_integer(v)) throw std::runtime_error("GML parse error: node id must be an integer");
                    id = std::stol(v);
                    has_id = true;
                } else if (!is_node && key == "source") {
                    std::string v = lx.next();
                    if (!is_integer(v)) throw std::runtime_error("GML parse error: edge source must be an integer");
                    src = std::stol(v);
                    has_src = true;
                } else if (!is_node && key == "target") {
                    std::string v = lx.next();
                    if (!is_integer(v)) throw std::runtime_error("GML parse error: edge target must be an integer");
                    dst = std::stol(v);
                    has_dst = true;
                } else {
                    skip_scalar(lx, key);
                }
            }
            if (is_node) {
                if (!has_id) throw std::runtime_error("GML parse error: node block without id");
                if (!id_map.emplace(id, static_cast<int>(node_ids.size())).second)
                    throw std::runtime_error("GML parse error: duplicate node id " + std::to_string(id));
                node_ids.push_back(id);
            } else {
                if (!has_src || !has_dst)
                    throw std::runtime_error("GML parse error: edge block without source/target");
                gml_edges.emplace_back(src, dst);
            }
        } else {
            skip_scalar(lx, tok);
        }
    }

    if (node_ids.empty()) throw std::runtime_error("empty graph: " + path);
    std::vector<std::pair<int, int>> raw;
    raw.reserve(gml_edges.size());
    for (auto [s, t] : gml_edges) {
        auto is = id_map.find(s), it = id_map.find(t);
        if (is == id_map.end())
            throw std::runtime_error("GML parse error: edge references missing node " + std::to_string(s));
        if (it == id_map.end())
            throw std::runtime_error("GML parse error: edge references missing node " + std::to_string(t));
        raw.emplace_back(is->second, it->second);
    }
    return finish(static_cast<int>(node_ids.size()), std::move(raw), directed);
}

Graph symmetrize(const Graph& g) {
    std::vector<std::pair<int, int>> und;
    und.reserve(g.edges.size());
    for (auto [a, b] : g.edges) und.emplace_back(std::min(a, b), std::max(a, b));
    return finish(g.n, std::move(und), false);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.n) throw std::invalid_argument("bfs_distances: source out of range");
    std::vector<int> dist(g.n, kUnreachable);
    std::vector<int> queue;
    queue.reserve(g.n);
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : g.out(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

GraphStats stats(const Graph& g) {
    GraphStats st;
    st.node_count = g.n;
    st.edge_count = g.edge_count();

    std::vector<double> deg(g.n);
    for (int i = 0; i < g.n; ++i) deg[i] = g.degree(i);
    double dsum = simd::reduce_add(deg.data(), deg.size());
    st.avg_degree = dsum / g.n;
    double mu = st.avg_degree;
    double var = 0;
    for (int i = 0; i < g.n; ++i) var += (deg[i] - mu) * (deg[i] - mu);
    st.degree_std = std::sqrt(var / g.n);

    // Local clustering: 2*E_nbrs / (d(d-1)), degree<2 contributes 0.
    // E_nbrs via sorted-adjacency intersections (each neighbor edge counted
    // twice across the sum).
    std::vector<double> local(g.n, 0.0);
    parallel_chunks(g.n, [&](int, int b, int e) {
        for (int i = b; i < e; ++i) {
            auto ni = g.und(i);
            int d = static_cast<int>(ni.size());
            if (d < 2) continue;
            std::int64_t twice_enbrs = 0;
            for (int j : ni) {
                auto nj = g.und(j);
                auto a = ni.begin();
                auto bb = nj.begin();
                while (a != ni.end() && bb != nj.end()) {
                    if (*a < *bb) ++a;
                    else if (*bb < *a) ++bb;
                    else { ++twice_enbrs; ++a; ++bb; }
                }
            }
            local[i] = static_cast<double>(twice_enbrs) / (static_cast<double>(d) * (d - 1));
        }
    });
    st.mean_clustering = simd::reduce_add(local.data(), local.size()) / g.n;
    return st;
}

void write_edge_list(const Graph& g, const std::string& path) {
    // The loader assigns indices by first appearance, so the line order here
    // decides how a reload labels the nodes. Emitting one "introduction" edge
    // per node (a neighbor with a smaller index exists for every node of any
    // loader-produced graph) makes the reload mapping the identity and the
    // round trip exact. Graphs where that's impossible (isolated nodes can't
    // be expressed in this format at all) get a plain sorted dump.
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write edge list file: " + path);
    f << "# netcoop edge list: " << g.n << " nodes, " << g.edges.size()
      << (g.directed ? " directed" : " undirected") << " edges\n";

    for (int i = 0; i < g.n; ++i)
        if (g.degree(i) == 0)
            throw std::runtime_error("write_edge_list: isolated node " + std::to_string(i) +
                                     " cannot be represented in edge-list form");

    std::vector<std::pair<int, int>> intro;
    bool identity_order = true;
    {
        // pick, for each node k>0, a stored edge connecting it below
        std::vector<char> covered(g.n, 0);
        std::vector<std::pair<int, int>> pick(g.n, {-1, -1});
        for (auto [a, b] : g.edges) {
            int hi = std::max(a, b), lo = std::min(a, b);
            if (hi == lo) continue;
            if (!covered[hi] || std::make_pair(lo, hi) <
                    std::make_pair(std::min(pick[hi].first, pick[hi].second),
                                   std::max(pick[hi].first, pick[hi].second))) {
                pick[hi] = {a, b};
                covered[hi] = 1;
            }
        }
        for (int k = 1; k < g.n && identity_order; ++k) {
            if (!covered[k] || std::max(pick[k].first, pick[k].second) != k) identity_order = false;
        }
        // the very first line introduces two nodes; they must come out 0 then 1
        if (identity_order && g.n >= 2 && pick[1].first != 0) identity_order = false;
        if (identity_order)
            for (int k = 1; k < g.n; ++k) intro.push_back(pick[k]);
    }

    if (identity_order) {
        auto in_intro = [&](std::pair<int, int> e) {
            int hi = std::max(e.first, e.second);
            return hi >= 1 && intro[hi - 1] == e;
        };
        for (auto [a, b] : intro) f << a << ' ' << b << '\n';
        for (auto e : g.edges)
            if (!in_intro(e)) f << e.first << ' ' << e.second << '\n';
    } else {
        for (auto [a, b] : g.edges) f << a << ' ' << b << '\n';
    }
    if (!f) throw std::runtime_error("I/O error writing " + path);
}

} // namespace netcoop
