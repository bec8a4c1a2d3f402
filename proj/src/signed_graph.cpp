#include "signum/signed_graph.hpp"

#include "signum/error.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <sstream>
#include <tuple>

namespace signum {

SignedDigraph::SignedDigraph(const SignPattern& p)
    : n_(p.order()), signs_(p.entries()), out_(static_cast<std::size_t>(p.order())) {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (p.nonzero(i, j)) {
                arcs_.push_back({i, j, p(i, j)});
                out_[i].push_back(j);
            }
}

SignedGraph::SignedGraph(int n, std::vector<Edge> edges)
    : n_(n), signs_(static_cast<std::size_t>(n) * n, Sign::Zero), adj_(static_cast<std::size_t>(n)) {
    for (Edge e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v || e.u < 0 || e.v >= n || e.sign == Sign::Zero)
            throw SignumError(ErrorKind::InvalidArgument, "malformed edge");
        if (has_edge(e.u, e.v)) continue;
        signs_[static_cast<std::size_t>(e.u) * n_ + e.v] = e.sign;
        signs_[static_cast<std::size_t>(e.v) * n_ + e.u] = e.sign;
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
        edges_.push_back(e);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
}

bool SignedGraph::connected() const {
    if (n_ == 0) return true;
    const auto d = bfs_distances(*this, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

SignedGraph build_graph(const SignPattern& p) {
    const int n = p.order();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (p.nonzero(i, j) != p.nonzero(j, i)) {
                throw SignumError(ErrorKind::NotCombinatoriallySymmetric,
                                  "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                      ") has no symmetric partner",
                                  i + 1, j + 1);
            }
            if (p.nonzero(i, j)) edges.push_back({i, j, p(i, j) * p(j, i)});
        }
    }
    return SignedGraph(n, std::move(edges));
}

std::pair<SignedDigraph, SignedGraph> build_graphs(const SignPattern& p) {
    return {SignedDigraph(p), build_graph(p)};
}

int UndirectedCycle::negative_edges() const {
    return static_cast<int>(std::count(edge_signs.begin(), edge_signs.end(), Sign::Minus));
}

std::string_view to_string(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::Path: return "Path";
        case ShapeKind::Tree: return "Tree";
        case ShapeKind::SingleCycle: return "SingleCycle";
        case ShapeKind::Unicyclic: return "Unicyclic";
        case ShapeKind::MultiCycleNoLeaf: return "MultiCycleNoLeaf";
        case ShapeKind::Other: return "Other";
    }
    return "Other";
}

std::vector<int> bfs_distances(const SignedGraph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[v] >= 0) continue;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        }
    }
    return dist;
}

int distance(const SignedGraph& g, int u, int v) { return bfs_distances(g, u)[v]; }

namespace {

using Bits = std::vector<std::uint64_t>;

void flip(Bits& b, std::size_t i) { b[i / 64] ^= std::uint64_t{1} << (i % 64); }
bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }

// Orders the vertices of a 2-regular connected edge set into a canonical cycle.
UndirectedCycle make_cycle(const SignedGraph& g, const std::vector<int>& vertices,
                           const std::vector<std::vector<int>>& local_adj) {
    const int start = *std::min_element(vertices.begin(), vertices.end());
    const auto& nb = local_adj[start];
    int prev = start;
    int cur = std::min(nb[0], nb[1]);
    std::vector<int> order{start};
    while (cur != start) {
        order.push_back(cur);
        const auto& cn = local_adj[cur];
        const int next = cn[0] == prev ? cn[1] : cn[0];
        prev = cur;
        cur = next;
    }
    UndirectedCycle c;
    c.vertices = order;
    const int k = static_cast<int>(order.size());
    for (int t = 0; t < k; ++t) c.edge_signs.push_back(g.sign(order[t], order[(t + 1) % k]));
    return c;
}

}  // namespace

std::vector<UndirectedCycle> undirected_cycles(const SignedGraph& g, std::size_t cap) {
    const int n = g.order();
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    std::vector<UndirectedCycle> cycles;
    if (m == 0) return cycles;

    // Spanning forest by BFS; every non-tree edge closes one fundamental cycle.
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, -1);
    std::vector<std::vector<int>> inc(n);
    for (std::size_t e = 0; e < m; ++e) {
        inc[edges[e].u].push_back(static_cast<int>(e));
        inc[edges[e].v].push_back(static_cast<int>(e));
    }
    std::vector<char> tree_edge(m, 0);
    for (int root = 0; root < n; ++root) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int e : inc[u]) {
                const int v = edges[e].u == u ? edges[e].v : edges[e].u;
                if (depth[v] >= 0) continue;
                depth[v] = depth[u] + 1;
                parent[v] = u;
                parent_edge[v] = e;
                tree_edge[e] = 1;
                queue.push_back(v);
            }
        }
    }

    const std::size_t words = (m + 63) / 64;
    std::vector<Bits> basis;
    for (std::size_t e = 0; e < m; ++e) {
        if (tree_edge[e]) continue;
        Bits b(words, 0);
        flip(b, e);
        int a = edges[e].u, c = edges[e].v;
        while (a != c) {
            if (depth[a] < depth[c]) std::swap(a, c);
            flip(b, static_cast<std::size_t>(parent_edge[a]));
            a = parent[a];
        }
        basis.push_back(std::move(b));
    }
    if (basis.size() > 20)
        throw SignumError(ErrorKind::CycleBudgetExceeded,
                          "cycle space dimension " + std::to_string(basis.size()) + " exceeds 20");

    // Gray-code walk over all nonzero combinations of the basis.
    Bits cur(words, 0);
    std::vector<int> deg(n, 0);
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        const int bit = __builtin_ctzll(i);
        for (std::size_t w = 0; w < words; ++w) cur[w] ^= basis[bit][w];

        std::fill(deg.begin(), deg.end(), 0);
        std::size_t count = 0;
        bool ok = true;
        for (std::size_t e = 0; e < m && ok; ++e) {
            if (!test(cur, e)) continue;
            ++count;
            if (++deg[edges[e].u] > 2 || ++deg[edges[e].v] > 2) ok = false;
        }
        if (!ok) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) ok = false;
            else if (deg[v] == 2) verts.push_back(v);
        if (!ok) continue;

        std::vector<std::vector<int>> local(n);
        for (std::size_t e = 0; e < m; ++e)
            if (test(cur, e)) {
                local[edges[e].u].push_back(edges[e].v);
                local[edges[e].v].push_back(edges[e].u);
            }
        UndirectedCycle c = make_cycle(g, verts, local);
        if (static_cast<std::size_t>(c.length()) != count) continue;  // several disjoint cycles
        cycles.push_back(std::move(c));
        if (cycles.size() > cap)
            throw SignumError(ErrorKind::CycleBudgetExceeded,
                              "more than " + std::to_string(cap) + " simple cycles");
    }
    std::sort(cycles.begin(), cycles.end(), [](const UndirectedCycle& a, const UndirectedCycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return cycles;
}

GraphShape classify_shape(const SignedGraph& g) {
    if (!g.connected()) throw SignumError(ErrorKind::Disconnected, "the signed graph is not connected");
    const int n = g.order();
    const int m = static_cast<int>(g.edges().size());
    GraphShape shape;
    int max_deg = 0;
    bool all_two = true;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        max_deg = std::max(max_deg, d);
        if (d == 1) shape.leaves.push_back(v);
        if (d != 2) all_two = false;
    }
    if (m == n - 1) {
        shape.kind = max_deg <= 2 ? ShapeKind::Path : ShapeKind::Tree;
        return shape;
    }
    if (m == n && all_two) {
        shape.kind = ShapeKind::SingleCycle;
    } else if (m == n) {
        shape.kind = ShapeKind::Unicyclic;
    } else if (shape.leaves.empty()) {
        shape.kind = ShapeKind::MultiCycleNoLeaf;
    } else {
        shape.kind = ShapeKind::Other;
    }
    try {
        shape.cycles = undirected_cycles(g);
    } catch (const SignumError&) {
        if (shape.kind != ShapeKind::Other) throw;
    }
    return shape;
}

std::vector<int> path_order(const SignedGraph& g) {
    const int n = g.order();
    std::vector<int> order;
    if (n == 0) return order;
    int start = 0;
    if (n > 1) {
        start = -1;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 1) {
                start = v;
                break;
            }
        if (start < 0) throw SignumError(ErrorKind::InvalidArgument, "graph is not a path");
    }
    int prev = -1, cur = start;
    while (cur >= 0) {
        order.push_back(cur);
        int next = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) next = w;
        if (g.degree(cur) > 2 || static_cast<int>(order.size()) > n)
            throw SignumError(ErrorKind::InvalidArgument, "graph is not a path");
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(order.size()) != n) throw SignumError(ErrorKind::InvalidArgument, "graph is not a path");
    return order;
}

std::vector<Sign> path_edge_signs(const SignedGraph& g) {
    const auto order = path_order(g);
    std::vector<Sign> signs;
    for (std::size_t t = 0; t + 1 < order.size(); ++t) signs.push_back(g.sign(order[t], order[t + 1]));
    return signs;
}

std::vector<MaximalSignedRun> maximal_signed_runs(const std::vector<Sign>& signs, bool cyclic) {
    std::vector<MaximalSignedRun> runs;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (runs.empty() || runs.back().sign != signs[i]) runs.push_back({signs[i], {}});
        runs.back().edges.push_back(static_cast<int>(i));
    }
    if (cyclic && runs.size() > 1 && runs.front().sign == runs.back().sign) {
        auto& last = runs.back();
        last.edges.insert(last.edges.end(), runs.front().edges.begin(), runs.front().edges.end());
        runs.erase(runs.begin());
    }
    return runs;
}

CycleStructureReport cycle_structure(const SignedGraph& g) {
    if (!g.connected()) throw SignumError(ErrorKind::Disconnected, "the signed graph is not connected");
    const int n = g.order();
    CycleStructureReport report;
    report.cycles = undirected_cycles(g);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) report.leaves.push_back(v);

    const std::size_t c = report.cycles.size();
    std::vector<char> on_cycle(n, 0);
    std::vector<std::vector<char>> member(c, std::vector<char>(n, 0));
    for (std::size_t k = 0; k < c; ++k)
        for (int v : report.cycles[k].vertices) {
            on_cycle[v] = 1;
            member[k][v] = 1;
        }

    std::vector<std::vector<int>> dist(n);
    for (int v = 0; v < n; ++v) dist[v] = bfs_distances(g, v);

    for (int leaf : report.leaves) {
        for (std::size_t k = 0; k < c; ++k) {
            int best = std::numeric_limits<int>::max();
            for (int v : report.cycles[k].vertices) best = std::min(best, dist[leaf][v]);
            report.leaf_cycle_distances.push_back({leaf, static_cast<int>(k), best});
        }
    }

    for (std::size_t a = 0; a < c; ++a) {
        for (std::size_t b = a + 1; b < c; ++b) {
            int graph_distance = std::numeric_limits<int>::max();
            for (int u : report.cycles[a].vertices)
                for (int w : report.cycles[b].vertices) graph_distance = std::min(graph_distance, dist[u][w]);

            int connecting = -1;
            if (graph_distance == 0) {
                connecting = 0;
            } else {
                // Multi-source BFS from cycle a through vertices lying on no cycle.
                std::vector<int> d(n, -1);
                std::deque<int> queue;
                for (int u : report.cycles[a].vertices) {
                    d[u] = 0;
                    queue.push_back(u);
                }
                while (!queue.empty() && connecting < 0) {
                    const int x = queue.front();
                    queue.pop_front();
                    for (int y : g.neighbors(x)) {
                        if (member[b][y]) {
                            connecting = d[x] + 1;
                            break;
                        }
                        if (d[y] >= 0 || on_cycle[y]) continue;
                        d[y] = d[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if (connecting >= 0)
                report.path_adjacent_pairs.push_back(
                    {static_cast<int>(a), static_cast<int>(b), connecting, graph_distance});
        }
    }
    return report;
}

std::string to_dot(const SignedDigraph& d) {
    std::ostringstream out;
    out << "digraph D {\n";
    for (int v = 0; v < d.order(); ++v) out << "  " << v + 1 << ";\n";
    for (const Arc& a : d.arcs())
        out << "  " << a.from + 1 << " -> " << a.to + 1 << " [label=\"" << to_char(a.sign) << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const SignedGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v + 1 << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  " << e.u + 1 << " -- " << e.v + 1 << " [label=\"" << to_char(e.sign) << "\"";
        if (e.sign == Sign::Minus) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace signum
