#include "signum/cycles.hpp"

#include "signum/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace signum {

int CompositeCycle::length() const noexcept {
    int total = 0;
    for (const auto& p : parts) total += p.length();
    return total;
}

Sign CompositeCycle::sign() const noexcept {
    Sign s = Sign::Plus;
    for (const auto& p : parts) s = s * p.sign;
    return s;
}

std::vector<int> CompositeCycle::vertex_set() const {
    std::vector<int> v;
    for (const auto& p : parts) v.insert(v.end(), p.vertices.begin(), p.vertices.end());
    std::sort(v.begin(), v.end());
    return v;
}

SimpleCycle make_simple_cycle(const SignedDigraph& d, std::vector<int> vertices) {
    const int k = static_cast<int>(vertices.size());
    if (k == 0) throw SignumError(ErrorKind::CycleNotInPattern, "empty cycle");
    std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
    int product = 1;
    for (int t = 0; t < k; ++t) {
        const int a = vertices[t];
        const int b = vertices[(t + 1) % k];
        if (a < 0 || a >= d.order() || seen[a])
            throw SignumError(ErrorKind::CycleNotInPattern, "cycle vertices must be distinct and in range");
        seen[a] = 1;
        if (!d.has_arc(a, b))
            throw SignumError(ErrorKind::CycleNotInPattern,
                              "arc (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") is zero");
        product *= to_int(d.sign(a, b));
    }
    std::rotate(vertices.begin(), std::min_element(vertices.begin(), vertices.end()), vertices.end());
    return {std::move(vertices), sign_of_int((k % 2 == 1 ? 1 : -1) * product)};
}

void simple_cycles(const SignedDigraph& d, int max_len, const std::function<void(const SimpleCycle&)>& visit,
                   std::size_t budget) {
    const int n = d.order();
    max_len = std::min(max_len, n);
    std::size_t emitted = 0;
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);

    auto emit = [&](int product) {
        if (++emitted > budget)
            throw SignumError(ErrorKind::CycleBudgetExceeded, "more than " + std::to_string(budget) + " cycles");
        const int k = static_cast<int>(path.size());
        visit(SimpleCycle{path, sign_of_int((k % 2 == 1 ? 1 : -1) * product)});
    };

    // Cycles are rooted at their smallest vertex; the walk only visits larger ones.
    std::function<void(int, int, int)> extend = [&](int start, int u, int product) {
        for (int w : d.successors(u)) {
            if (w == start && u != start) {
                emit(product * to_int(d.sign(u, w)));
            } else if (w > start && !on_path[w] && static_cast<int>(path.size()) < max_len) {
                path.push_back(w);
                on_path[w] = 1;
                extend(start, w, product * to_int(d.sign(u, w)));
                on_path[w] = 0;
                path.pop_back();
            }
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        if (max_len >= 1 && d.has_arc(s, s)) emit(to_int(d.sign(s, s)));
        on_path[s] = 1;
        extend(s, s, 1);
        on_path[s] = 0;
    }
}

std::vector<SimpleCycle> simple_cycles(const SignedDigraph& d, int max_len) {
    std::vector<SimpleCycle> out;
    simple_cycles(d, max_len, [&](const SimpleCycle& c) { out.push_back(c); });
    return out;
}

namespace {

// Min-cost perfect assignment (potentials, O(k^3)). Returns col assigned to each row.
std::vector<int> hungarian(const std::vector<std::vector<long long>>& cost) {
    const int k = static_cast<int>(cost.size());
    const long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> u(k + 1, 0), v(k + 1, 0);
    std::vector<int> p(k + 1, 0), way(k + 1, 0);
    for (int i = 1; i <= k; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<long long> minv(k + 1, inf);
        std::vector<char> used(k + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            long long delta = inf;
            int j1 = 0;
            for (int j = 1; j <= k; ++j) {
                if (used[j]) continue;
                const long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= k; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> row_to_col(k, -1);
    for (int j = 1; j <= k; ++j)
        if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

// Assignment over active vertices: arc = gain 1, unlooped fixed point = gain 0.
std::vector<int> best_cover(const SignedDigraph& d, const std::vector<char>& active, std::vector<int>& idx) {
    idx.clear();
    for (int v = 0; v < d.order(); ++v)
        if (active[v]) idx.push_back(v);
    const int k = static_cast<int>(idx.size());
    const long long forbidden = static_cast<long long>(k) + 1;
    std::vector<std::vector<long long>> cost(k, std::vector<long long>(k, forbidden));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (d.has_arc(idx[a], idx[b])) cost[a][b] = -1;
            else if (a == b) cost[a][b] = 0;
        }
    return hungarian(cost);
}

}  // namespace

CompositeCycle max_composite_cycle(const SignedDigraph& d, const std::vector<char>& active) {
    if (active.size() != static_cast<std::size_t>(d.order()))
        throw SignumError(ErrorKind::DimensionMismatch, "active mask length does not match order");
    std::vector<int> idx;
    const auto assign = best_cover(d, active, idx);
    const int k = static_cast<int>(idx.size());
    CompositeCycle out;
    std::vector<char> seen(k, 0);
    for (int a = 0; a < k; ++a) {
        if (seen[a]) continue;
        if (assign[a] == a && !d.has_arc(idx[a], idx[a])) {
            seen[a] = 1;
            continue;
        }
        std::vector<int> verts;
        for (int x = a; !seen[x]; x = assign[x]) {
            seen[x] = 1;
            verts.push_back(idx[x]);
        }
        out.parts.push_back(make_simple_cycle(d, std::move(verts)));
    }
    std::sort(out.parts.begin(), out.parts.end(),
              [](const SimpleCycle& x, const SimpleCycle& y) { return x.vertices.front() < y.vertices.front(); });
    return out;
}

int max_composite_length(const SignedDigraph& d, const std::vector<char>& active) {
    return max_composite_cycle(d, active).length();
}

int max_composite_length(const SignedDigraph& d) {
    return max_composite_length(d, std::vector<char>(static_cast<std::size_t>(d.order()), 1));
}

namespace {

class SignSetSearch {
public:
    SignSetSearch(const SignedDigraph& d, int length) : d_(d), n_(d.order()), target_(length) {}

    SignSet run() {
        if (target_ == 0) {
            record();  // the empty composite cycle has sign +
            return result_;
        }
        descend(0, 0);
        return result_;
    }

private:
    static constexpr std::size_t kStepBudget = 50'000'000;

    void tick() {
        if (++steps_ > kStepBudget)
            throw SignumError(ErrorKind::CycleBudgetExceeded, "composite cycle enumeration budget exhausted");
    }

    void record() {
        CompositeCycle c{parts_};
        auto& slot = c.sign() == Sign::Plus ? result_.plus_witness : result_.minus_witness;
        (c.sign() == Sign::Plus ? result_.contains_plus : result_.contains_minus) = true;
        if (!slot) {
            slot = std::move(c);
            return;
        }
        const auto a = c.vertex_set();
        const auto b = slot->vertex_set();
        auto key = [](const CompositeCycle& x) {
            std::vector<std::vector<int>> k;
            for (const auto& p : x.parts) k.push_back(p.vertices);
            return k;
        };
        if (a < b || (a == b && key(c) < key(*slot))) slot = std::move(c);
    }

    // Decide vertex v: either it starts a cycle through later free vertices, or it is skipped.
    void descend(int v, int covered) {
        tick();
        if (covered == target_) {
            record();
            return;
        }
        while (v < n_ && used_[v]) ++v;
        if (v == n_) return;
        int free_count = 0;
        for (int w = v; w < n_; ++w) free_count += used_[w] ? 0 : 1;
        if (covered + free_count < target_) return;

        used_[v] = 1;
        path_.assign(1, v);
        if (d_.has_arc(v, v)) close_cycle(covered, to_int(d_.sign(v, v)));
        grow(v, v, covered, 1);
        used_[v] = 0;

        descend(v + 1, covered);
    }

    void grow(int start, int u, int covered, int product) {
        for (int w : d_.successors(u)) {
            tick();
            if (w == start && u != start) {
                close_cycle(covered, product * to_int(d_.sign(u, w)));
            } else if (w > start && !used_[w] && covered + static_cast<int>(path_.size()) < target_) {
                used_[w] = 1;
                path_.push_back(w);
                grow(start, w, covered, product * to_int(d_.sign(u, w)));
                path_.pop_back();
                used_[w] = 0;
            }
        }
    }

    void close_cycle(int covered, int product) {
        const int k = static_cast<int>(path_.size());
        if (covered + k > target_) return;
        parts_.push_back(SimpleCycle{path_, sign_of_int((k % 2 == 1 ? 1 : -1) * product)});
        const auto saved = path_;
        descend(path_.front() + 1, covered + k);
        path_ = saved;
        parts_.pop_back();
    }

    const SignedDigraph& d_;
    int n_;
    int target_;
    std::vector<char> used_ = std::vector<char>(static_cast<std::size_t>(n_), 0);
    std::vector<int> path_;
    std::vector<SimpleCycle> parts_;
    SignSet result_;
    std::size_t steps_ = 0;
};

}  // namespace

SignSet composite_sign_set(const SignedDigraph& d, int length) {
    if (d.order() > 16) throw SignumError(ErrorKind::OrderCapExceeded, "composite sign sets are limited to n <= 16");
    if (length < 0 || length > d.order()) return {};
    return SignSetSearch(d, length).run();
}

SignSet max_composite_sign_set(const SignedDigraph& d) {
    if (d.order() > 16) throw SignumError(ErrorKind::OrderCapExceeded, "composite sign sets are limited to n <= 16");
    const int m = max_composite_length(d);
    if (m == 0) return {};
    return composite_sign_set(d, m);
}

std::vector<int> hopcroft_karp(int n_left, int n_right, const std::vector<std::vector<int>>& adj) {
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> match_l(n_left, -1), match_r(n_right, -1), dist(n_left);

    auto bfs = [&] {
        std::deque<int> queue;
        bool reachable = false;
        for (int u = 0; u < n_left; ++u) {
            dist[u] = match_l[u] < 0 ? 0 : inf;
            if (match_l[u] < 0) queue.push_back(u);
        }
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                const int w = match_r[v];
                if (w < 0) {
                    reachable = true;
                } else if (dist[w] == inf) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return reachable;
    };

    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[u]) {
            const int w = match_r[v];
            if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = inf;
        return false;
    };

    while (bfs())
        for (int u = 0; u < n_left; ++u)
            if (match_l[u] < 0) dfs(u);
    return match_l;
}

bool cover_extension_exists(const SignedDigraph& d, const SimpleCycle& gamma) {
    make_simple_cycle(d, gamma.vertices);  // validates
    const int n = d.order();
    std::vector<char> removed(n, 0);
    for (int v : gamma.vertices) removed[v] = 1;
    std::vector<int> local(n, -1), idx;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            local[v] = static_cast<int>(idx.size());
            idx.push_back(v);
        }
    const int k = static_cast<int>(idx.size());
    std::vector<std::vector<int>> adj(k);
    for (int a = 0; a < k; ++a)
        for (int w : d.successors(idx[a]))
            if (!removed[w]) adj[a].push_back(local[w]);
    const auto match = hopcroft_karp(k, k, adj);
    return std::none_of(match.begin(), match.end(), [](int x) { return x < 0; });
}

namespace {

std::vector<int> two_coloring(const SignedGraph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return {};
                }
            }
        }
    }
    return color;
}

}  // namespace

bool is_bipartite(const SignedGraph& g) { return g.order() == 0 || !two_coloring(g).empty(); }

Matching max_signed_matching(const SignedGraph& g, Sign sign) {
    const auto color = two_coloring(g);
    if (color.empty() && g.order() > 0) throw SignumError(ErrorKind::InvalidArgument, "graph is not bipartite");
    const int n = g.order();
    std::vector<int> left, right, local(n, -1);
    for (int v = 0; v < n; ++v) {
        auto& side = color[v] == 0 ? left : right;
        local[v] = static_cast<int>(side.size());
        side.push_back(v);
    }
    std::vector<std::vector<int>> adj(left.size());
    for (std::size_t a = 0; a < left.size(); ++a)
        for (int w : g.neighbors(left[a]))
            if (g.sign(left[a], w) == sign) adj[a].push_back(local[w]);
    const auto match = hopcroft_karp(static_cast<int>(left.size()), static_cast<int>(right.size()), adj);
    Matching m;
    for (std::size_t a = 0; a < left.size(); ++a) {
        if (match[a] < 0) continue;
        const int u = left[a], w = right[match[a]];
        m.edges.push_back({std::min(u, w), std::max(u, w), sign});
    }
    std::sort(m.edges.begin(), m.edges.end(), [](const Edge& x, const Edge& y) { return x.u < y.u; });
    return m;
}

GammaMatchings gamma_matchings_from_odd_run(const UndirectedCycle& c, const MaximalSignedRun& run) {
    const int k = c.length();
    if (k % 2 != 0) throw SignumError(ErrorKind::CycleNotEven, "cycle length " + std::to_string(k) + " is odd");
    const int len = run.length();
    if (len % 2 == 0) throw SignumError(ErrorKind::RunNotOdd, "run length " + std::to_string(len) + " is even");
    const int r0 = run.edges.front();
    for (int t = 0; t < len; ++t)
        if (run.edges[t] != (r0 + t) % k || c.edge_signs[run.edges[t]] != run.sign)
            throw SignumError(ErrorKind::InvalidArgument, "run is not a run of this cycle");

    // Local index 0 is the first run edge.
    std::vector<int> local;
    for (int t = 0; t <= len - 1; t += 2) local.push_back(t);
    for (int t = len; t <= k - 3; t += 2) local.push_back(t);
    local.push_back(k - 1);

    GammaMatchings out;
    for (int t : local) {
        const int e = (t + r0) % k;
        out.gamma.push_back(e);
        const int a = c.vertices[e], b = c.vertices[(e + 1) % k];
        const Edge edge{std::min(a, b), std::max(a, b), c.edge_signs[e]};
        (edge.sign == Sign::Minus ? out.negative : out.positive).edges.push_back(edge);
    }
    return out;
}

CompositeCycle matching_cycles(const SignedDigraph& d, const Matching& m) {
    CompositeCycle c;
    for (const Edge& e : m.edges) c.parts.push_back(make_simple_cycle(d, {e.u, e.v}));
    std::sort(c.parts.begin(), c.parts.end(),
              [](const SimpleCycle& x, const SimpleCycle& y) { return x.vertices.front() < y.vertices.front(); });
    return c;
}

}  // namespace signum
