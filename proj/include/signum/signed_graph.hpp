#pragma once

#include "signum/pattern.hpp"

#include <string>
#include <utility>
#include <vector>

namespace signum {

struct Arc {
    int from;
    int to;
    Sign sign;
};

// Arc (i,j) exists iff p_ij != 0; diagonal entries become loops.
class SignedDigraph {
public:
    SignedDigraph() = default;
    explicit SignedDigraph(const SignPattern& p);

    int order() const noexcept { return n_; }
    Sign sign(int i, int j) const { return signs_[static_cast<std::size_t>(i) * n_ + j]; }
    bool has_arc(int i, int j) const { return sign(i, j) != Sign::Zero; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    const std::vector<int>& successors(int i) const { return out_[i]; }

private:
    int n_ = 0;
    std::vector<Sign> signs_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
};

// Undirected edge with u < v; sign is sgn(p_uv * p_vu).
struct Edge {
    int u;
    int v;
    Sign sign;

    friend bool operator==(const Edge&, const Edge&) = default;
};

class SignedGraph {
public:
    SignedGraph() = default;
    SignedGraph(int n, std::vector<Edge> edges);

    int order() const noexcept { return n_; }
    Sign sign(int u, int v) const { return signs_[static_cast<std::size_t>(u) * n_ + v]; }
    bool has_edge(int u, int v) const { return sign(u, v) != Sign::Zero; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool connected() const;

private:
    int n_ = 0;
    std::vector<Sign> signs_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;  // sorted ascending
};

// Throws NotCombinatoriallySymmetric. Diagonal entries are ignored.
SignedGraph build_graph(const SignPattern& p);
std::pair<SignedDigraph, SignedGraph> build_graphs(const SignPattern& p);

// vertices[t]–vertices[t+1 mod k] is edge t; edge_signs[t] is its sign.
// Canonical orientation: smallest vertex first, then the smaller neighbour.
struct UndirectedCycle {
    std::vector<int> vertices;
    std::vector<Sign> edge_signs;

    int length() const noexcept { return static_cast<int>(vertices.size()); }
    int negative_edges() const;
    friend bool operator==(const UndirectedCycle&, const UndirectedCycle&) = default;
};

enum class ShapeKind { Path, Tree, SingleCycle, Unicyclic, MultiCycleNoLeaf, Other };
std::string_view to_string(ShapeKind kind);

struct GraphShape {
    ShapeKind kind = ShapeKind::Other;
    std::vector<UndirectedCycle> cycles;  // empty for Path and Tree
    std::vector<int> leaves;
};

// Throws Disconnected. Cycles are listed for every cyclic kind; for Other the
// list is left empty when enumeration would exceed the cycle cap.
GraphShape classify_shape(const SignedGraph& g);

// All simple cycles of g, ordered by (length, vertices). Cap: 10^4 cycles.
std::vector<UndirectedCycle> undirected_cycles(const SignedGraph& g, std::size_t cap = 10000);

// Vertex order along a path graph, starting from its smaller end vertex.
std::vector<int> path_order(const SignedGraph& g);
// Edge signs along path_order.
std::vector<Sign> path_edge_signs(const SignedGraph& g);

struct MaximalSignedRun {
    Sign sign = Sign::Plus;
    std::vector<int> edges;  // indices into the traversed sequence, in traversal order

    int length() const noexcept { return static_cast<int>(edges.size()); }
};

// Partition into maximal constant-sign runs. With cyclic=true the run that
// wraps past the end is merged with the leading run.
std::vector<MaximalSignedRun> maximal_signed_runs(const std::vector<Sign>& signs, bool cyclic);

std::vector<int> bfs_distances(const SignedGraph& g, int source);  // -1 = unreachable
int distance(const SignedGraph& g, int u, int v);

struct LeafCycleDistance {
    int leaf;
    int cycle;  // index into CycleStructureReport::cycles
    int distance;
};

struct PathAdjacency {
    int first;   // cycle indices, first < second
    int second;
    // Fewest edges on a path u v_1 ... v_r w (u, w on the two cycles, every v_i
    // off all cycles). Zero when the cycles share a vertex.
    int connecting_edges;
    // Plain graph distance min dist(u, w) over u, w on the two cycles.
    int graph_distance;
};

struct CycleStructureReport {
    std::vector<UndirectedCycle> cycles;
    std::vector<int> leaves;
    std::vector<LeafCycleDistance> leaf_cycle_distances;
    std::vector<PathAdjacency> path_adjacent_pairs;
};

// Throws Disconnected, CycleBudgetExceeded.
CycleStructureReport cycle_structure(const SignedGraph& g);

// Vertices are printed 1-based.
std::string to_dot(const SignedDigraph& d);
std::string to_dot(const SignedGraph& g);

}  // namespace signum
