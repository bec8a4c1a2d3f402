#pragma once

#include "signum/signed_graph.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace signum {

// Directed simple cycle i_1 -> i_2 -> ... -> i_k -> i_1, rotated so the
// smallest vertex comes first. k = 1 is a loop.
struct SimpleCycle {
    std::vector<int> vertices;
    Sign sign = Sign::Plus;  // (-1)^(k-1) * product of arc signs

    int length() const noexcept { return static_cast<int>(vertices.size()); }
    friend bool operator==(const SimpleCycle&, const SimpleCycle&) = default;
};

// Vertex-disjoint simple cycles, ordered by their first vertex.
struct CompositeCycle {
    std::vector<SimpleCycle> parts;

    int length() const noexcept;
    Sign sign() const noexcept;
    std::vector<int> vertex_set() const;  // ascending
    friend bool operator==(const CompositeCycle&, const CompositeCycle&) = default;
};

struct Matching {
    std::vector<Edge> edges;
    int length() const noexcept { return static_cast<int>(edges.size()); }
};

struct SignSet {
    bool contains_plus = false;
    bool contains_minus = false;
    // Per present sign: the lexicographically smallest vertex set, then the
    // smallest canonical part list.
    std::optional<CompositeCycle> plus_witness;
    std::optional<CompositeCycle> minus_witness;

    bool empty() const noexcept { return !contains_plus && !contains_minus; }
    bool ambiguous() const noexcept { return contains_plus && contains_minus; }
};

// Throws CycleNotInPattern when an arc is missing or vertices repeat.
SimpleCycle make_simple_cycle(const SignedDigraph& d, std::vector<int> vertices);

// Calls visit once per simple cycle of length <= max_len. Throws
// CycleBudgetExceeded after `budget` cycles.
void simple_cycles(const SignedDigraph& d, int max_len, const std::function<void(const SimpleCycle&)>& visit,
                   std::size_t budget = 1'000'000);
std::vector<SimpleCycle> simple_cycles(const SignedDigraph& d, int max_len);

// Largest number of vertices covered by disjoint cycles (loops included).
int max_composite_length(const SignedDigraph& d);
// Same, restricted to vertices with active[v] != 0.
int max_composite_length(const SignedDigraph& d, const std::vector<char>& active);
// A composite cycle attaining max_composite_length(d, active).
CompositeCycle max_composite_cycle(const SignedDigraph& d, const std::vector<char>& active);

// Signs of all composite cycles of exactly `length` vertices. Refuses n > 16.
SignSet composite_sign_set(const SignedDigraph& d, int length);
SignSet max_composite_sign_set(const SignedDigraph& d);

// True iff the vertices outside gamma can be covered by disjoint cycles.
bool cover_extension_exists(const SignedDigraph& d, const SimpleCycle& gamma);

// Maximum matching of a bipartite graph; returns the partner of each left
// vertex or -1.
std::vector<int> hopcroft_karp(int n_left, int n_right, const std::vector<std::vector<int>>& adj);

// Maximum matching using only edges of the given sign. Requires g bipartite;
// throws InvalidArgument otherwise.
Matching max_signed_matching(const SignedGraph& g, Sign sign);
bool is_bipartite(const SignedGraph& g);

struct GammaMatchings {
    std::vector<int> gamma;  // edge indices of the cycle that form the selection
    Matching negative;       // M1
    Matching positive;       // M2
};

// For an even cycle and one of its odd maximal runs: alternate run edges,
// alternate edges of the complementary odd path, and the closing edge, split
// by sign. Satisfies 2(|M1| + |M2|) = k + 2. Throws CycleNotEven, RunNotOdd.
GammaMatchings gamma_matchings_from_odd_run(const UndirectedCycle& c, const MaximalSignedRun& run);

// Canonical composite cycle for an undirected matching: one 2-cycle per edge.
CompositeCycle matching_cycles(const SignedDigraph& d, const Matching& m);

}  // namespace signum
