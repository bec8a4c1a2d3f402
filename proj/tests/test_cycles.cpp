#include <doctest.h>

#include "oracles.hpp"

#include "signum/error.hpp"
#include "signum/fixtures.hpp"

#include <random>

using namespace signum;

namespace {

SignedDigraph digraph(const char* fixture_name) { return SignedDigraph(find_fixture(fixture_name)->pattern); }

SignPattern random_digraph_pattern(std::mt19937_64& rng, int n, double density, bool loops) {
    SignPattern p(n);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((i != j || loops) && u(rng) < density) p.set(i, j, u(rng) < 0.5 ? Sign::Plus : Sign::Minus);
    return p;
}

oracle::Adj sign_matrix(const SignPattern& p) {
    oracle::Adj a(p.order(), std::vector<int>(p.order(), 0));
    for (int i = 0; i < p.order(); ++i)
        for (int j = 0; j < p.order(); ++j) a[i][j] = to_int(p(i, j));
    return a;
}

oracle::Adj support(const SignPattern& p) {
    auto a = sign_matrix(p);
    for (auto& row : a)
        for (int& x : row) x = x != 0;
    return a;
}

Sign recompute_sign(const SignedDigraph& d, const SimpleCycle& c) {
    Sign s = c.length() % 2 == 1 ? Sign::Plus : Sign::Minus;
    for (int t = 0; t < c.length(); ++t) s = s * d.sign(c.vertices[t], c.vertices[(t + 1) % c.length()]);
    return s;
}

void check_composite(const SignedDigraph& d, const CompositeCycle& c) {
    std::vector<char> used(d.order(), 0);
    Sign s = Sign::Plus;
    for (const auto& part : c.parts) {
        CHECK(recompute_sign(d, part) == part.sign);
        s = s * part.sign;
        for (int v : part.vertices) {
            CHECK_FALSE(used[v]);
            used[v] = 1;
        }
    }
    CHECK(c.sign() == s);
}

// Number of single-cycle permutations over every vertex subset.
int brute_simple_cycle_count(const oracle::Adj& adj, int max_len) {
    const int n = static_cast<int>(adj.size());
    int count = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int k = __builtin_popcount(mask);
        if (k > max_len) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) vs.push_back(v);
        // Fix vs[0] first; enumerate orders of the rest.
        std::vector<int> rest(vs.begin() + 1, vs.end());
        do {
            std::vector<int> cyc{vs[0]};
            cyc.insert(cyc.end(), rest.begin(), rest.end());
            bool ok = true;
            for (int t = 0; t < k && ok; ++t) ok = adj[cyc[t]][cyc[(t + 1) % k]] != 0;
            count += ok;
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return count;
}

UndirectedCycle undirected_cycle(std::string_view signs) {
    UndirectedCycle c;
    for (std::size_t t = 0; t < signs.size(); ++t) {
        c.vertices.push_back(static_cast<int>(t));
        c.edge_signs.push_back(signs[t] == '+' ? Sign::Plus : Sign::Minus);
    }
    return c;
}

void check_gamma(const UndirectedCycle& c, const GammaMatchings& gm) {
    const int k = c.length();
    CHECK(2 * (gm.negative.length() + gm.positive.length()) == k + 2);
    for (const auto* m : {&gm.negative, &gm.positive}) {
        std::vector<int> hits(k, 0);
        for (const auto& e : m->edges) {
            ++hits[e.u];
            ++hits[e.v];
        }
        for (int h : hits) CHECK(h <= 1);
    }
    for (const auto& e : gm.negative.edges) CHECK(e.sign == Sign::Minus);
    for (const auto& e : gm.positive.edges) CHECK(e.sign == Sign::Plus);
}

}  // namespace

TEST_CASE("simple cycles of the small fixtures") {
    SUBCASE("cyclic 3x3 pattern") {
        const auto d = digraph("PAT_EX26");
        const auto cycles = simple_cycles(d, 3);
        int twos = 0;
        std::vector<Sign> threes;
        for (const auto& c : cycles) {
            if (c.length() == 2) {
                ++twos;
                CHECK(c.sign == Sign::Plus);
            }
            if (c.length() == 3) threes.push_back(c.sign);
        }
        CHECK(twos == 3);
        REQUIRE(threes.size() == 2);
        CHECK(threes[0] != threes[1]);
    }
    SUBCASE("all-positive triangle") {
        const auto cycles = simple_cycles(digraph("PAT_XX2"), 3);
        int threes = 0;
        for (const auto& c : cycles)
            if (c.length() == 3) {
                ++threes;
                CHECK(c.sign == Sign::Plus);
            }
        CHECK(threes == 2);
    }
    SUBCASE("2x2 positive pair") {
        const auto cycles = simple_cycles(SignedDigraph(parse_pattern("0 +\n+ 0")), 2);
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].sign == Sign::Minus);
        CHECK(cycles[0].vertices == std::vector<int>{0, 1});
    }
}

TEST_CASE("simple cycle enumeration matches a brute-force count") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + t % 6;
        const auto p = random_digraph_pattern(rng, n, 0.5, true);
        const SignedDigraph d(p);
        const int max_len = 1 + t % n;
        const auto cycles = simple_cycles(d, max_len);
        CHECK(static_cast<int>(cycles.size()) == brute_simple_cycle_count(support(p), max_len));
        for (const auto& c : cycles) {
            CHECK(c.length() <= max_len);
            CHECK(recompute_sign(d, c) == c.sign);
            CHECK(*std::min_element(c.vertices.begin(), c.vertices.end()) == c.vertices.front());
        }
    }
}

TEST_CASE("simple cycle budget and validation") {
    SignPattern full(7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (i != j) full.set(i, j, Sign::Plus);
    const SignedDigraph d(full);
    CHECK_THROWS_AS(simple_cycles(d, 7, [](const SimpleCycle&) {}, 100), SignumError);
    CHECK_THROWS_AS(make_simple_cycle(digraph("PAT_P4"), {0, 2}), SignumError);
    CHECK_THROWS_AS(make_simple_cycle(digraph("PAT_P4"), {0, 1, 0}), SignumError);
    CHECK(make_simple_cycle(digraph("PAT_EX26"), {2, 0, 1}).vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("max composite length matches the cycle-cover oracle") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + t % 9;
        const double density = 0.15 + 0.1 * (t % 5);
        const auto p = random_digraph_pattern(rng, n, density, t % 2 == 0);
        const SignedDigraph d(p);
        const int m = max_composite_length(d);
        CHECK(m == oracle::max_cover(support(p)));
        const auto best = max_composite_cycle(d, std::vector<char>(n, 1));
        CHECK(best.length() == m);
        check_composite(d, best);
    }
}

TEST_CASE("max composite length on the fixture graphs") {
    CHECK(max_composite_length(digraph("PAT_TWO_SQUARES_9")) == 8);
    CHECK(max_composite_length(digraph("PAT_TRIANGLE_PATH")) == 6);
    CHECK(max_composite_length(digraph("PAT_P4")) == 4);
    CHECK(max_composite_length(SignedDigraph(parse_pattern("0"))) == 0);
}

TEST_CASE("composite sign sets match brute-force permutation signs") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 80; ++t) {
        const int n = 2 + t % 6;
        const auto p = random_digraph_pattern(rng, n, 0.45, t % 3 == 0);
        const SignedDigraph d(p);
        const auto sm = sign_matrix(p);
        for (int len = 1; len <= n; ++len) {
            const auto want = oracle::composite_signs(sm, len);
            const auto got = composite_sign_set(d, len);
            CHECK(got.contains_plus == (want.count(1) == 1));
            CHECK(got.contains_minus == (want.count(-1) == 1));
            if (got.plus_witness) {
                CHECK(got.plus_witness->length() == len);
                CHECK(got.plus_witness->sign() == Sign::Plus);
                check_composite(d, *got.plus_witness);
            }
            if (got.minus_witness) {
                CHECK(got.minus_witness->length() == len);
                CHECK(got.minus_witness->sign() == Sign::Minus);
                check_composite(d, *got.minus_witness);
            }
        }
    }
}

TEST_CASE("maximum composite sign sets of the fixtures") {
    const auto ex26 = max_composite_sign_set(digraph("PAT_EX26"));
    CHECK(ex26.ambiguous());
    const auto eg22 = max_composite_sign_set(digraph("PAT_XXEG22"));
    CHECK(eg22.contains_plus);
    CHECK_FALSE(eg22.contains_minus);
    const auto xx2 = max_composite_sign_set(digraph("PAT_XX2"));
    CHECK(xx2.contains_plus);
    CHECK_FALSE(xx2.contains_minus);
    CHECK_THROWS_AS(max_composite_sign_set(SignedDigraph(SignPattern(17))), SignumError);
}

TEST_CASE("cover extension") {
    const auto squares = digraph("PAT_TWO_SQUARES_RUN");
    CHECK(cover_extension_exists(squares, make_simple_cycle(squares, {0, 1, 2, 3})));
    const auto sq_tri = digraph("PAT_SQUARE_TRIANGLE");
    CHECK_FALSE(cover_extension_exists(sq_tri, make_simple_cycle(sq_tri, {5, 6, 7})));
    const auto hex = digraph("PAT_NEG4");
    CHECK(cover_extension_exists(hex, make_simple_cycle(hex, {0, 1, 2, 3})));

    SUBCASE("agrees with the oracle and implies a spanning composite cycle") {
        std::mt19937_64 rng(99);
        int positive = 0;
        for (int t = 0; t < 100; ++t) {
            const int n = 3 + t % 6;
            const auto p = random_digraph_pattern(rng, n, 0.45, false);
            const SignedDigraph d(p);
            const auto adj = support(p);
            for (const auto& c : simple_cycles(d, n)) {
                std::uint32_t rest = (1u << n) - 1;
                for (int v : c.vertices) rest &= ~(1u << v);
                const bool want = rest == 0 || oracle::coverable(adj, rest);
                const bool got = cover_extension_exists(d, c);
                CHECK(got == want);
                if (got) {
                    ++positive;
                    CHECK(max_composite_length(d) == n);
                }
            }
        }
        CHECK(positive > 0);
    }
}

TEST_CASE("unicyclic graphs with even leaf distances add the cycle length") {
    std::mt19937_64 rng(2024);
    int tested = 0;
    for (int t = 0; t < 400 && tested < 60; ++t) {
        const int k = 3 + static_cast<int>(rng() % 4);
        const int n = k + static_cast<int>(rng() % (13 - k));
        SignPattern p(n);
        auto link = [&](int u, int v) {
            p.set(u, v, rng() % 2 ? Sign::Plus : Sign::Minus);
            p.set(v, u, rng() % 2 ? Sign::Plus : Sign::Minus);
        };
        for (int v = 0; v < k; ++v) link(v, (v + 1) % k);
        for (int v = k; v < n; ++v) link(v, static_cast<int>(rng() % v));
        const auto g = build_graph(p);
        const auto rep = cycle_structure(g);
        bool even = true;
        for (const auto& l : rep.leaf_cycle_distances) even = even && l.distance % 2 == 0;
        if (!even) continue;
        ++tested;
        const SignedDigraph d(p);
        std::vector<char> off(n, 1);
        for (int v = 0; v < k; ++v) off[v] = 0;
        CHECK(max_composite_length(d) == k + max_composite_length(d, off));
    }
    CHECK(tested >= 20);
}

TEST_CASE("Hopcroft-Karp matches a brute-force maximum matching") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const int nl = 1 + t % 6, nr = 1 + (t / 6) % 6;
        std::vector<std::vector<int>> adj(nl);
        oracle::Adj full(std::max(nl, nr), std::vector<int>(std::max(nl, nr), 0));
        for (int u = 0; u < nl; ++u)
            for (int v = 0; v < nr; ++v)
                if (rng() % 3 == 0) {
                    adj[u].push_back(v);
                    full[u][v] = 1;
                }
        const auto mate = hopcroft_karp(nl, nr, adj);
        int size = 0;
        std::vector<int> used(nr, 0);
        for (int u = 0; u < nl; ++u)
            if (mate[u] >= 0) {
                ++size;
                CHECK(std::find(adj[u].begin(), adj[u].end(), mate[u]) != adj[u].end());
                CHECK(used[mate[u]]++ == 0);
            }
        // Brute force: largest left subset that can be matched injectively.
        int best = 0;
        for (std::uint32_t mask = 0; mask < (1u << nl); ++mask) {
            std::vector<int> left;
            for (int u = 0; u < nl; ++u)
                if (mask >> u & 1u) left.push_back(u);
            std::vector<int> targets(nr);
            std::iota(targets.begin(), targets.end(), 0);
            if (static_cast<int>(left.size()) > nr || static_cast<int>(left.size()) <= best) continue;
            bool ok = false;
            do {
                bool all = true;
                for (std::size_t i = 0; i < left.size() && all; ++i) all = full[left[i]][targets[i]] != 0;
                ok = all;
            } while (!ok && std::next_permutation(targets.begin(), targets.end()));
            if (ok) best = static_cast<int>(left.size());
        }
        CHECK(size == best);
    }
}

TEST_CASE("signed matchings on bipartite graphs") {
    const auto g = build_graph(find_fixture("PAT_P4")->pattern);
    CHECK(is_bipartite(g));
    CHECK(max_signed_matching(g, Sign::Plus).length() == 2);
    CHECK(max_signed_matching(g, Sign::Minus).length() == 1);
    const auto tri = build_graph(find_fixture("PAT_XX2")->pattern);
    CHECK_FALSE(is_bipartite(tri));
    CHECK_THROWS_AS(max_signed_matching(tri, Sign::Plus), SignumError);

    const SignedDigraph d(find_fixture("PAT_P4")->pattern);
    const auto cc = matching_cycles(d, max_signed_matching(g, Sign::Plus));
    CHECK(cc.length() == 4);
    for (const auto& part : cc.parts) CHECK(part.length() == 2);
}

TEST_CASE("gamma matchings from an odd run") {
    SUBCASE("8-cycle with signs (-,-,-,+,+,-,+,+)") {
        const auto c = undirected_cycle("---++-++");
        const auto runs = maximal_signed_runs(c.edge_signs, true);
        const auto it = std::find_if(runs.begin(), runs.end(),
                                     [](const auto& r) { return r.edges == std::vector<int>{0, 1, 2}; });
        REQUIRE(it != runs.end());
        const auto gm = gamma_matchings_from_odd_run(c, *it);
        CHECK(gm.negative.length() + gm.positive.length() == 5);
        check_gamma(c, gm);
    }
    SUBCASE("4-cycle with alternating signs") {
        const auto c = undirected_cycle("+-+-");
        const auto runs = maximal_signed_runs(c.edge_signs, true);
        REQUIRE(runs.size() == 4);
        const auto gm = gamma_matchings_from_odd_run(c, runs[0]);
        CHECK(gm.negative.length() + gm.positive.length() == 3);
        check_gamma(c, gm);
    }
    SUBCASE("every odd run of random even cycles") {
        std::mt19937_64 rng(17);
        for (int t = 0; t < 200; ++t) {
            const int k = 4 + 2 * static_cast<int>(rng() % 4);
            std::string s(k, '+');
            for (char& ch : s) ch = rng() % 2 ? '+' : '-';
            const auto c = undirected_cycle(s);
            for (const auto& r : maximal_signed_runs(c.edge_signs, true))
                if (r.length() % 2 == 1 && r.length() < k) check_gamma(c, gamma_matchings_from_odd_run(c, r));
        }
    }
    SUBCASE("errors") {
        const auto tri = undirected_cycle("+-+");
        const auto tri_runs = maximal_signed_runs(tri.edge_signs, true);
        CHECK_THROWS_AS(gamma_matchings_from_odd_run(tri, tri_runs[0]), SignumError);
        const auto sq = undirected_cycle("++--");
        const auto sq_runs = maximal_signed_runs(sq.edge_signs, true);
        try {
            gamma_matchings_from_odd_run(sq, sq_runs[0]);
            FAIL("even run accepted");
        } catch (const SignumError& e) {
            CHECK(e.kind() == ErrorKind::RunNotOdd);
        }
    }
}
