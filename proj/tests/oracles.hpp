#pragma once

// Brute-force references used only by tests. Nothing here calls the library's
// cycle, matching or polynomial code.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

// Sign of a permutation given as a successor array.
inline int perm_sign(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int s = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

// Leibniz expansion over the rows/columns listed in idx.
inline double leibniz_det(const Eigen::MatrixXd& a, const std::vector<int>& idx) {
    const int k = static_cast<int>(idx.size());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    double det = 0.0;
    do {
        double term = perm_sign(perm);
        for (int t = 0; t < k && term != 0.0; ++t) term *= a(idx[t], idx[perm[t]]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

inline double leibniz_det(const Eigen::MatrixXd& a) {
    std::vector<int> idx(a.rows());
    std::iota(idx.begin(), idx.end(), 0);
    return leibniz_det(a, idx);
}

// Ascending characteristic polynomial: the x^{n-k} coefficient is (-1)^k times
// the sum of all k x k principal minors.
inline std::vector<double> char_poly_minors(const Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    std::vector<double> desc(n + 1, 0.0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) idx.push_back(v);
        const int k = static_cast<int>(idx.size());
        desc[k] += (k % 2 ? -1.0 : 1.0) * (k == 0 ? 1.0 : leibniz_det(a, idx));
    }
    return {desc.rbegin(), desc.rend()};
}

// adj[i][j] != 0 iff arc i -> j (loops on the diagonal).
using Adj = std::vector<std::vector<int>>;

// True iff the vertex set `mask` admits a bijection sigma with every arc
// v -> sigma(v) present.
inline bool coverable(const Adj& adj, std::uint32_t mask) {
    std::vector<int> vs;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        if (mask >> v & 1u) vs.push_back(v);
    const int k = static_cast<int>(vs.size());
    std::vector<char> dp(1u << k, 0);  // first popcount(m) sources onto targets m
    dp[0] = 1;
    for (std::uint32_t m = 0; m < (1u << k); ++m) {
        if (!dp[m]) continue;
        const int src = __builtin_popcount(m);
        if (src == k) continue;
        for (int t = 0; t < k; ++t)
            if (!(m >> t & 1u) && adj[vs[src]][vs[t]]) dp[m | 1u << t] = 1;
    }
    return dp[(1u << k) - 1];
}

inline int max_cover(const Adj& adj) {
    const int n = static_cast<int>(adj.size());
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int c = __builtin_popcount(mask);
        if (c > best && coverable(adj, mask)) best = c;
    }
    return best;
}

// Signs sgn(sigma) * prod sign(v, sigma v) over all bijections of all
// L-subsets; `sign` holds -1/0/+1.
inline std::set<int> composite_signs(const Adj& sign, int length) {
    const int n = static_cast<int>(sign.size());
    std::set<int> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != length) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) vs.push_back(v);
        std::vector<int> perm(vs.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int s = perm_sign(perm);
            for (std::size_t t = 0; t < vs.size() && s != 0; ++t) s *= sign[vs[t]][vs[perm[t]]];
            if (s != 0) out.insert(s);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

// Polynomial (ascending) with the given roots.
inline std::vector<double> from_roots(const std::vector<std::complex<double>>& roots) {
    std::vector<std::complex<double>> c{1.0};
    for (const auto& r : roots) {
        std::vector<std::complex<double>> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    std::vector<double> out;
    for (const auto& z : c) out.push_back(z.real());
    return out;
}

// Multiset distance under greedy nearest pairing; infinity on size mismatch.
inline double multiset_gap(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
    if (a.size() != b.size()) return 1e300;
    double worst = 0.0;
    for (const auto& z : a) {
        auto it = std::min_element(b.begin(), b.end(),
                                   [&](const auto& x, const auto& y) { return std::abs(x - z) < std::abs(y - z); });
        worst = std::max(worst, std::abs(*it - z));
        b.erase(it);
    }
    return worst;
}

inline std::vector<std::complex<double>> eigs(const Eigen::MatrixXd& a) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    std::vector<std::complex<double>> out;
    for (int k = 0; k < a.rows(); ++k) out.push_back(es.eigenvalues()(k));
    return out;
}

// Random labelled tree on n vertices via a random parent array.
inline std::vector<std::pair<int, int>> random_tree(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    return edges;
}

}  // namespace oracle
