#include "signum/charpoly.hpp"

#include "signum/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace signum {

CharPoly char_poly(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) throw SignumError(ErrorKind::DimensionMismatch, "matrix is not square");
    if (!a.allFinite()) throw SignumError(ErrorKind::NonFinite, "matrix has non-finite entries");
    const int n = static_cast<int>(a.rows());
    if (n == 0) return {{1.0}};

    const Eigen::MatrixXd h = n > 2 ? Eigen::MatrixXd(Eigen::HessenbergDecomposition<Eigen::MatrixXd>(a).matrixH())
                                    : a;

    // p[k] = det(xI - H[0..k)), ascending coefficients; p[0] = 1.
    std::vector<std::vector<double>> p(n + 1);
    p[0] = {1.0};
    for (int k = 1; k <= n; ++k) {
        std::vector<double> next(k + 1, 0.0);
        const auto& prev = p[k - 1];
        const double hkk = h(k - 1, k - 1);
        for (int j = 0; j < k; ++j) {
            next[j + 1] += prev[j];
            next[j] -= hkk * prev[j];
        }
        // Expansion along column k-1 of the leading k x k block.
        double beta = 1.0;
        for (int i = k - 1; i >= 1; --i) {
            beta *= h(i, i - 1);
            const double w = h(i - 1, k - 1) * beta;
            if (w == 0.0) continue;
            for (std::size_t j = 0; j < p[i - 1].size(); ++j) next[j] -= w * p[i - 1][j];
        }
        p[k] = std::move(next);
    }
    CharPoly out{std::move(p[n])};
    for (double c : out.coeffs)
        if (!std::isfinite(c)) throw SignumError(ErrorKind::NonFinite, "characteristic polynomial overflowed");
    return out;
}

std::vector<Sign> coefficient_signs(const CharPoly& p) {
    double scale = 0.0;
    for (double c : p.coeffs) scale = std::max(scale, std::abs(c));
    const double tol = 1e-8 * (1.0 + scale);
    std::vector<Sign> out;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) out.push_back(sign_of(*it, tol));
    return out;
}

EkSign ek_sign(const SignPattern& p, int k) {
    if (k < 0 || k > p.order()) throw SignumError(ErrorKind::InvalidArgument, "k out of range");
    const SignSet s = composite_sign_set(SignedDigraph(p), k);
    AmbSign sign = AmbSign::Zero;
    if (s.ambiguous()) sign = AmbSign::Ambiguous;
    else if (s.contains_plus) sign = AmbSign::Plus;
    else if (s.contains_minus) sign = AmbSign::Minus;
    return {k, sign};
}

AmbSign sign_det(const SignPattern& p) { return ek_sign(p, p.order()).sign; }

std::vector<AmbSign> symbolic_char_poly(const SignPattern& p) {
    const int n = p.order();
    std::vector<AmbSign> out{AmbSign::Plus};
    for (int k = 1; k <= n; ++k) {
        const AmbSign e = ek_sign(p, k).sign;
        out.push_back(k % 2 == 0 ? e : e * AmbSign::Minus);
    }
    return out;
}

namespace {

int count_changes(const std::vector<Sign>& s) {
    int changes = 0;
    Sign last = Sign::Zero;
    for (Sign x : s) {
        if (x == Sign::Zero) continue;
        if (last != Sign::Zero && x != last) ++changes;
        last = x;
    }
    return changes;
}

}  // namespace

Variations descartes(const std::vector<Sign>& descending) {
    if (descending.empty() || descending.front() == Sign::Zero)
        throw SignumError(ErrorKind::ZeroLeading, "leading coefficient is zero");
    const int deg = static_cast<int>(descending.size()) - 1;
    std::vector<Sign> mirrored(descending.size());
    for (int t = 0; t <= deg; ++t) {
        const int power = deg - t;
        mirrored[t] = power % 2 == 1 ? -descending[t] : descending[t];
    }
    return {count_changes(descending), count_changes(mirrored)};
}

Variations descartes(const CharPoly& p) { return descartes(coefficient_signs(p)); }

namespace {

// Min/max sign changes over all resolutions; state = last nonzero sign.
std::pair<int, int> change_bounds(const std::vector<AmbSign>& s) {
    constexpr int kUnset = std::numeric_limits<int>::max();
    // index 0: no nonzero yet, 1: last was -, 2: last was +
    std::array<std::pair<int, int>, 3> st{{{0, 0}, {kUnset, -1}, {kUnset, -1}}};
    auto valid = [](const std::pair<int, int>& r) { return r.second >= 0; };
    for (AmbSign a : s) {
        std::array<std::pair<int, int>, 3> nx{{{kUnset, -1}, {kUnset, -1}, {kUnset, -1}}};
        auto merge = [&](int to, int lo, int hi) {
            nx[to].first = std::min(nx[to].first, lo);
            nx[to].second = std::max(nx[to].second, hi);
        };
        for (int from = 0; from < 3; ++from) {
            if (!valid(st[from])) continue;
            const auto [lo, hi] = st[from];
            const bool can_zero = a == AmbSign::Zero || a == AmbSign::Ambiguous;
            const bool can_minus = a == AmbSign::Minus || a == AmbSign::Ambiguous;
            const bool can_plus = a == AmbSign::Plus || a == AmbSign::Ambiguous;
            if (can_zero) merge(from, lo, hi);
            if (can_minus) {
                const int d = from == 2 ? 1 : 0;
                merge(1, lo + d, hi + d);
            }
            if (can_plus) {
                const int d = from == 1 ? 1 : 0;
                merge(2, lo + d, hi + d);
            }
        }
        st = nx;
    }
    int lo = kUnset, hi = 0;
    for (const auto& r : st)
        if (valid(r)) {
            lo = std::min(lo, r.first);
            hi = std::max(hi, r.second);
        }
    return {lo == kUnset ? 0 : lo, hi};
}

}  // namespace

VariationBounds descartes_bounds(const std::vector<AmbSign>& descending) {
    if (descending.empty() || descending.front() == AmbSign::Zero || descending.front() == AmbSign::Ambiguous)
        throw SignumError(ErrorKind::ZeroLeading, "leading coefficient is zero or ambiguous");
    const int deg = static_cast<int>(descending.size()) - 1;
    std::vector<AmbSign> mirrored(descending.size());
    for (int t = 0; t <= deg; ++t)
        mirrored[t] = (deg - t) % 2 == 1 ? descending[t] * AmbSign::Minus : descending[t];
    const auto [plo, phi] = change_bounds(descending);
    const auto [mlo, mhi] = change_bounds(mirrored);
    return {plo, phi, mlo, mhi};
}

}  // namespace signum
