#include "signum/witness.hpp"

#include "signum/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace signum {

WitnessSpec spec_from_composite(const CompositeCycle& c, const std::vector<double>& magnitudes, double epsilon) {
    if (magnitudes.size() != c.parts.size())
        throw SignumError(ErrorKind::DimensionMismatch, "one magnitude per part is required");
    WitnessSpec spec{{}, epsilon};
    for (std::size_t t = 0; t < c.parts.size(); ++t) spec.parts.push_back({c.parts[t].vertices, magnitudes[t]});
    return spec;
}

std::vector<double> magnitude_ladder(std::size_t parts, double base) {
    std::vector<double> out;
    double m = 1.0;
    for (std::size_t t = 0; t < parts; ++t) out.push_back(m *= base);
    return out;
}

Eigen::MatrixXd build_witness(const SignPattern& p, const WitnessSpec& spec) {
    if (!(spec.epsilon >= 0.0)) throw SignumError(ErrorKind::InvalidArgument, "epsilon must be non-negative");
    const int n = p.order();
    const SignedDigraph d(p);
    Eigen::MatrixXd mag = Eigen::MatrixXd::Zero(n, n);
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> emphasized =
        Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, false);
    for (const auto& part : spec.parts) {
        if (!(part.magnitude > 0.0)) throw SignumError(ErrorKind::InvalidArgument, "magnitudes must be positive");
        make_simple_cycle(d, part.vertices);
        const int k = static_cast<int>(part.vertices.size());
        for (int t = 0; t < k; ++t) {
            const int i = part.vertices[t], j = part.vertices[(t + 1) % k];
            mag(i, j) = emphasized(i, j) ? std::max(mag(i, j), part.magnitude) : part.magnitude;
            emphasized(i, j) = true;
        }
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.nonzero(i, j)) a(i, j) = to_int(p(i, j)) * (emphasized(i, j) ? mag(i, j) : spec.epsilon);
    return a;
}

Eigen::MatrixXd realize(const SignPattern& p, const Eigen::MatrixXd& magnitudes) {
    const int n = p.order();
    if (magnitudes.rows() != n || magnitudes.cols() != n)
        throw SignumError(ErrorKind::DimensionMismatch, "magnitude matrix has the wrong shape");
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double m = magnitudes(i, j);
            if (p.nonzero(i, j) != (m > 0.0) || m < 0.0)
                throw SignumError(ErrorKind::SignMismatch, "magnitude support differs from the pattern at (" +
                                                               std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                               ")");
            a(i, j) = to_int(p(i, j)) * m;
        }
    return a;
}

namespace {

bool same_profile(const SpectralProfile& x, const SpectralProfile& y) {
    return x.inertia == y.inertia && x.refined == y.refined;
}

bool simple_nonzero_spectrum(const Eigen::MatrixXd& b0) {
    const auto prof = spectral_profile(b0);
    std::vector<std::complex<double>> nz;
    for (const auto& z : prof.eigenvalues)
        if (std::abs(z) > prof.tol) nz.push_back(z);
    for (std::size_t a = 0; a < nz.size(); ++a)
        for (std::size_t b = a + 1; b < nz.size(); ++b)
            if (std::abs(nz[a] - nz[b]) <= 1e3 * prof.tol) return false;
    return true;
}

}  // namespace

StabilizedWitness stabilize_epsilon(const SignPattern& p, const WitnessSpec& spec) {
    if (spec.parts.empty()) throw SignumError(ErrorKind::CycleNotInPattern, "no emphasized cycle");
    WitnessSpec s = spec;
    s.epsilon = 0.0;
    StabilizedWitness out;
    out.simple_base = simple_nonzero_spectrum(build_witness(p, s));

    constexpr int kSteps = 12;
    std::vector<Eigen::MatrixXd> mats;
    std::vector<SpectralProfile> profs;
    for (int e = 1; e <= kSteps; ++e) {
        s.epsilon = std::pow(10.0, -e);
        mats.push_back(build_witness(p, s));
        profs.push_back(spectral_profile(mats.back()));
        // The triple i, i+1, i+2 must agree; the witness is its smallest epsilon,
        // where the emphasized spectrum is least disturbed.
        const int i = e - 3;
        if (i >= 0 && profs[i + 2].clean() && same_profile(profs[i], profs[i + 1]) &&
            same_profile(profs[i], profs[i + 2])) {
            out.matrix = mats[i + 2];
            out.epsilon = std::pow(10.0, -(i + 3));
            out.profile = profs[i + 2];
            return out;
        }
    }
    throw SignumError(ErrorKind::NoStabilization, "profile did not settle for epsilon in [1e-12, 1e-1]");
}

std::string_view to_string(WitnessMethod m) {
    switch (m) {
        case WitnessMethod::SignClash: return "sign-clash";
        case WitnessMethod::MatchingGap: return "matching-gap";
        case WitnessMethod::PathSeed: return "path-seed";
        case WitnessMethod::NegativeCycle: return "negative-cycle";
        case WitnessMethod::OddRun: return "odd-run";
        case WitnessMethod::Census: return "census";
    }
    return "unknown";
}

bool confirm_pair(const SignPattern& p, const WitnessPair& w) {
    if (!in_class(p, w.a) || !in_class(p, w.b)) return false;
    const auto pa = spectral_profile(w.a);
    const auto pb = spectral_profile(w.b);
    if (!pa.clean() || !pb.clean() || pa.inertia == pb.inertia) return false;
    return axis_verified(w.a, pa) && axis_verified(w.b, pb);
}

namespace {

std::string vertex_list(const std::vector<int>& vs) {
    std::ostringstream os;
    for (std::size_t t = 0; t < vs.size(); ++t) os << (t ? " " : "") << vs[t] + 1;
    return os.str();
}

std::string part_list(const WitnessSpec& s) {
    std::ostringstream os;
    for (std::size_t t = 0; t < s.parts.size(); ++t) os << "(" << vertex_list(s.parts[t].vertices) << ")";
    return os.str();
}

std::optional<WitnessPair> stabilized_pair(const SignPattern& p, const WitnessSpec& sa, const WitnessSpec& sb,
                                           WitnessMethod method, std::string detail) {
    try {
        const auto wa = stabilize_epsilon(p, sa);
        const auto wb = stabilize_epsilon(p, sb);
        WitnessPair pair{wa.matrix, wb.matrix, wa.profile, wb.profile, method, std::move(detail),
                         wa.epsilon, wb.epsilon};
        if (confirm_pair(p, pair)) return pair;
    } catch (const SignumError&) {
    }
    return std::nullopt;
}

struct Graphs {
    SignedDigraph d;
    SignedGraph g;
};

// Zero-diagonal combinatorially symmetric patterns with a connected graph.
std::optional<Graphs> symmetric_graphs(const SignPattern& p) {
    const auto flags = validate(p);
    if (!flags.combinatorially_symmetric || !flags.zero_diagonal) return std::nullopt;
    auto [d, g] = build_graphs(p);
    if (!g.connected()) return std::nullopt;
    return Graphs{std::move(d), std::move(g)};
}

void add_two_cycle(WitnessSpec& s, int u, int v, double magnitude) { s.parts.push_back({{u, v}, magnitude}); }

std::optional<WitnessPair> by_sign_clash(const SignPattern& p) {
    if (p.order() > 16) return std::nullopt;
    const SignedDigraph d(p);
    SignSet set;
    try {
        set = max_composite_sign_set(d);
    } catch (const SignumError&) {
        return std::nullopt;
    }
    if (!set.ambiguous()) return std::nullopt;
    const auto& plus = *set.plus_witness;
    const auto& minus = *set.minus_witness;
    const auto sa = spec_from_composite(plus, magnitude_ladder(plus.parts.size(), 10.0));
    const auto sb = spec_from_composite(minus, magnitude_ladder(minus.parts.size(), 10.0));
    return stabilized_pair(p, sa, sb, WitnessMethod::SignClash,
                           "positive " + part_list(sa) + " vs negative " + part_list(sb));
}

std::optional<WitnessPair> by_matching_gap(const SignPattern& p) {
    const auto gr = symmetric_graphs(p);
    if (!gr || !is_bipartite(gr->g)) return std::nullopt;
    const Matching neg = max_signed_matching(gr->g, Sign::Minus);
    const Matching pos = max_signed_matching(gr->g, Sign::Plus);
    if (2 * (neg.length() + pos.length()) <= p.order()) return std::nullopt;
    WitnessSpec sa, sb;
    double m = 1.0;
    for (const Edge& e : neg.edges) add_two_cycle(sa, e.u, e.v, m *= 10.0);
    m = 1.0;
    for (const Edge& e : pos.edges) add_two_cycle(sb, e.u, e.v, m *= 10.0);
    return stabilized_pair(p, sa, sb, WitnessMethod::MatchingGap,
                           "negative matching " + part_list(sa) + " vs positive matching " + part_list(sb));
}

Eigen::MatrixXd seed_block(const PathSeed& s) {
    const int m = static_cast<int>(s.products.size()) + 1;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
    for (int t = 0; t + 1 < m; ++t) {
        const double r = std::sqrt(std::abs(s.products[t]));
        a(t, t + 1) = r;
        a(t + 1, t) = s.products[t] > 0 ? r : -r;
    }
    return a;
}

double spectral_radius(const Eigen::MatrixXd& a) {
    double r = 0.0;
    for (const auto& z : spectral_profile(a).eigenvalues) r = std::max(r, std::abs(z));
    return r;
}

std::optional<WitnessPair> by_path_seed(const SignPattern& p) {
    const auto gr = symmetric_graphs(p);
    if (!gr || classify_shape(gr->g).kind != ShapeKind::Path) return std::nullopt;
    const auto order = path_order(gr->g);
    const auto signs = path_edge_signs(gr->g);
    const int n = p.order();

    for (const auto& pair : path_seed_library()) {
        const int len = static_cast<int>(pair.first.products.size());
        const double big = 2.0 * (1.0 + std::max(spectral_radius(seed_block(pair.first)),
                                                 spectral_radius(seed_block(pair.second))));
        for (int start = 0; start + len <= n - 1; ++start) {
            const int left = start;                // vertices before the window
            const int right = n - (start + len + 1);  // vertices after it
            if (left % 2 != 0 || right % 2 != 0) continue;
            for (bool reversed : {false, true}) {
                auto product_at = [&](const PathSeed& s, int t) {
                    return s.products[reversed ? len - 1 - t : t];
                };
                bool match = true;
                for (int t = 0; t < len && match; ++t)
                    match = sign_of(product_at(pair.first, t)) == signs[start + t];
                if (!match) continue;

                auto build = [&](const PathSeed& s) {
                    WitnessSpec spec;
                    for (int t = 0; t < len; ++t)
                        add_two_cycle(spec, order[start + t], order[start + t + 1],
                                      std::sqrt(std::abs(product_at(s, t))));
                    double m = 1.0;
                    for (int v = 0; v + 1 < left; v += 2) add_two_cycle(spec, order[v], order[v + 1], m *= big);
                    for (int v = start + len + 1; v + 1 < n; v += 2)
                        add_two_cycle(spec, order[v], order[v + 1], m *= big);
                    return spec;
                };
                std::vector<int> window(order.begin() + start, order.begin() + start + len + 1);
                auto found = stabilized_pair(p, build(pair.first), build(pair.second), WitnessMethod::PathSeed,
                                             pair.name + " seeds on path vertices " + vertex_list(window));
                if (found) return found;
            }
        }
    }
    return std::nullopt;
}

// Parts covering the vertices outside `taken`, from a maximum composite cycle.
std::vector<SimpleCycle> remainder_cover(const SignedDigraph& d, const std::vector<int>& taken) {
    std::vector<char> active(static_cast<std::size_t>(d.order()), 1);
    for (int v : taken) active[v] = 0;
    return max_composite_cycle(d, active).parts;
}

void add_remainder(WitnessSpec& s, const std::vector<SimpleCycle>& rest, double& m) {
    for (const auto& c : rest) s.parts.push_back({c.vertices, m *= 10.0});
}

std::vector<UndirectedCycle> even_cycles(const SignedGraph& g) {
    std::vector<UndirectedCycle> out;
    try {
        for (auto& c : undirected_cycles(g))
            if (c.length() % 2 == 0) out.push_back(std::move(c));
    } catch (const SignumError&) {
    }
    return out;
}

std::optional<WitnessPair> by_negative_cycle(const SignPattern& p) {
    const auto gr = symmetric_graphs(p);
    if (!gr || !is_bipartite(gr->g)) return std::nullopt;
    for (const auto& c : even_cycles(gr->g)) {
        if (c.negative_edges() != c.length()) continue;
        const auto rest = remainder_cover(gr->d, c.vertices);
        const int k = c.length();
        WitnessSpec sa, sb;
        double m = 1.0;
        for (int t = 0; t < k; t += 2) add_two_cycle(sa, c.vertices[t], c.vertices[t + 1], m *= 10.0);
        add_remainder(sa, rest, m);
        sb.parts.push_back({c.vertices, 1.0});
        m = 1.0;
        add_remainder(sb, rest, m);
        auto found = stabilized_pair(p, sa, sb, WitnessMethod::NegativeCycle,
                                     "alternate 2-cycles " + part_list(sa) + " vs directed cycle " + part_list(sb));
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<WitnessPair> by_odd_run(const SignPattern& p) {
    const auto gr = symmetric_graphs(p);
    if (!gr || !is_bipartite(gr->g)) return std::nullopt;
    for (const auto& c : even_cycles(gr->g)) {
        const auto rest = remainder_cover(gr->d, c.vertices);
        for (const auto& run : maximal_signed_runs(c.edge_signs, true)) {
            if (run.length() % 2 == 0) continue;
            const auto gm = gamma_matchings_from_odd_run(c, run);
            WitnessSpec sa, sb;
            double m = 1.0;
            for (const Edge& e : gm.negative.edges) add_two_cycle(sa, e.u, e.v, m *= 10.0);
            add_remainder(sa, rest, m);
            m = 1.0;
            for (const Edge& e : gm.positive.edges) add_two_cycle(sb, e.u, e.v, m *= 10.0);
            add_remainder(sb, rest, m);
            auto found = stabilized_pair(p, sa, sb, WitnessMethod::OddRun,
                                         "negative " + part_list(sa) + " vs positive " + part_list(sb));
            if (found) return found;
        }
    }
    return std::nullopt;
}

std::optional<WitnessPair> by_census(const SignPattern& p, const WitnessOptions& opt) {
    struct Law {
        MagnitudeLaw law;
        double lo, hi;
    };
    const Law laws[] = {{MagnitudeLaw::LogUniform, 1e-2, 1e2},
                        {MagnitudeLaw::NearOne, 1e-2, 1e2},
                        {MagnitudeLaw::LogUniform, 1e-4, 1e4}};
    std::vector<std::pair<Eigen::MatrixXd, SpectralProfile>> reps;
    for (std::size_t l = 0; l < std::size(laws); ++l) {
        SampleConfig cfg;
        cfg.law = laws[l].law;
        cfg.lo = laws[l].lo;
        cfg.hi = laws[l].hi;
        cfg.trials = std::max(1, opt.census_trials / 3);
        cfg.seed = splitmix64(opt.seed + l);
        for (const auto& [in, entry] : census(p, cfg).inertias) {
            const auto prof = spectral_profile(entry.representative);
            if (!prof.clean()) continue;
            for (const auto& [a, pa] : reps) {
                if (pa.inertia == prof.inertia) continue;
                WitnessPair w{a, entry.representative, pa, prof, WitnessMethod::Census,
                              "sampled " + to_string(pa.inertia) + " vs " + to_string(prof.inertia), {}, {}};
                if (confirm_pair(p, w)) return w;
            }
            reps.emplace_back(entry.representative, prof);
        }
    }
    return std::nullopt;
}

// Runtime search for a seed pair on the path with the given edge signs.
std::optional<PathSeedPair> search_seed_pair(const std::string& name, const std::vector<Sign>& signs) {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> expo(-3.0, 3.0);
    std::optional<std::pair<PathSeed, Inertia>> first;
    for (int trial = 0; trial < 20000; ++trial) {
        PathSeed s{name, {}};
        for (Sign sg : signs) s.products.push_back(to_int(sg) * std::pow(10.0, expo(rng)));
        const auto prof = spectral_profile(seed_block(s));
        if (!prof.clean()) continue;
        if (!first) {
            first.emplace(s, prof.inertia);
        } else if (first->second != prof.inertia) {
            return PathSeedPair{name, first->first, s};
        }
    }
    return std::nullopt;
}

}  // namespace

const std::vector<PathSeedPair>& path_seed_library() {
    static const std::vector<PathSeedPair> lib = [] {
        std::vector<PathSeedPair> out{
            {"P4", {"P4 (2,2,0)", {1, -1, 1}}, {"P4 (0,0,4)", {1, -10, 4}}},
            {"P4-", {"P4- (2,2,0)", {-1, 1, -1}}, {"P4- (0,0,4)", {-10, 1, -1}}},
            {"P6", {"P6 (0,0,6)", {0.05, 5, -20, 5, 0.05}}, {"P6 (2,2,2)", {1, 1, -1, 1, 1}}},
            {"P6'", {"P6' (2,2,2)", {10, -1, -1, -1, 1}}, {"P6' (0,0,6)", {0.05, -5, -20, -5, 0.05}}},
            {"P8'", {"P8' (2,2,4)", {1, 1, -1, -1, -1, 1, 1}},
             {"P8' (0,0,8)", {0.05, 5, -20, -5, -20, 5, 0.05}}},
        };
        const std::pair<const char*, std::vector<Sign>> searched[] = {
            {"P6'-", {Sign::Minus, Sign::Plus, Sign::Plus, Sign::Plus, Sign::Minus}},
            {"P6-", {Sign::Minus, Sign::Minus, Sign::Plus, Sign::Minus, Sign::Minus}},
            {"P8'-", {Sign::Minus, Sign::Minus, Sign::Plus, Sign::Plus, Sign::Plus, Sign::Minus, Sign::Minus}},
        };
        for (const auto& [name, signs] : searched)
            if (auto found = search_seed_pair(name, signs)) out.push_back(std::move(*found));
        return out;
    }();
    return lib;
}

std::optional<WitnessPair> witness_by(const SignPattern& p, WitnessMethod method, const WitnessOptions& opt) {
    switch (method) {
        case WitnessMethod::SignClash: return by_sign_clash(p);
        case WitnessMethod::MatchingGap: return by_matching_gap(p);
        case WitnessMethod::PathSeed: return by_path_seed(p);
        case WitnessMethod::NegativeCycle: return by_negative_cycle(p);
        case WitnessMethod::OddRun: return by_odd_run(p);
        case WitnessMethod::Census: return by_census(p, opt);
    }
    return std::nullopt;
}

std::optional<WitnessPair> find_witness_pair(const SignPattern& p, const WitnessOptions& opt) {
    for (auto m : {WitnessMethod::SignClash, WitnessMethod::MatchingGap, WitnessMethod::PathSeed,
                   WitnessMethod::NegativeCycle, WitnessMethod::OddRun, WitnessMethod::Census})
        if (auto w = witness_by(p, m, opt)) return w;
    return std::nullopt;
}

}  // namespace signum
