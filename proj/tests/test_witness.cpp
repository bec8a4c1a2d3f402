#include <doctest.h>

#include "oracles.hpp"

#include "signum/error.hpp"
#include "signum/fixtures.hpp"
#include "signum/witness.hpp"

#include <numbers>
#include <random>

using namespace signum;

namespace {

using cd = std::complex<double>;

SignPattern fixture(const char* name) { return find_fixture(name)->pattern; }

// Path or cycle pattern whose every edge is negative.
SignPattern all_negative(int n, bool cycle) {
    SignPattern p(n);
    const int m = cycle ? n : n - 1;
    for (int t = 0; t < m; ++t) {
        const int u = t, v = (t + 1) % n;
        p.set(u, v, Sign::Plus);
        p.set(v, u, Sign::Minus);
    }
    return p;
}

// k-th roots of s * m^k.
std::vector<cd> scaled_roots(int k, int s, double m) {
    std::vector<cd> out;
    const double phase = s > 0 ? 0.0 : std::numbers::pi;
    for (int j = 0; j < k; ++j) out.push_back(std::polar(m, (phase + 2 * std::numbers::pi * j) / k));
    return out;
}

Inertia inertia_of(const std::vector<cd>& zs) {
    Inertia in;
    for (const auto& z : zs) {
        if (z.real() > 1e-9) ++in.pos;
        else if (z.real() < -1e-9) ++in.neg;
        else ++in.zero;
    }
    return in;
}

Eigen::MatrixXd seed_matrix(const std::vector<double>& products) {
    const int m = static_cast<int>(products.size()) + 1;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
    for (int t = 0; t + 1 < m; ++t) {
        a(t, t + 1) = 1.0;
        a(t + 1, t) = products[t];
    }
    return a;
}

}  // namespace

TEST_CASE("magnitude ladder and spec from a composite cycle") {
    CHECK(magnitude_ladder(3, 10.0) == std::vector<double>{10.0, 100.0, 1000.0});
    const SignedDigraph d(fixture("PAT_P4"));
    const auto cc = max_composite_cycle(d, std::vector<char>(4, 1));
    const auto spec = spec_from_composite(cc, {2.0, 3.0}, 1e-4);
    REQUIRE(spec.parts.size() == 2);
    CHECK(spec.parts[1].magnitude == 3.0);
    CHECK(spec.epsilon == 1e-4);
}

TEST_CASE("build_witness places magnitudes and epsilon") {
    const auto p = fixture("PAT_EX26");
    WitnessSpec spec{{{{0, 1, 2}, 2.0}, {{0, 1}, 5.0}}, 1e-3};
    const Eigen::MatrixXd a = build_witness(p, spec);
    CHECK(in_class(p, a));
    CHECK(a(0, 1) == 5.0);  // shared arc keeps the larger magnitude
    CHECK(a(1, 0) == -5.0);
    CHECK(a(1, 2) == 2.0);
    CHECK(a(2, 0) == 2.0);
    CHECK(a(0, 2) == -1e-3);
    CHECK(a(2, 1) == -1e-3);

    SUBCASE("epsilon zero without parts is the zero matrix") {
        CHECK(build_witness(p, WitnessSpec{{}, 0.0}).isZero());
    }
    SUBCASE("fidelity on random specs") {
        std::mt19937_64 rng(4);
        const SignedDigraph d(fixture("PAT_TWO_SQUARES_RUN"));
        const auto cycles = simple_cycles(d, 8);
        for (int t = 0; t < 50; ++t) {
            WitnessSpec s;
            s.epsilon = std::pow(10.0, -1.0 - static_cast<double>(rng() % 6));
            for (int k = 0; k < 3; ++k) s.parts.push_back({cycles[rng() % cycles.size()].vertices, 1.0 + k});
            CHECK(in_class(fixture("PAT_TWO_SQUARES_RUN"), build_witness(fixture("PAT_TWO_SQUARES_RUN"), s)));
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(build_witness(fixture("PAT_P4"), WitnessSpec{{{{0, 2}, 1.0}}, 1e-3}), SignumError);
        CHECK_THROWS_AS(build_witness(p, WitnessSpec{{{{0, 1}, 0.0}}, 1e-3}), SignumError);
        CHECK_THROWS_AS(build_witness(p, WitnessSpec{{{{0, 1}, 1.0}}, -1.0}), SignumError);
    }
}

TEST_CASE("realize checks the support") {
    const auto p = fixture("PAT_P4");
    Eigen::MatrixXd mag = Eigen::MatrixXd::Zero(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (p.nonzero(i, j)) mag(i, j) = 1.0 + i + j;
    CHECK(in_class(p, realize(p, mag)));
    mag(0, 3) = 1.0;
    CHECK_THROWS_AS(realize(p, mag), SignumError);
    mag(0, 3) = 0.0;
    mag(0, 1) = 0.0;
    CHECK_THROWS_AS(realize(p, mag), SignumError);
}

TEST_CASE("all-negative matchings give skew-symmetric witnesses") {
    for (int n : {4, 6, 8}) {
        for (bool cycle : {false, true}) {
            const auto p = all_negative(n, cycle);
            WitnessSpec spec;
            double m = 1.0;
            for (int v = 0; v + 1 < n; v += 2) spec.parts.push_back({{v, v + 1}, m *= 10.0});
            const auto w = stabilize_epsilon(p, spec);
            CHECK(in_class(p, w.matrix));
            CHECK((w.matrix + w.matrix.transpose()).isZero(0.0));
            CHECK(w.profile.inertia == Inertia{0, 0, n});
        }
    }
}

TEST_CASE("an emphasized full cycle has eigenvalues near the scaled roots of unity") {
    std::mt19937_64 rng(12);
    for (int n = 3; n <= 8; ++n) {
        SignPattern p(n);
        int product = 1;
        for (int t = 0; t < n; ++t) {
            const Sign forward = rng() % 2 ? Sign::Plus : Sign::Minus;
            p.set(t, (t + 1) % n, forward);
            p.set((t + 1) % n, t, rng() % 2 ? Sign::Plus : Sign::Minus);
            product *= to_int(forward);
        }
        std::vector<int> cyc(n);
        std::iota(cyc.begin(), cyc.end(), 0);
        const double mag = 2.0;
        const auto w = stabilize_epsilon(p, WitnessSpec{{{cyc, mag}}, 1e-3});
        const auto target = scaled_roots(n, product, mag);
        CHECK(oracle::multiset_gap(w.profile.eigenvalues, target) <= 1e-2);
        if (n % 2 == 1) CHECK(w.profile.inertia == inertia_of(target));
    }
}

TEST_CASE("stabilized witnesses of small fixtures") {
    SUBCASE("positive 4-cycle of the 4-cycle digraph") {
        const auto w = stabilize_epsilon(fixture("PAT_XXEG22"), WitnessSpec{{{{0, 1, 2, 3}, 1.0}}, 1e-3});
        CHECK(w.profile.inertia == Inertia{2, 2, 0});
        CHECK(w.simple_base);
    }
    SUBCASE("negative 3-cycle of the one-negative-edge triangle") {
        const auto p = fixture("PAT_XX1");
        const SignedDigraph d(p);
        const auto c = make_simple_cycle(d, {0, 1, 2});
        REQUIRE(c.sign == Sign::Minus);
        const int product = to_int(p(0, 1)) * to_int(p(1, 2)) * to_int(p(2, 0));
        const auto w = stabilize_epsilon(p, WitnessSpec{{{c.vertices, 1.0}}, 1e-3});
        CHECK(w.profile.inertia == inertia_of(scaled_roots(3, product, 1.0)));
        CHECK(w.profile.inertia == Inertia{2, 1, 0});
    }
    SUBCASE("empty spec") {
        try {
            stabilize_epsilon(fixture("PAT_P4"), WitnessSpec{});
            FAIL("empty spec accepted");
        } catch (const SignumError& e) {
            CHECK(e.kind() == ErrorKind::CycleNotInPattern);
        }
    }
}

TEST_CASE("confirm_pair rejects bad pairs") {
    const auto p = fixture("PAT_P4");
    auto w = witness_by(p, WitnessMethod::MatchingGap);
    REQUIRE(w);
    CHECK(confirm_pair(p, *w));
    WitnessPair same = *w;
    same.b = same.a;
    CHECK_FALSE(confirm_pair(p, same));
    WitnessPair outside = *w;
    outside.a(0, 1) = -outside.a(0, 1);
    CHECK_FALSE(confirm_pair(p, outside));
}

TEST_CASE("each constructive strategy on a pattern it targets") {
    const std::pair<const char*, WitnessMethod> cases[] = {
        {"PAT_EX26", WitnessMethod::SignClash},     {"PAT_P4", WitnessMethod::MatchingGap},
        {"PAT_P6", WitnessMethod::PathSeed},        {"PAT_P8P", WitnessMethod::PathSeed},
        {"PAT_NEG4", WitnessMethod::NegativeCycle}, {"PAT_XXEG22", WitnessMethod::OddRun},
        {"PAT_ALLPLUS4", WitnessMethod::Census},
    };
    for (const auto& [name, method] : cases) {
        CAPTURE(name);
        const auto p = fixture(name);
        const auto w = witness_by(p, method);
        REQUIRE(w);
        CHECK(w->method == method);
        CHECK(confirm_pair(p, *w));
    }
    CHECK(witness_by(fixture("PAT_P4"), WitnessMethod::PathSeed));
    CHECK_FALSE(witness_by(fixture("PAT_EG06"), WitnessMethod::SignClash));
}

TEST_CASE("the P6 pair reaches inertias (0,0,6) and (2,2,2)") {
    const auto w = witness_by(fixture("PAT_P6"), WitnessMethod::PathSeed);
    REQUIRE(w);
    std::set<Inertia> got{w->profile_a.inertia, w->profile_b.inertia};
    CHECK(got == std::set<Inertia>{Inertia{0, 0, 6}, Inertia{2, 2, 2}});
}

TEST_CASE("no witness for the unique-inertia 4-cycle") {
    CHECK_FALSE(find_witness_pair(fixture("PAT_EG06")));
}

TEST_CASE("path seed library pairs have distinct clean inertias") {
    const auto& lib = path_seed_library();
    CHECK(lib.size() == 8);
    for (const auto& pair : lib) {
        CAPTURE(pair.name);
        REQUIRE(pair.first.products.size() == pair.second.products.size());
        for (std::size_t t = 0; t < pair.first.products.size(); ++t)
            CHECK(sign_of(pair.first.products[t]) == sign_of(pair.second.products[t]));
        const auto a = spectral_profile(seed_matrix(pair.first.products));
        const auto b = spectral_profile(seed_matrix(pair.second.products));
        CHECK(a.clean());
        CHECK(b.clean());
        CHECK(a.inertia != b.inertia);
    }
}
