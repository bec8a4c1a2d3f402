#include <doctest.h>

#include "oracles.hpp"

#include "signum/charpoly.hpp"
#include "signum/fixtures.hpp"
#include "signum/verdict.hpp"

#include <json.hpp>

#include <random>

using namespace signum;

namespace {

SignPattern fixture(const char* name) { return find_fixture(name)->pattern; }

const RuleFinding& finding(const Verdict& v, const std::string& rule) {
    for (const auto& f : v.findings)
        if (f.rule == rule) return f;
    FAIL("missing rule " << rule);
    return v.findings.front();
}

void check_consistency(const Verdict& v) {
    bool refutes = false, proves = false;
    for (const auto& f : v.findings) {
        if (f.conclusion != Conclusion::NoConclusion) CHECK(f.applicable);
        refutes |= f.conclusion == Conclusion::DoesNotRequire;
        if (f.conclusion == Conclusion::RequiresUnique) {
            proves = true;
            CHECK(f.rule == "R2");
        }
    }
    CHECK_FALSE((refutes && proves));
    CHECK((v.overall == Overall::DoesNotRequire) == refutes);
    CHECK((v.overall == Overall::RequiresUnique) == proves);
}

// Random irreducible combinatorially symmetric pattern with a zero diagonal.
SignPattern random_symmetric(std::mt19937_64& rng, int n) {
    SignPattern p(n);
    auto link = [&](int u, int v) {
        p.set(u, v, rng() % 2 ? Sign::Plus : Sign::Minus);
        p.set(v, u, rng() % 2 ? Sign::Plus : Sign::Minus);
    };
    for (auto [u, v] : oracle::random_tree(rng, n)) link(u, v);
    for (int e = 0; e < static_cast<int>(rng() % 3); ++e) {
        const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u != v) link(u, v);
    }
    return p;
}

AnalyzeOptions quick() {
    AnalyzeOptions ao;
    ao.census.trials = 200;
    ao.witness.census_trials = 300;
    return ao;
}

}  // namespace

TEST_CASE("every fixture expectation holds") {
    for (const auto& f : fixtures()) {
        CAPTURE(f.name);
        const auto c = verify_fixture(f);
        for (const auto& msg : c.failures) MESSAGE(f.citation << ": " << msg);
        CHECK(c.pass);
    }
}

TEST_CASE("a corrupted expectation is reported") {
    Fixture f = *find_fixture("PAT_P4");
    f.realizations[1].inertia = Inertia{2, 2, 0};
    const auto c = verify_fixture(f);
    CHECK_FALSE(c.pass);
    CHECK_FALSE(c.failures.empty());
}

TEST_CASE("rule-level outcomes on the fixtures") {
    SUBCASE("odd run on the alternating 4-cycle") {
        const auto v = analyze(fixture("PAT_XNFIG2"));
        CHECK(v.overall == Overall::DoesNotRequire);
        CHECK(finding(v, "R5").conclusion == Conclusion::DoesNotRequire);
        check_consistency(v);
    }
    SUBCASE("all-positive triangle") {
        const auto v = analyze(fixture("PAT_XX2"));
        CHECK(v.overall == Overall::RequiresUnique);
        CHECK(finding(v, "R2").conclusion == Conclusion::RequiresUnique);
        CHECK(explain(v).find("sign nonsingular") != std::string::npos);
        check_consistency(v);
    }
    SUBCASE("unique-inertia 4-cycle") {
        const auto v = analyze(fixture("PAT_EG06"));
        CHECK(v.overall == Overall::Inconclusive);
        CHECK(finding(v, "R5").conclusion == Conclusion::NoConclusion);
        REQUIRE(v.census);
        REQUIRE(v.census->inertias.size() == 1);
        CHECK(v.census->inertias.begin()->first == Inertia{1, 1, 2});
    }
    SUBCASE("P6: one odd run, but a forbidden window") {
        const auto v = analyze(fixture("PAT_P6"));
        CHECK(finding(v, "R3").conclusion == Conclusion::NoConclusion);
        const auto& r4 = finding(v, "R4");
        CHECK(r4.conclusion == Conclusion::DoesNotRequire);
        REQUIRE(r4.witness);
        CHECK(confirm_pair(v.pattern, *r4.witness));
        const auto text = explain(v);
        CHECK(text.find("R4: applicable, DoesNotRequire") != std::string::npos);
    }
    SUBCASE("P4 witness inertias") {
        const auto v = analyze(fixture("PAT_P4"));
        CHECK(v.overall == Overall::DoesNotRequire);
        const auto& r3 = finding(v, "R3");
        REQUIRE(r3.witness);
        std::set<Inertia> got{r3.witness->profile_a.inertia, r3.witness->profile_b.inertia};
        CHECK(got == std::set<Inertia>{Inertia{2, 2, 0}, Inertia{0, 0, 4}});
    }
    SUBCASE("precondition failure") {
        const auto v = analyze(parse_pattern("0 + 0\n0 0 +\n+ 0 0"));
        REQUIRE(v.findings.size() == 1);
        CHECK(v.findings[0].rule == "precondition");
        CHECK(v.overall == Overall::Inconclusive);
        CHECK_FALSE(v.census);
        CHECK(explain(v).find("precondition") != std::string::npos);
    }
}

TEST_CASE("rules never contradict on random symmetric patterns") {
    std::mt19937_64 rng(60);
    for (int t = 0; t < 40; ++t) {
        const auto p = random_symmetric(rng, 3 + t % 6);
        const auto v = analyze(p, quick());
        CAPTURE(serialize(p));
        check_consistency(v);
        for (const auto& f : v.findings)
            if (f.conclusion == Conclusion::DoesNotRequire && f.witness) CHECK(confirm_pair(p, *f.witness));
    }
}

// Tiny real parts fall below the tolerance; the extended-precision recheck must
// reject every sample that would put an eigenvalue on the imaginary axis.
TEST_CASE("sign nonsingular odd cycles have no verified eigenvalue on the imaginary axis") {
    std::mt19937_64 rng(70);
    int tested = 0;
    for (int t = 0; t < 200 && tested < 15; ++t) {
        const int n = 3 + 2 * static_cast<int>(rng() % 3);
        SignPattern p(n);
        for (int v = 0; v < n; ++v) {
            p.set(v, (v + 1) % n, rng() % 2 ? Sign::Plus : Sign::Minus);
            p.set((v + 1) % n, v, rng() % 2 ? Sign::Plus : Sign::Minus);
        }
        const auto det = sign_det(p);
        if (det != AmbSign::Plus && det != AmbSign::Minus) continue;
        ++tested;
        CHECK(analyze(p, quick()).overall == Overall::RequiresUnique);
        for (int s = 0; s < 100; ++s) {
            const Eigen::MatrixXd a = sample(p, SampleConfig{}, s);
            const auto prof = spectral_profile(a);
            if (prof.inertia.zero > 0) CHECK_FALSE((prof.clean() && axis_verified(a, prof)));
        }
    }
    CHECK(tested >= 5);
}

TEST_CASE("census keys follow the equivalence laws") {
    for (const char* name : {"PAT_EG06", "PAT_XX2"}) {
        const auto p = fixture(name);
        const auto base = analyze(p, quick()).census->inertias;
        REQUIRE(base.size() == 1);
        const Inertia in = base.begin()->first;
        const int n = p.order();
        std::vector<int> rev(n), sig(n);
        for (int i = 0; i < n; ++i) {
            rev[i] = n - 1 - i;
            sig[i] = i % 2 ? -1 : 1;
        }
        for (const EquivalenceOp& op : {EquivalenceOp{PermutationSimilarity{rev}},
                                        EquivalenceOp{SignatureSimilarity{sig}}, EquivalenceOp{Transposition{}}}) {
            const auto keys = analyze(apply_equivalence(p, op), quick()).census->inertias;
            REQUIRE(keys.size() == 1);
            CHECK(keys.begin()->first == in);
        }
        const auto neg = analyze(apply_equivalence(p, Negation{}), quick()).census->inertias;
        REQUIRE(neg.size() == 1);
        CHECK(neg.begin()->first == Inertia{in.neg, in.pos, in.zero});
    }
}

TEST_CASE("JSON report") {
    const auto v = analyze(fixture("PAT_P4"));
    const auto text = to_json(v);
    const auto j = nlohmann::ordered_json::parse(text);
    CHECK(j.dump(2) == text);
    std::vector<std::string> keys;
    for (const auto& [k, val] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"pattern", "flags", "shape", "findings", "overall", "census"});
    CHECK(j["overall"] == "DoesNotRequire");
    CHECK(j["shape"] == "Path");
    CHECK(j["findings"].is_array());
    for (const auto& f : j["findings"]) {
        CHECK(f.contains("rule"));
        CHECK(f.contains("applicable"));
        CHECK(f.contains("conclusion"));
        CHECK(f.contains("citation"));
    }
    CHECK(to_json(analyze(fixture("PAT_P4"))) == text);

    const auto pre = nlohmann::ordered_json::parse(to_json(analyze(parse_pattern("+ 0\n0 +"))));
    CHECK(pre["shape"].is_null());
    CHECK(pre["overall"] == "Inconclusive");
}
