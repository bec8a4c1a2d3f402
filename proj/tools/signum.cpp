#include "signum/charpoly.hpp"
#include "signum/error.hpp"
#include "signum/fixtures.hpp"
#include "signum/verdict.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace signum;

namespace {

constexpr int kExitError = 3;

struct Input {
    std::string path;
    std::string fixture;
};

void add_input(CLI::App* cmd, Input& in) {
    cmd->add_option("pattern", in.path, "Pattern file ('-' reads stdin)");
    cmd->add_option("--fixture", in.fixture, "Use a built-in fixture by name");
}

SignPattern load(const Input& in) {
    if (!in.fixture.empty()) {
        const Fixture* f = find_fixture(in.fixture);
        if (!f) throw SignumError(ErrorKind::InvalidArgument, "unknown fixture '" + in.fixture + "'");
        return f->pattern;
    }
    if (in.path.empty()) throw SignumError(ErrorKind::InvalidArgument, "no pattern given (path or --fixture)");
    std::stringstream buf;
    if (in.path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream file(in.path);
        if (!file) throw SignumError(ErrorKind::Io, "cannot read '" + in.path + "'");
        buf << file.rdbuf();
    }
    return parse_pattern(buf.str());
}

struct CensusFlags {
    int trials = 1000;
    std::string seed;
    std::string law = "log-uniform";
    int threads = 1;
};

void add_census_flags(CLI::App* cmd, CensusFlags& f) {
    cmd->add_option("--trials", f.trials, "Census sample count")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "Census seed (default: $SIGNUM_SEED or 20240601)");
    cmd->add_option("--law", f.law, "Magnitude law")
        ->check(CLI::IsMember({"log-uniform", "near-one", "mixed"}));
    cmd->add_option("--threads", f.threads, "Census worker threads")->check(CLI::PositiveNumber);
}

std::uint64_t parse_seed(const std::string& text) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used, 0);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty())
        throw SignumError(ErrorKind::InvalidArgument, "seed '" + text + "' is not an unsigned integer");
    return v;
}

SampleConfig to_config(const CensusFlags& f) {
    SampleConfig cfg;
    cfg.trials = f.trials;
    cfg.threads = f.threads;
    if (!f.seed.empty()) cfg.seed = parse_seed(f.seed);
    else if (const char* env = std::getenv("SIGNUM_SEED")) cfg.seed = parse_seed(env);
    if (f.law == "near-one") cfg.law = MagnitudeLaw::NearOne;
    else if (f.law == "mixed") cfg.law = MagnitudeLaw::Mixed;
    return cfg;
}

AnalyzeOptions to_analyze_options(const CensusFlags& f) {
    AnalyzeOptions ao;
    ao.census = to_config(f);
    ao.witness.seed = ao.census.seed;
    return ao;
}

int exit_code(Overall o) {
    switch (o) {
        case Overall::RequiresUnique: return 0;
        case Overall::DoesNotRequire: return 1;
        case Overall::Inconclusive: return 2;
    }
    return kExitError;
}

std::string format_complex(std::complex<double> z) {
    std::ostringstream os;
    os << std::setprecision(6) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

std::vector<int> parse_cycle(const std::string& text, int n) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = 0;
        try {
            v = std::stoi(tok);
        } catch (const std::exception&) {
            throw SignumError(ErrorKind::InvalidArgument, "bad vertex '" + tok + "' in cycle '" + text + "'");
        }
        if (v < 1 || v > n)
            throw SignumError(ErrorKind::InvalidArgument, "vertex " + tok + " out of range 1.." + std::to_string(n));
        out.push_back(v - 1);
    }
    return out;
}

// ---- commands --------------------------------------------------------------

int run_analyze(const Input& in, const CensusFlags& cf, bool json, bool strict) {
    const SignPattern p = load(in);
    AnalyzeOptions ao = to_analyze_options(cf);
    ao.strict_adjacency = strict;
    const Verdict v = analyze(p, ao);
    std::cout << (json ? to_json(v) + "\n" : explain(v));
    return exit_code(v.overall);
}

int run_verify(const std::string& filter, const CensusFlags& cf, bool list) {
    VerifyOptions opt;
    opt.census = to_config(cf);
    int checked = 0, failed = 0;
    for (const auto& f : fixtures()) {
        if (!filter.empty() && f.name.find(filter) == std::string::npos) continue;
        ++checked;
        if (list) {
            std::cout << f.name << "  " << f.citation << "\n";
            continue;
        }
        const FixtureCheck c = verify_fixture(f, opt);
        std::cout << (c.pass ? "PASS " : "FAIL ") << f.name << std::fixed << std::setprecision(2) << "  ("
                  << c.seconds << " s)\n";
        std::cout.unsetf(std::ios::fixed);
        for (const auto& note : c.notes) std::cout << "    " << note << "\n";
        if (!c.pass) {
            ++failed;
            std::cout << "    expectation: " << f.citation << "\n";
            for (const auto& msg : c.failures) std::cout << "    " << msg << "\n";
        }
    }
    if (checked == 0) {
        std::cerr << "warning: no fixture matches '" << filter << "'; nothing verified\n";
        return 0;
    }
    if (!list) std::cout << (checked - failed) << "/" << checked << " fixtures pass\n";
    return failed == 0 ? 0 : 1;
}

int run_graph(const Input& in, bool undirected) {
    const SignPattern p = load(in);
    std::cout << (undirected ? to_dot(build_graph(p)) : to_dot(SignedDigraph(p)));
    return 0;
}

int run_census(const Input& in, const CensusFlags& cf, bool json) {
    const SignPattern p = load(in);
    const SampleConfig cfg = to_config(cf);
    const Census c = census(p, cfg);
    if (json) {
        nlohmann::ordered_json j;
        j["trials"] = c.trials;
        j["seed"] = cfg.seed;
        j["skipped"] = c.skipped;
        j["borderline"] = c.borderline;
        j["inertias"] = nlohmann::ordered_json::array();
        for (const auto& [in_, e] : c.inertias)
            j["inertias"].push_back({{"inertia", to_string(in_)}, {"count", e.count}, {"clean", e.clean}});
        j["frequencies"] = nlohmann::ordered_json::array();
        for (const auto& [fq, n] : c.frequencies)
            j["frequencies"].push_back({{"frequency", to_string(fq)}, {"count", n}});
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "trials " << c.trials << ", seed " << cfg.seed << ", skipped " << c.skipped << ", borderline "
              << c.borderline << "\n";
    for (const auto& [in_, e] : c.inertias)
        std::cout << "  inertia " << to_string(in_) << ": " << e.count << " (" << e.clean << " clean)\n";
    for (const auto& [fq, n] : c.frequencies) std::cout << "  frequency " << to_string(fq) << ": " << n << "\n";
    std::cout << (c.inertias.size() == 1 ? "single inertia observed\n" : "several inertias observed\n");
    return 0;
}

int run_witness(const Input& in, const std::vector<std::string>& cycles, double magnitude, double base) {
    const SignPattern p = load(in);
    const SignedDigraph d(p);
    WitnessSpec spec;
    if (cycles.empty()) {
        const auto full = max_composite_cycle(d, std::vector<char>(p.order(), 1));
        spec = spec_from_composite(full, magnitude_ladder(full.parts.size(), base));
    } else {
        for (std::size_t t = 0; t < cycles.size(); ++t) {
            const auto vs = parse_cycle(cycles[t], p.order());
            make_simple_cycle(d, vs);
            spec.parts.push_back({vs, magnitude * std::pow(base, static_cast<double>(t))});
        }
    }
    std::cout << "emphasized cycles:\n";
    for (const auto& part : spec.parts) {
        std::cout << "  (";
        for (std::size_t k = 0; k < part.vertices.size(); ++k) std::cout << (k ? " " : "") << part.vertices[k] + 1;
        std::cout << ") magnitude " << part.magnitude << "\n";
    }
    const StabilizedWitness w = stabilize_epsilon(p, spec);
    std::cout << "stabilized epsilon " << w.epsilon << (w.simple_base ? "" : " (base spectrum has repeats)") << "\n";
    std::cout << "inertia " << to_string(w.profile.inertia) << ", refined " << to_string(w.profile.refined) << "\n";
    std::cout << "eigenvalues:\n";
    for (const auto& z : w.profile.eigenvalues) std::cout << "  " << format_complex(z) << "\n";
    return 0;
}

// Random irreducible path pattern with a zero diagonal.
SignPattern random_path(std::mt19937_64& rng, int n) {
    SignPattern p(n);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i + 1 < n; ++i) {
        p.set(i, i + 1, coin(rng) ? Sign::Plus : Sign::Minus);
        p.set(i + 1, i, coin(rng) ? Sign::Plus : Sign::Minus);
    }
    return p;
}

bool has_interior_odd_run(const SignPattern& p) {
    const auto signs = path_edge_signs(build_graph(p));
    const int m = static_cast<int>(signs.size());
    for (const auto& r : maximal_signed_runs(signs, false))
        if (r.length() % 2 == 1 && r.edges.front() > 0 && r.edges.back() < m - 1) return true;
    return false;
}

bool repeated_imaginary(const SpectralProfile& prof) {
    std::vector<double> ims;
    for (const auto& z : prof.eigenvalues)
        if (std::abs(z.real()) <= prof.tol && z.imag() > prof.tol) ims.push_back(z.imag());
    std::sort(ims.begin(), ims.end());
    for (std::size_t k = 1; k < ims.size(); ++k)
        if (ims[k] - ims[k - 1] <= 1e-3 * ims[k]) return true;
    return false;
}

int run_fuzz(const std::string& target, int count, int min_n, int max_n, const CensusFlags& cf) {
    if (min_n < 2 || max_n < min_n) throw SignumError(ErrorKind::InvalidArgument, "need 2 <= min-n <= max-n");
    AnalyzeOptions ao = to_analyze_options(cf);
    std::mt19937_64 rng(ao.census.seed);
    std::uniform_int_distribution<int> order(min_n, max_n);
    std::map<std::string, int> tally;
    int candidates = 0, tried = 0;
    while (tried < count) {
        const SignPattern p = random_path(rng, order(rng));
        if (target == "interior-odd-run" && !has_interior_odd_run(p)) continue;
        ++tried;
        const Verdict v = analyze(p, ao);
        ++tally[std::string(to_string(v.overall))];
        bool flag = false;
        std::string why;
        if (target == "interior-odd-run") {
            flag = v.overall != Overall::DoesNotRequire;
            why = "interior odd run without a confirmed witness";
        } else if (target == "consistency") {
            const bool consistent = v.census && v.census->consistent_observed();
            flag = consistent == (v.overall == Overall::DoesNotRequire) && v.overall != Overall::Inconclusive;
            why = consistent ? "consistent sample frequencies but does not require a unique inertia"
                             : "inconsistent sample frequencies but requires a unique inertia";
        } else {
            for (int t = 0; t < ao.census.trials && !flag; ++t)
                flag = repeated_imaginary(spectral_profile(sample(p, ao.census, static_cast<std::uint64_t>(t))));
            flag = flag && v.overall != Overall::DoesNotRequire;
            why = "sample with a repeated imaginary eigenvalue, no witness pair";
        }
        if (flag) {
            ++candidates;
            std::cout << "candidate " << candidates << ": " << why << " (" << to_string(v.overall) << ")\n"
                      << serialize(p);
        }
    }
    std::cout << "target " << target << ": " << tried << " patterns";
    for (const auto& [k, n] : tally) std::cout << ", " << k << " " << n;
    std::cout << ", candidates " << candidates << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sign pattern inertia analysis"};
    app.require_subcommand(1);

    Input in;
    CensusFlags cf;
    bool json = false, strict = false, list = false, undirected = false;
    std::string filter, target = "interior-odd-run";
    std::vector<std::string> cycles;
    double magnitude = 1.0, base = 10.0;
    int count = 50, min_n = 4, max_n = 8;

    auto* analyze_cmd = app.add_subcommand("analyze", "Apply the decision rules to a pattern");
    add_input(analyze_cmd, in);
    add_census_flags(analyze_cmd, cf);
    analyze_cmd->add_flag("--json", json, "Emit the JSON verdict");
    analyze_cmd->add_flag("--strict-adjacency", strict, "Use only the connecting-path edge count in R7");

    auto* verify_cmd = app.add_subcommand("verify-paper", "Recompute every fixture expectation");
    verify_cmd->add_option("--filter", filter, "Only fixtures whose name contains this text");
    verify_cmd->add_flag("--list", list, "List fixtures without checking");
    add_census_flags(verify_cmd, cf);

    auto* graph_cmd = app.add_subcommand("graph", "Export the signed graph as DOT");
    add_input(graph_cmd, in);
    graph_cmd->add_flag("--dot", "DOT output (the only format)");
    auto* dir = graph_cmd->add_flag("--directed", "Signed digraph D(P) (default)");
    auto* und = graph_cmd->add_flag("--undirected", undirected, "Signed graph G(P)");
    dir->excludes(und);

    auto* census_cmd = app.add_subcommand("census", "Sample the qualitative class and tally inertias");
    add_input(census_cmd, in);
    add_census_flags(census_cmd, cf);
    census_cmd->add_flag("--json", json, "Emit JSON");

    auto* witness_cmd = app.add_subcommand("witness", "Emphasize cycles and stabilize the perturbation");
    add_input(witness_cmd, in);
    witness_cmd->add_option("--cycle", cycles, "Directed cycle as 1-based vertices, e.g. 1,2,3 (repeatable)");
    witness_cmd->add_option("--magnitude", magnitude, "Magnitude of the first emphasized cycle")
        ->check(CLI::PositiveNumber);
    witness_cmd->add_option("--base", base, "Ratio between successive cycle magnitudes")->check(CLI::PositiveNumber);

    auto* fuzz_cmd = app.add_subcommand("fuzz", "Search random path patterns for conjecture counterexamples");
    fuzz_cmd->add_option("--target", target, "Conjecture target")
        ->check(CLI::IsMember({"interior-odd-run", "consistency", "repeated-imaginary"}));
    fuzz_cmd->add_option("--count", count, "Patterns to test")->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--min-n", min_n, "Smallest order");
    fuzz_cmd->add_option("--max-n", max_n, "Largest order");
    add_census_flags(fuzz_cmd, cf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*analyze_cmd) return run_analyze(in, cf, json, strict);
        if (*verify_cmd) return run_verify(filter, cf, list);
        if (*graph_cmd) return run_graph(in, undirected);
        if (*census_cmd) return run_census(in, cf, json);
        if (*witness_cmd) return run_witness(in, cycles, magnitude, base);
        if (*fuzz_cmd) return run_fuzz(target, count, min_n, max_n, cf);
    } catch (const SignumError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
