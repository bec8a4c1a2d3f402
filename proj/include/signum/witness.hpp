#pragma once

#include "signum/cycles.hpp"
#include "signum/spectra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace signum {

// A directed cycle of D whose arcs get |entry| = magnitude.
struct WeightedCycle {
    std::vector<int> vertices;
    double magnitude = 1.0;
};

// Emphasized cycles (a composite cycle, or any union of cycles; an arc on
// several cycles takes the largest magnitude) plus epsilon on every other
// nonzero position.
struct WitnessSpec {
    std::vector<WeightedCycle> parts;
    double epsilon = 1e-3;
};

WitnessSpec spec_from_composite(const CompositeCycle& c, const std::vector<double>& magnitudes, double epsilon = 1e-3);

// Magnitudes base^1, base^2, ... one per part.
std::vector<double> magnitude_ladder(std::size_t parts, double base);

// Throws CycleNotInPattern, InvalidArgument (non-positive magnitude, negative
// epsilon). With epsilon = 0 the result is the base matrix B(0).
Eigen::MatrixXd build_witness(const SignPattern& p, const WitnessSpec& spec);

// a_ij = p_ij * magnitudes(i, j). Throws SignMismatch unless magnitudes is
// positive exactly on the support of p.
Eigen::MatrixXd realize(const SignPattern& p, const Eigen::MatrixXd& magnitudes);

struct StabilizedWitness {
    Eigen::MatrixXd matrix;
    double epsilon = 0.0;
    SpectralProfile profile;
    // Nonzero eigenvalues of B(0) are pairwise separated.
    bool simple_base = true;
};

// Tries epsilon = 1e-1, 1e-2, ..., 1e-12 and stops at the first run of three
// consecutive values with one profile (inertia and refined inertia); returns
// the smallest epsilon of that run.
// Throws CycleNotInPattern (empty or invalid parts), NoStabilization.
StabilizedWitness stabilize_epsilon(const SignPattern& p, const WitnessSpec& spec);

enum class WitnessMethod { SignClash, MatchingGap, PathSeed, NegativeCycle, OddRun, Census };
std::string_view to_string(WitnessMethod m);

struct WitnessPair {
    Eigen::MatrixXd a, b;
    SpectralProfile profile_a, profile_b;
    WitnessMethod method = WitnessMethod::Census;
    std::string detail;
    std::optional<double> epsilon_a, epsilon_b;  // set for epsilon-stabilized witnesses
};

// Both matrices in Q(P), both profiles clean() and axis_verified(), inertias
// distinct.
bool confirm_pair(const SignPattern& p, const WitnessPair& w);

struct WitnessOptions {
    int census_trials = 2000;
    std::uint64_t seed = 20240601;
};

// One constructive strategy; nullopt when it does not apply or its matrices
// fail confirm_pair.
std::optional<WitnessPair> witness_by(const SignPattern& p, WitnessMethod method, const WitnessOptions& opt = {});

// Constructive strategies in enum order, then the census fallback.
std::optional<WitnessPair> find_witness_pair(const SignPattern& p, const WitnessOptions& opt = {});

// Edge products along a path window whose realization has a known inertia.
struct PathSeed {
    std::string name;
    std::vector<double> products;  // signed; sign = G edge sign
};

// Pairs of seeds with distinct inertias for the forbidden path windows.
struct PathSeedPair {
    std::string name;
    PathSeed first, second;
};
const std::vector<PathSeedPair>& path_seed_library();

}  // namespace signum
