#pragma once

#include "signum/pattern.hpp"

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace signum {

enum class MagnitudeLaw {
    LogUniform,  // |a_ij| log-uniform on [lo, hi]
    NearOne,     // |a_ij| log-uniform on [0.5, 2]
    Mixed,       // even trials LogUniform, odd trials NearOne
};

struct SampleConfig {
    MagnitudeLaw law = MagnitudeLaw::LogUniform;
    double lo = 1e-2;
    double hi = 1e2;
    int trials = 1000;
    std::uint64_t seed = 20240601;
    int threads = 1;  // census only; output does not depend on it
};

// Throws InvalidArgument unless lo > 0, hi >= lo, trials >= 1.
void check_config(const SampleConfig& cfg);

// One matrix of Q(P). Trial t draws from its own stream seeded by
// splitmix64(seed + t), so any trial can be regenerated alone.
Eigen::MatrixXd sample(const SignPattern& p, const SampleConfig& cfg, std::uint64_t trial = 0);

std::uint64_t splitmix64(std::uint64_t x) noexcept;

struct Inertia {
    int pos = 0, neg = 0, zero = 0;
    friend auto operator<=>(const Inertia&, const Inertia&) = default;
};
struct RefinedInertia {
    int pos = 0, neg = 0, zero_eigs = 0, imag = 0;  // imag = 2 i_p
    friend auto operator<=>(const RefinedInertia&, const RefinedInertia&) = default;
};
struct Frequency {
    int real = 0, nonreal = 0;
    friend auto operator<=>(const Frequency&, const Frequency&) = default;
};

std::string to_string(const Inertia& in);
std::string to_string(const RefinedInertia& in);
std::string to_string(const Frequency& f);

struct SpectralProfile {
    Inertia inertia;
    RefinedInertia refined;
    Frequency frequency;
    std::vector<std::complex<double>> eigenvalues;  // sorted by (re, im)
    double tol = 0.0;
    // Some |Re| or |Im| lies in (tol, 10 tol]: classification is fragile.
    bool borderline = false;
    // Some |Re| or |Im| lies in (1e-4 tol, tol]: counted as zero, yet well above
    // rounding error, so the zero may be an artifact of the tolerance.
    bool near_axis = false;

    bool clean() const noexcept { return !borderline && !near_axis; }
};

double default_tolerance(const Eigen::MatrixXd& a);

// |Re| <= tol is a zero real part; additionally |Im| <= tol is a zero
// eigenvalue; |Im| <= tol is real. Throws EigenFailure, NonFinite.
SpectralProfile spectral_profile(const Eigen::MatrixXd& a, std::optional<double> tol = std::nullopt);
SpectralProfile classify_eigenvalues(std::vector<std::complex<double>> eigs, double tol);

// Recomputes the spectrum of `a` in extended precision. True iff the inertia
// is unchanged and every real part counted as zero stays below
// 1e-15 (1 + ||A||_F); a tiny but genuine real part fails here even when it
// sits far below tol. Imaginary parts are not checked: they do not affect the
// inertia.
bool axis_verified(const Eigen::MatrixXd& a, const SpectralProfile& s);

struct CensusEntry {
    int count = 0;
    int clean = 0;  // samples whose profile is clean()
    Eigen::MatrixXd representative;
};

struct Census {
    std::map<Inertia, CensusEntry> inertias;
    std::map<Frequency, int> frequencies;
    int trials = 0;
    int skipped = 0;  // eigensolver failures
    int borderline = 0;

    bool consistent_observed() const noexcept { return frequencies.size() == 1; }
    // Distinct i0 values among clean samples.
    std::vector<int> clean_zero_counts() const;
};

// Deterministic for a given (P, cfg) regardless of cfg.threads.
Census census(const SignPattern& p, const SampleConfig& cfg);
void merge_into(Census& into, const Census& part);

// True iff sgn(a_ij) = p_ij for all i, j.
bool in_class(const SignPattern& p, const Eigen::MatrixXd& a);

}  // namespace signum
