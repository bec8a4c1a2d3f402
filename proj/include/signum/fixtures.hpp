#pragma once

#include "signum/charpoly.hpp"
#include "signum/verdict.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace signum {

// A concrete matrix of the class with its expected spectral data.
struct ExpectedRealization {
    std::string label;
    Eigen::MatrixXd matrix;
    std::vector<std::complex<double>> eigenvalues;  // empty = not checked
    double eigen_tol = 1e-8;
    std::optional<Inertia> inertia;
    std::optional<RefinedInertia> refined;
    std::vector<double> char_poly;  // ascending; empty = not checked
};

struct ExpectedDescartes {
    std::vector<Sign> descending;
    Variations variations;
};

struct ExpectedCover {
    std::vector<int> cycle;  // 0-based directed cycle
    bool exists = false;
};

struct Fixture {
    std::string name;
    std::string citation;  // what the pattern demonstrates, printed on failure
    SignPattern pattern;
    std::vector<ExpectedRealization> realizations;
    std::optional<int> max_composite_length;
    std::optional<std::pair<bool, bool>> max_sign_set;  // (contains +, contains -)
    std::optional<AmbSign> det_sign;
    std::optional<ShapeKind> shape;
    std::vector<ExpectedCover> covers;
    std::vector<ExpectedDescartes> descartes;
    std::vector<Sign> p_minus_edge_signs;  // edge signs of P- in edge order
    std::optional<Overall> verdict;
    std::vector<Inertia> census_exact;  // when nonempty: census keys must equal this
};

const std::vector<Fixture>& fixtures();
const Fixture* find_fixture(std::string_view name);

// Parses rows separated by '/' or newlines; tokens may be unspaced ("0+-").
SignPattern pattern_from_rows(std::string_view rows);

struct FixtureCheck {
    std::string name;
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double seconds = 0.0;
};

struct VerifyOptions {
    SampleConfig census;  // used for verdict and census expectations
};

FixtureCheck verify_fixture(const Fixture& f, const VerifyOptions& opt = {});

// Greedy nearest matching of two eigenvalue multisets.
bool same_multiset(const std::vector<std::complex<double>>& got, const std::vector<std::complex<double>>& want,
                   double tol);

}  // namespace signum
