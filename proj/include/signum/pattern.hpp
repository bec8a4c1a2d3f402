#pragma once

#include "signum/sign.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace signum {

// Square grid over {+,-,0}. Indices are 0-based throughout the library; text
// reports and the CLI print 1-based vertex labels.
class SignPattern {
public:
    SignPattern() = default;
    explicit SignPattern(int n);
    SignPattern(int n, std::vector<Sign> entries);

    // Row-major list of rows; throws DimensionMismatch when not square.
    static SignPattern from_rows(const std::vector<std::vector<Sign>>& rows);

    int order() const noexcept { return n_; }
    Sign operator()(int i, int j) const { return entries_[index(i, j)]; }
    void set(int i, int j, Sign s) { entries_[index(i, j)] = s; }
    bool nonzero(int i, int j) const { return (*this)(i, j) != Sign::Zero; }
    const std::vector<Sign>& entries() const noexcept { return entries_; }

    friend bool operator==(const SignPattern&, const SignPattern&) = default;
    friend auto operator<=>(const SignPattern& a, const SignPattern& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.entries_ <=> b.entries_;
    }

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

    int n_ = 0;
    std::vector<Sign> entries_;
};

struct PatternFlags {
    bool combinatorially_symmetric = false;
    bool zero_diagonal = false;
    bool irreducible = false;

    bool all() const noexcept { return combinatorially_symmetric && zero_diagonal && irreducible; }
    friend bool operator==(const PatternFlags&, const PatternFlags&) = default;
};

struct PermutationSimilarity {
    std::vector<int> perm;  // p'_ij = p_{perm[i], perm[j]}
};
struct SignatureSimilarity {
    std::vector<int> signs;  // entries +1 / -1
};
struct Negation {};
struct Transposition {};

using EquivalenceOp = std::variant<PermutationSimilarity, SignatureSimilarity, Negation, Transposition>;

enum class SubpatternMode { ContiguousWindows, AllPrincipalSubsets };

// Text format: one row per line, tokens `+`, `-`, `0` separated by spaces.
// Lines whose first non-blank character is `#` are ignored.
SignPattern parse_pattern(std::string_view text);
std::string serialize(const SignPattern& p);

PatternFlags validate(const SignPattern& p);

SignPattern apply_equivalence(const SignPattern& p, const EquivalenceOp& op);
EquivalenceOp inverse(const EquivalenceOp& op);

// Flips the sign of every undirected edge of a tree pattern by negating the
// above-diagonal entry of each symmetric pair.
SignPattern p_minus(const SignPattern& p);

SignPattern principal_subpattern(const SignPattern& p, const std::vector<int>& indices);

// Index sets (0-based, ascending) where p restricted to the set equals q.
// The subset mode enumerates all C(n, k) principal subsets and refuses n > 12.
std::vector<std::vector<int>> find_principal_subpattern(
    const SignPattern& p, const SignPattern& q,
    SubpatternMode mode = SubpatternMode::ContiguousWindows);

// Lexicographically least member of the equivalence class (permutation and
// signature similarity, negation, transposition). Refuses n > 8.
SignPattern canonical_form(const SignPattern& p);

}  // namespace signum
