#include "signum/pattern.hpp"

#include "signum/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace signum {

SignPattern::SignPattern(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, Sign::Zero) {
    if (n < 1) throw SignumError(ErrorKind::InvalidArgument, "pattern order must be positive");
}

SignPattern::SignPattern(int n, std::vector<Sign> entries) : n_(n), entries_(std::move(entries)) {
    if (n < 1) throw SignumError(ErrorKind::InvalidArgument, "pattern order must be positive");
    if (entries_.size() != static_cast<std::size_t>(n) * n)
        throw SignumError(ErrorKind::DimensionMismatch, "entry count does not match n*n");
}

SignPattern SignPattern::from_rows(const std::vector<std::vector<Sign>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<Sign> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw SignumError(ErrorKind::DimensionMismatch, "rows do not form a square grid");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return SignPattern(n, std::move(entries));
}

SignPattern parse_pattern(std::string_view text) {
    std::vector<std::vector<Sign>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream tokens(line);
        std::string tok;
        std::vector<Sign> row;
        while (tokens >> tok) {
            const auto s = sign_from_token(tok);
            const int row_no = static_cast<int>(rows.size()) + 1;
            const int col_no = static_cast<int>(row.size()) + 1;
            if (!s) {
                throw SignumError(ErrorKind::UnknownToken,
                                  "token '" + tok + "' at row " + std::to_string(row_no) +
                                      ", column " + std::to_string(col_no),
                                  row_no, col_no);
            }
            row.push_back(*s);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            const int row_no = static_cast<int>(rows.size()) + 1;
            throw SignumError(ErrorKind::RaggedRows,
                              "row " + std::to_string(row_no) + " has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(rows.front().size()),
                              row_no, static_cast<int>(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw SignumError(ErrorKind::EmptyInput, "no pattern rows found");
    if (rows.size() != rows.front().size()) {
        throw SignumError(ErrorKind::NonSquare,
                          std::to_string(rows.size()) + " rows but " + std::to_string(rows.front().size()) +
                              " columns",
                          static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    }
    return SignPattern::from_rows(rows);
}

std::string serialize(const SignPattern& p) {
    std::string out;
    const int n = p.order();
    out.reserve(static_cast<std::size_t>(n) * 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j > 0) out.push_back(' ');
            out.push_back(to_char(p(i, j)));
        }
        out.push_back('\n');
    }
    return out;
}

namespace {

bool strongly_connected(const SignPattern& p) {
    const int n = p.order();
    auto reach_all = [&](bool transposed) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (seen[v]) continue;
                if (transposed ? p.nonzero(v, u) : p.nonzero(u, v)) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == n;
    };
    return reach_all(false) && reach_all(true);
}

void require_order(const SignPattern& p, std::size_t size, const char* what) {
    if (size != static_cast<std::size_t>(p.order()))
        throw SignumError(ErrorKind::DimensionMismatch, std::string(what) + " length does not match pattern order");
}

}  // namespace

PatternFlags validate(const SignPattern& p) {
    PatternFlags flags;
    const int n = p.order();
    flags.combinatorially_symmetric = true;
    flags.zero_diagonal = true;
    for (int i = 0; i < n; ++i) {
        if (p.nonzero(i, i)) flags.zero_diagonal = false;
        for (int j = i + 1; j < n; ++j)
            if (p.nonzero(i, j) != p.nonzero(j, i)) flags.combinatorially_symmetric = false;
    }
    flags.irreducible = strongly_connected(p);
    return flags;
}

SignPattern apply_equivalence(const SignPattern& p, const EquivalenceOp& op) {
    const int n = p.order();
    SignPattern out(n);
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, PermutationSimilarity>) {
                require_order(p, o.perm.size(), "permutation");
                std::vector<char> used(n, 0);
                for (int v : o.perm) {
                    if (v < 0 || v >= n || used[v])
                        throw SignumError(ErrorKind::InvalidArgument, "permutation is not a bijection");
                    used[v] = 1;
                }
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) out.set(i, j, p(o.perm[i], o.perm[j]));
            } else if constexpr (std::is_same_v<T, SignatureSimilarity>) {
                require_order(p, o.signs.size(), "signature");
                for (int s : o.signs)
                    if (s != 1 && s != -1)
                        throw SignumError(ErrorKind::InvalidArgument, "signature entries must be +1 or -1");
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        out.set(i, j, sign_of_int(o.signs[i] * o.signs[j] * to_int(p(i, j))));
            } else if constexpr (std::is_same_v<T, Negation>) {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) out.set(i, j, -p(i, j));
            } else {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) out.set(i, j, p(j, i));
            }
        },
        op);
    return out;
}

EquivalenceOp inverse(const EquivalenceOp& op) {
    if (const auto* perm = std::get_if<PermutationSimilarity>(&op)) {
        std::vector<int> inv(perm->perm.size());
        for (std::size_t i = 0; i < perm->perm.size(); ++i) inv.at(perm->perm[i]) = static_cast<int>(i);
        return PermutationSimilarity{std::move(inv)};
    }
    return op;  // signature similarity, negation and transposition are involutions
}

SignPattern p_minus(const SignPattern& p) {
    const PatternFlags flags = validate(p);
    if (!flags.combinatorially_symmetric)
        throw SignumError(ErrorKind::NotCombinatoriallySymmetric, "P_- needs a combinatorially symmetric pattern");
    const int n = p.order();
    int edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges += p.nonzero(i, j) ? 1 : 0;
    if (!flags.zero_diagonal || !flags.irreducible || edges != n - 1)
        throw SignumError(ErrorKind::NotTreePattern, "P_- is defined for irreducible tree patterns with a 0-diagonal");

    SignPattern out = p;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.nonzero(i, j)) out.set(i, j, -p(i, j));
    return out;
}

SignPattern principal_subpattern(const SignPattern& p, const std::vector<int>& indices) {
    const int k = static_cast<int>(indices.size());
    SignPattern out(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) out.set(a, b, p(indices[a], indices[b]));
    return out;
}

namespace {

bool matches_at(const SignPattern& p, const SignPattern& q, const std::vector<int>& idx) {
    const int k = q.order();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (p(idx[a], idx[b]) != q(a, b)) return false;
    return true;
}

}  // namespace

std::vector<std::vector<int>> find_principal_subpattern(const SignPattern& p, const SignPattern& q,
                                                        SubpatternMode mode) {
    std::vector<std::vector<int>> found;
    const int n = p.order();
    const int k = q.order();
    if (k > n) return found;

    if (mode == SubpatternMode::ContiguousWindows) {
        std::vector<int> idx(k);
        for (int start = 0; start + k <= n; ++start) {
            std::iota(idx.begin(), idx.end(), start);
            if (matches_at(p, q, idx)) found.push_back(idx);
        }
        return found;
    }

    if (n > 12) throw SignumError(ErrorKind::OrderCapExceeded, "subset search is limited to n <= 12");
    // Ordered principal subpatterns: the subset is taken in ascending order.
    std::vector<char> choose(n, 0);
    std::fill(choose.begin(), choose.begin() + k, 1);
    std::vector<int> idx;
    do {
        idx.clear();
        for (int i = 0; i < n; ++i)
            if (choose[i]) idx.push_back(i);
        if (matches_at(p, q, idx)) found.push_back(idx);
    } while (std::prev_permutation(choose.begin(), choose.end()));
    return found;
}

SignPattern canonical_form(const SignPattern& p) {
    const int n = p.order();
    if (n > 8) throw SignumError(ErrorKind::OrderCapExceeded, "canonicalization is limited to n <= 8");

    std::vector<Sign> best = p.entries();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> sig(n, 1);

    do {
        // s_0 = +1 suffices: S and -S act identically.
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            sig[0] = 1;
            for (int i = 1; i < n; ++i) sig[i] = (mask >> (i - 1)) & 1u ? -1 : 1;
            for (int neg = 0; neg < 2; ++neg) {
                for (int tr = 0; tr < 2; ++tr) {
                    // Lazy lexicographic comparison against the incumbent.
                    bool smaller = false;
                    bool decided = false;
                    std::vector<Sign> cand;
                    cand.reserve(best.size());
                    for (int i = 0; i < n && !decided; ++i) {
                        for (int j = 0; j < n; ++j) {
                            const Sign raw = tr ? p(perm[j], perm[i]) : p(perm[i], perm[j]);
                            int v = sig[i] * sig[j] * to_int(raw);
                            if (neg) v = -v;
                            const Sign s = sign_of_int(v);
                            const Sign incumbent = best[cand.size()];
                            cand.push_back(s);
                            if (!smaller) {
                                if (s < incumbent) {
                                    smaller = true;
                                } else if (s > incumbent) {
                                    decided = true;
                                    break;
                                }
                            }
                        }
                    }
                    if (smaller && !decided) best = std::move(cand);
                }
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return SignPattern(n, std::move(best));
}

}  // namespace signum
