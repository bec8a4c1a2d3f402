#include "signum/fixtures.hpp"

#include "signum/charpoly.hpp"
#include "signum/error.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace signum {

SignPattern pattern_from_rows(std::string_view rows) {
    std::string text;
    for (char c : rows) {
        if (c == '/') text += '\n';
        else if (c == '+' || c == '-' || c == '0') (text += c) += ' ';
        else if (c == '\n') text += '\n';
    }
    return parse_pattern(text);
}

namespace {

using cd = std::complex<double>;

Eigen::MatrixXd mat(int n, std::initializer_list<double> values) {
    Eigen::MatrixXd a(n, n);
    auto it = values.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = *it++;
    return a;
}

// Symmetric + pattern on an undirected edge list (1-based vertex labels).
SignPattern graph_pattern(int n, std::initializer_list<std::pair<int, int>> edges) {
    SignPattern p(n);
    for (auto [u, v] : edges) {
        p.set(u - 1, v - 1, Sign::Plus);
        p.set(v - 1, u - 1, Sign::Plus);
    }
    return p;
}

std::vector<cd> plus_minus(std::initializer_list<cd> zs) {
    std::vector<cd> out;
    for (cd z : zs) {
        out.push_back(z);
        out.push_back(-z);
    }
    return out;
}

std::vector<cd> conj_pairs(std::initializer_list<cd> zs) {
    std::vector<cd> out;
    for (cd z : zs) {
        out.push_back(z);
        out.push_back(std::conj(z));
    }
    return out;
}

std::vector<cd> concat(std::vector<cd> a, const std::vector<cd>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

const cd I{0.0, 1.0};

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> fx;
    const double s3 = std::sqrt(3.0);

    {
        Fixture f;
        f.name = "PAT_EX26";
        f.citation = "3x3 cyclic pattern with distinct eigenvalues whose class contains inertias (0,0,3) and (1,2,0)";
        f.pattern = pattern_from_rows("0 + - / - 0 + / + - 0");
        auto ex26 = [](double a1, double a2, double a3, double a4, double a5, double a6) {
            return mat(3, {0, a1, -a2, -a3, 0, a4, a5, -a6, 0});
        };
        f.realizations.push_back({"all a_i = 1", ex26(1, 1, 1, 1, 1, 1), {0.0, s3 * I, -s3 * I}, 1e-8,
                                  Inertia{0, 0, 3}, RefinedInertia{0, 0, 1, 2}, {0, 3, 0, 1}});
        f.realizations.push_back({"a_1 = 2, other a_i = 1", ex26(2, 1, 1, 1, 1, 1), {}, 1e-8, Inertia{1, 2, 0},
                                  std::nullopt, {-1, 4, 0, 1}});
        f.max_sign_set = {true, true};
        f.det_sign = AmbSign::Ambiguous;
        f.shape = ShapeKind::SingleCycle;
        f.descartes = {{{Sign::Plus, Sign::Zero, Sign::Plus, Sign::Plus}, {0, 1}},
                       {{Sign::Plus, Sign::Zero, Sign::Plus, Sign::Minus}, {1, 0}}};
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_P4";
        f.citation = "path pattern with edge signs (+,-,+); realizations with inertias (2,2,0) and (0,0,4)";
        f.pattern = pattern_from_rows("0 + 0 0 / + 0 - 0 / 0 + 0 + / 0 0 + 0");
        auto p4 = [](double a, double b, double c) {
            return mat(4, {0, 1, 0, 0, a, 0, -1, 0, 0, b, 0, 1, 0, 0, c, 0});
        };
        f.realizations.push_back({"a = b = c = 1", p4(1, 1, 1), conj_pairs({s3 / 2 + I / 2.0, -s3 / 2 + I / 2.0}),
                                  1e-8, Inertia{2, 2, 0}, std::nullopt, {1, 0, -1, 0, 1}});
        f.realizations.push_back({"a = 1, b = 10, c = 4", p4(1, 10, 4), plus_minus({I, 2.0 * I}), 1e-8,
                                  Inertia{0, 0, 4}, RefinedInertia{0, 0, 0, 4}, {4, 0, 5, 0, 1}});
        f.max_composite_length = 4;
        f.shape = ShapeKind::Path;
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_P6";
        f.citation = "path pattern with edge signs (+,+,-,+,+); realizations with inertias (0,0,6) and (2,2,2)";
        f.pattern = pattern_from_rows("0+0000/+0+000/0+0-00/00+0+0/000+0+/0000+0");
        auto p6 = [](double a, double b, double c, double d, double e) {
            return mat(6, {0, 1, 0, 0, 0, 0, a, 0, 1, 0, 0, 0, 0, b, 0, -1, 0, 0,
                           0, 0, c, 0, 1, 0, 0, 0, 0, d, 0, 1, 0, 0, 0, 0, e, 0});
        };
        f.realizations.push_back({"a = e = 1/20, b = d = 5, c = 20", p6(0.05, 5, 20, 5, 0.05),
                                  plus_minus({2.4401 * I, 1.9859 * I, 0.0461 * I}), 1e-3,
                                  Inertia{0, 0, 6}, std::nullopt, {}});
        f.realizations.push_back({"a = b = c = d = e = 1", p6(1, 1, 1, 1, 1),
                                  concat(plus_minus({-1.3071 + 0.2151 * I, -1.3071 - 0.2151 * I}),
                                         plus_minus({0.5698 * I})),
                                  1e-3, Inertia{2, 2, 2}, std::nullopt, {}});
        f.shape = ShapeKind::Path;
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_P6P";
        f.citation = "path pattern with edge signs (+,-,-,-,+); realizations with inertias (2,2,2) and (0,0,6)";
        f.pattern = pattern_from_rows("0+0000/+0-000/0+0-00/00+0-0/000+0+/0000+0");
        auto p6p = [](double a, double b, double c, double d, double e) {
            return mat(6, {0, 1, 0, 0, 0, 0, a, 0, -1, 0, 0, 0, 0, b, 0, -1, 0, 0,
                           0, 0, c, 0, -1, 0, 0, 0, 0, d, 0, 1, 0, 0, 0, 0, e, 0});
        };
        f.realizations.push_back({"a = 10, b = c = d = e = 1", p6p(10, 1, 1, 1, 1),
                                  plus_minus({3.0148, 0.7983, 1.3139 * I}), 1e-3, Inertia{2, 2, 2}, std::nullopt, {}});
        f.realizations.push_back({"a = e = 1/20, b = d = 5, c = 20", p6p(0.05, 5, 20, 5, 0.05),
                                  plus_minus({5.3970 * I, 0.8776 * I, 0.0472 * I}), 1e-3,
                                  Inertia{0, 0, 6}, std::nullopt, {}});
        f.shape = ShapeKind::Path;
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_P8P";
        f.citation = "path pattern with edge signs (+,+,-,-,-,+,+); realizations with inertias (2,2,4) and (0,0,8)";
        f.pattern = pattern_from_rows("0+000000/+0+00000/0+0-0000/00+0-000/000+0-00/0000+0+0/00000+0+/000000+0");
        auto p8p = [](double a, double b, double c, double d, double e, double ff, double g) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Zero(8, 8);
            const double up[] = {1, 1, -1, -1, -1, 1, 1};
            const double low[] = {a, b, c, d, e, ff, g};
            for (int t = 0; t < 7; ++t) {
                m(t, t + 1) = up[t];
                m(t + 1, t) = low[t];
            }
            return m;
        };
        f.realizations.push_back({"a = ... = g = 1", p8p(1, 1, 1, 1, 1, 1, 1),
                                  concat(plus_minus({-1.3096 + 0.0611 * I, -1.3096 - 0.0611 * I}),
                                         plus_minus({1.5080 * I, 0.3858 * I})),
                                  1e-3, Inertia{2, 2, 4}, std::nullopt, {}});
        f.realizations.push_back({"a = g = 1/20, b = d = f = 5, c = e = 20", p8p(0.05, 5, 20, 5, 20, 5, 0.05),
                                  plus_minus({5.3989 * I, 2.2575 * I, 0.1022 * I, 0.8032 * I}), 1e-3,
                                  Inertia{0, 0, 8}, std::nullopt, {}});
        f.shape = ShapeKind::Path;
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_XXEG22";
        f.citation = "4-cycle whose maximum composite cycles are all positive, yet the class has inertias (2,2,0) "
                     "and (0,0,4)";
        f.pattern = pattern_from_rows("0 + 0 + / - 0 + 0 / 0 + 0 - / + 0 + 0");
        auto m = [](double a) { return mat(4, {0, a, 0, 1, -1, 0, 1, 0, 0, 1, 0, -1, 1, 0, 1, 0}); };
        f.realizations.push_back({"a = ... = h = 1", m(1), conj_pairs({1.0 + I, -1.0 + I}), 1e-8,
                                  Inertia{2, 2, 0}, std::nullopt, {}});
        f.realizations.push_back({"a = 11, others 1", m(11), plus_minus({2.0 * I, std::sqrt(6.0) * I}), 1e-8,
                                  Inertia{0, 0, 4}, RefinedInertia{0, 0, 0, 4}, {24, 0, 10, 0, 1}});
        f.max_composite_length = 4;
        f.max_sign_set = {true, false};
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_TRIDIAG_CONVERSE";
        f.citation = "sign nonsingular path pattern with edge signs (-,+,-) whose class has inertias (2,2,0) and "
                     "(0,0,4)";
        f.pattern = pattern_from_rows("0 - 0 0 / + 0 + 0 / 0 + 0 - / 0 0 + 0");
        auto m = [](double a, double b, double c) {
            return mat(4, {0, -1, 0, 0, a, 0, 1, 0, 0, b, 0, -1, 0, 0, c, 0});
        };
        f.realizations.push_back({"a = c = 1, b = 4", m(1, 4, 1), {1.0, 1.0, -1.0, -1.0}, 1e-6,
                                  Inertia{2, 2, 0}, std::nullopt, {}});
        f.realizations.push_back({"a = 8, b = c = 2", m(8, 2, 2), {2.0 * I, 2.0 * I, -2.0 * I, -2.0 * I}, 1e-6,
                                  Inertia{0, 0, 4}, std::nullopt, {}});
        f.det_sign = AmbSign::Plus;
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_ALLPLUS4";
        f.citation = "4-cycle with all edges positive and no cycle condition; class has inertias (1,1,2) and "
                     "(2,2,0)";
        f.pattern = pattern_from_rows("0 + 0 + / + 0 + 0 / 0 + 0 + / + 0 + 0");
        auto m = [](double a, double b, double c, double d, double e, double ff, double g, double h) {
            return mat(4, {0, a, 0, b, c, 0, d, 0, 0, e, 0, ff, g, 0, h, 0});
        };
        f.realizations.push_back({"a = ... = h = 1", m(1, 1, 1, 1, 1, 1, 1, 1), {0.0, 0.0, 2.0, -2.0}, 1e-6,
                                  Inertia{1, 1, 2}, std::nullopt, {}});
        f.realizations.push_back({"a = c = f = h = 2, b = d = e = g = 1", m(2, 1, 2, 1, 1, 2, 1, 2),
                                  {3.0, 1.0, -1.0, -3.0}, 1e-6, Inertia{2, 2, 0}, std::nullopt, {}});
        f.max_sign_set = {true, true};
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_EG06";
        f.citation = "4-cycle with edge signs (-,-,+,+): every matrix of the class has inertia (1,1,2)";
        f.pattern = pattern_from_rows("0 - 0 + / + 0 - 0 / 0 + 0 + / + 0 + 0");
        f.shape = ShapeKind::SingleCycle;
        f.verdict = Overall::Inconclusive;
        f.census_exact = {Inertia{1, 1, 2}};
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_XX1";
        f.citation = "triangle with one negative edge: the two directed 3-cycles have opposite signs";
        f.pattern = pattern_from_rows("0 + + / + 0 + / - + 0");
        f.det_sign = AmbSign::Ambiguous;
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_XX2";
        f.citation = "all-positive triangle: sign nonsingular odd cycle, requires a unique inertia";
        f.pattern = pattern_from_rows("0 + + / + 0 + / + + 0");
        f.max_sign_set = {true, false};
        f.det_sign = AmbSign::Plus;
        f.verdict = Overall::RequiresUnique;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_NSNG_TRIANGLE";
        f.citation = "triangle with an odd maximal signed run that is still sign nonsingular, so it requires a "
                     "unique inertia";
        f.pattern = pattern_from_rows("0 - + / + 0 - / + + 0");
        f.det_sign = AmbSign::Plus;
        f.verdict = Overall::RequiresUnique;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_NEG4";
        f.citation = "4-cycle with every edge negative";
        f.pattern = pattern_from_rows("0 + 0 - / - 0 + 0 / 0 - 0 + / + 0 - 0");
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_XNFIG2";
        f.citation = "4-cycle with edge signs (-,+,-,+), which has a maximal signed run of odd length";
        f.pattern = pattern_from_rows("0 + 0 + / - 0 + 0 / 0 + 0 + / + 0 - 0");
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_UNICYCLIC_ODD_NEG";
        f.citation = "square with one negative edge and a pendant path whose leaf is at distance 2";
        f.pattern = pattern_from_rows("0+0+00/-0+000/0+0+00/+0+0+0/000+0+/0000+0");
        f.shape = ShapeKind::Unicyclic;
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_UNICYCLIC_ALL_NEG";
        f.citation = "all-negative square with a pendant path whose leaf is at distance 2";
        f.pattern = pattern_from_rows("0+0-00/-0+000/0-0+00/+0-0+0/000+0+/0000+0");
        f.shape = ShapeKind::Unicyclic;
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_TWO_TRIANGLES";
        f.citation = "two triangles joined by a 3-edge path; one triangle has an odd number of negative edges";
        f.pattern = pattern_from_rows("0++00000/-0+00000/++0+0000/00+0+000/000-0+00/0000+0++/00000+0+/00000++0");
        f.shape = ShapeKind::MultiCycleNoLeaf;
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_TWO_SQUARES_NEG";
        f.citation = "two squares joined by one edge; the first square is all negative";
        f.pattern = pattern_from_rows("0+0-0000/-0+00000/0-0+0000/+0-0+000/000+0+0+/0000+0+0/00000+0+/0000+0+0");
        f.shape = ShapeKind::MultiCycleNoLeaf;
        f.covers = {{{0, 1, 2, 3}, true}};
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_TWO_SQUARES_RUN";
        f.citation = "two squares joined by one edge; the first square has a maximal signed run of odd length";
        f.pattern = pattern_from_rows("0+0+0000/-0+00000/0+0+0000/+0+0+000/000+0+0+/0000+0+0/00000+0+/0000+0+0");
        f.shape = ShapeKind::MultiCycleNoLeaf;
        f.covers = {{{0, 1, 2, 3}, true}};
        f.max_composite_length = 8;
        f.verdict = Overall::DoesNotRequire;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_TWO_SQUARES_9";
        f.citation = "two squares joined by a 2-edge path: maximum composite length 8 on 9 vertices";
        f.pattern = graph_pattern(9, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 6}});
        f.shape = ShapeKind::MultiCycleNoLeaf;
        f.max_composite_length = 8;
        f.covers = {{{0, 1, 2, 3}, false}};
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_SQUARE_TRIANGLE";
        f.citation = "square and triangle joined by a 2-edge path: no spanning composite cycle contains the "
                     "triangle";
        f.pattern = graph_pattern(8, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {4, 5}, {5, 6}, {6, 7}, {6, 8}, {7, 8}});
        f.shape = ShapeKind::MultiCycleNoLeaf;
        f.covers = {{{5, 6, 7}, false}};
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_TRIANGLE_PATH";
        f.citation = "triangle with a pendant 3-edge path: maximum composite length 6 exceeds 3 + 2";
        f.pattern = graph_pattern(6, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 6}});
        f.shape = ShapeKind::Unicyclic;
        f.max_composite_length = 6;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_TREE4";
        f.citation = "star-shaped tree with edge signs (+,-,+); P- flips them to (-,+,-)";
        f.pattern = pattern_from_rows("0 + 0 0 / + 0 + + / 0 - 0 0 / 0 + 0 0");
        f.shape = ShapeKind::Tree;
        f.p_minus_edge_signs = {Sign::Minus, Sign::Plus, Sign::Minus};
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "PAT_TREE6";
        f.citation = "6-vertex tree whose characteristic polynomial has only even powers; the sign vector "
                     "(+,0,-,0,-,0,-) has one variation each way";
        f.pattern = pattern_from_rows("0-0000/+0+000/0+0+0+/00+0-0/000+00/00+000");
        f.shape = ShapeKind::Tree;
        f.det_sign = AmbSign::Minus;
        f.descartes = {{{Sign::Plus, Sign::Zero, Sign::Minus, Sign::Zero, Sign::Minus, Sign::Zero, Sign::Minus},
                        {1, 1}}};
        fx.push_back(std::move(f));
    }
    return fx;
}

std::string inertia_text(const std::optional<Inertia>& in) { return in ? to_string(*in) : "none"; }

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = build_fixtures();
    return all;
}

const Fixture* find_fixture(std::string_view name) {
    for (const auto& f : fixtures())
        if (f.name == name) return &f;
    return nullptr;
}

bool same_multiset(const std::vector<std::complex<double>>& got, const std::vector<std::complex<double>>& want,
                   double tol) {
    if (got.size() != want.size()) return false;
    std::vector<char> used(got.size(), 0);
    for (const auto& w : want) {
        std::size_t best = got.size();
        double best_d = tol;
        for (std::size_t k = 0; k < got.size(); ++k) {
            const double d = std::abs(got[k] - w);
            if (!used[k] && d <= best_d) {
                best = k;
                best_d = d;
            }
        }
        if (best == got.size()) return false;
        used[best] = 1;
    }
    return true;
}

FixtureCheck verify_fixture(const Fixture& f, const VerifyOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    FixtureCheck out;
    out.name = f.name;
    auto fail = [&](const std::string& msg) {
        out.pass = false;
        out.failures.push_back(msg);
    };
    try {
        const SignedDigraph d(f.pattern);
        for (const auto& r : f.realizations) {
            const std::string tag = "[" + r.label + "] ";
            if (!in_class(f.pattern, r.matrix)) fail(tag + "matrix is not in the qualitative class");
            const auto prof = spectral_profile(r.matrix);
            if (!r.eigenvalues.empty() && !same_multiset(prof.eigenvalues, r.eigenvalues, r.eigen_tol)) {
                std::ostringstream os;
                os << tag << "eigenvalues differ beyond " << r.eigen_tol << ":";
                for (const auto& z : prof.eigenvalues) os << ' ' << z;
                fail(os.str());
            }
            if (r.inertia && prof.inertia != *r.inertia)
                fail(tag + "inertia " + to_string(prof.inertia) + ", expected " + inertia_text(r.inertia));
            if (r.refined && prof.refined != *r.refined)
                fail(tag + "refined inertia " + to_string(prof.refined) + ", expected " + to_string(*r.refined));
            if (!r.char_poly.empty()) {
                const auto cp = char_poly(r.matrix);
                bool ok = cp.coeffs.size() == r.char_poly.size();
                for (std::size_t k = 0; ok && k < cp.coeffs.size(); ++k)
                    ok = std::abs(cp.coeffs[k] - r.char_poly[k]) <= 1e-8 * (1.0 + std::abs(r.char_poly[k]));
                if (!ok) fail(tag + "characteristic polynomial differs");
            }
        }
        if (f.max_composite_length) {
            const int m = max_composite_length(d);
            if (m != *f.max_composite_length)
                fail("max composite length " + std::to_string(m) + ", expected " +
                     std::to_string(*f.max_composite_length));
        }
        if (f.max_sign_set) {
            const auto s = max_composite_sign_set(d);
            if (s.contains_plus != f.max_sign_set->first || s.contains_minus != f.max_sign_set->second)
                fail("maximum composite sign set differs");
        }
        if (f.det_sign && sign_det(f.pattern) != *f.det_sign) fail("determinant sign class differs");
        if (f.shape) {
            const auto kind = classify_shape(build_graph(f.pattern)).kind;
            if (kind != *f.shape)
                fail("shape " + std::string(to_string(kind)) + ", expected " + std::string(to_string(*f.shape)));
        }
        for (const auto& c : f.covers) {
            const bool got = cover_extension_exists(d, make_simple_cycle(d, c.cycle));
            if (got != c.exists) fail("cover extension for a listed cycle is " + std::string(got ? "true" : "false"));
        }
        for (const auto& dc : f.descartes)
            if (descartes(dc.descending) != dc.variations) fail("Descartes variation counts differ");
        if (!f.p_minus_edge_signs.empty()) {
            const auto g = build_graph(p_minus(f.pattern));
            std::vector<Sign> got;
            for (const auto& e : g.edges()) got.push_back(e.sign);
            if (got != f.p_minus_edge_signs) fail("P- edge signs differ");
        }
        if (f.verdict || !f.census_exact.empty()) {
            AnalyzeOptions ao;
            ao.census = opt.census;
            const Verdict v = analyze(f.pattern, ao);
            if (f.verdict && v.overall != *f.verdict)
                fail("verdict " + std::string(to_string(v.overall)) + ", expected " +
                     std::string(to_string(*f.verdict)));
            if (v.overall == Overall::DoesNotRequire) {
                bool confirmed = false;
                for (const auto& fd : v.findings)
                    if (fd.conclusion == Conclusion::DoesNotRequire && fd.witness &&
                        confirm_pair(f.pattern, *fd.witness)) {
                        confirmed = true;
                        out.notes.push_back(fd.rule + " witness " + std::string(to_string(fd.witness->method)) +
                                            ": " + to_string(fd.witness->profile_a.inertia) + " vs " +
                                            to_string(fd.witness->profile_b.inertia));
                        break;
                    }
                if (!confirmed) fail("no numerically confirmed witness pair");
            }
            if (!f.census_exact.empty()) {
                std::vector<Inertia> keys;
                for (const auto& [in, e] : v.census->inertias) keys.push_back(in);
                if (keys != f.census_exact) {
                    std::string got;
                    for (const auto& k : keys) got += " " + to_string(k);
                    fail("census inertias:" + got);
                }
            }
        }
    } catch (const std::exception& e) {
        fail(std::string("error: ") + e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace signum
