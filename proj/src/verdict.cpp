#include "signum/verdict.hpp"

#include "signum/charpoly.hpp"
#include "signum/error.hpp"

#include <json.hpp>

#include <functional>
#include <sstream>

namespace signum {

std::string_view to_string(Conclusion c) {
    switch (c) {
        case Conclusion::DoesNotRequire: return "DoesNotRequire";
        case Conclusion::RequiresUnique: return "RequiresUnique";
        case Conclusion::NoConclusion: return "NoConclusion";
    }
    return "NoConclusion";
}

std::string_view to_string(Overall o) {
    switch (o) {
        case Overall::RequiresUnique: return "RequiresUnique";
        case Overall::DoesNotRequire: return "DoesNotRequire";
        case Overall::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

namespace {

struct CycleConditions {
    bool odd_negative = false;
    bool all_negative = false;
    bool odd_run = false;
};

CycleConditions conditions(const UndirectedCycle& c) {
    CycleConditions out;
    const int neg = c.negative_edges();
    out.odd_negative = neg % 2 == 1;
    out.all_negative = neg == c.length();
    for (const auto& run : maximal_signed_runs(c.edge_signs, true))
        if (run.length() % 2 == 1) out.odd_run = true;
    return out;
}

std::string cycle_label(const UndirectedCycle& c) {
    std::ostringstream os;
    os << "cycle";
    for (int v : c.vertices) os << ' ' << v + 1;
    return os.str();
}

std::string sign_word(AmbSign s) {
    switch (s) {
        case AmbSign::Plus: return "+";
        case AmbSign::Minus: return "-";
        case AmbSign::Zero: return "0";
        case AmbSign::Ambiguous: return "ambiguous";
    }
    return "?";
}

class Analyzer {
public:
    Analyzer(const SignPattern& p, const AnalyzeOptions& opt) : p_(p), opt_(opt) {}

    Verdict run() {
        Verdict v;
        v.pattern = p_;
        v.flags = validate(p_);
        if (!v.flags.all()) {
            std::string missing;
            if (!v.flags.combinatorially_symmetric) missing += " combinatorially-symmetric";
            if (!v.flags.zero_diagonal) missing += " zero-diagonal";
            if (!v.flags.irreducible) missing += " irreducible";
            v.findings.push_back({"precondition", false, Conclusion::NoConclusion,
                                  "the rule battery needs an irreducible combinatorially symmetric pattern with a "
                                  "zero diagonal",
                                  "pattern is not:" + missing,
                                  std::nullopt});
            return v;
        }
        std::tie(d_, g_) = build_graphs(p_);
        shape_ = classify_shape(g_);
        v.shape = shape_.kind;

        guarded(v, "R1", [&](RuleFinding& f) { r1(f); });
        guarded(v, "R2", [&](RuleFinding& f) { r2(f); });
        guarded(v, "R3", [&](RuleFinding& f) { r3(f); });
        guarded(v, "R4", [&](RuleFinding& f) { r4(f); });
        guarded(v, "R5", [&](RuleFinding& f) { r5(f); });
        guarded(v, "R6", [&](RuleFinding& f) { r6(f); });
        guarded(v, "R7", [&](RuleFinding& f) { r7(f); });
        census_ = census(p_, opt_.census);
        v.census = census_;
        guarded(v, "R8", [&](RuleFinding& f) { r8(f); });
        guarded(v, "R9", [&](RuleFinding& f) { r9(f); });

        bool refutes = false, proves = false;
        for (const auto& f : v.findings) {
            refutes |= f.conclusion == Conclusion::DoesNotRequire;
            proves |= f.conclusion == Conclusion::RequiresUnique;
        }
        v.overall = refutes ? Overall::DoesNotRequire : (proves ? Overall::RequiresUnique : Overall::Inconclusive);
        return v;
    }

private:
    void guarded(Verdict& v, const std::string& id, const std::function<void(RuleFinding&)>& rule) {
        RuleFinding f;
        f.rule = id;
        try {
            rule(f);
        } catch (const SignumError& e) {
            f.applicable = false;
            f.conclusion = Conclusion::NoConclusion;
            f.reason = std::string("skipped: ") + e.what();
        }
        v.findings.push_back(std::move(f));
    }

    void refute(RuleFinding& f, std::initializer_list<WitnessMethod> preferred) {
        f.conclusion = Conclusion::DoesNotRequire;
        for (auto m : preferred)
            if (auto w = witness_by(p_, m, opt_.witness)) {
                f.witness = std::move(w);
                return;
            }
        if (!fallback_done_) {
            fallback_ = find_witness_pair(p_, opt_.witness);
            fallback_done_ = true;
        }
        f.witness = fallback_;
    }

    void r1(RuleFinding& f) {
        f.citation = "a pattern requiring a unique inertia has all maximum-length composite cycles of one sign";
        const int m = max_composite_length(d_);
        f.applicable = true;
        if (m == 0) {
            f.reason = "no composite cycles";
            return;
        }
        const SignSet s = max_composite_sign_set(d_);
        if (s.ambiguous()) {
            f.reason = "maximum composite length " + std::to_string(m) + " occurs with both signs";
            refute(f, {WitnessMethod::SignClash});
        } else {
            f.reason = "every composite cycle of maximum length " + std::to_string(m) + " has sign " +
                       (s.contains_plus ? "+" : "-");
        }
    }

    void r2(RuleFinding& f) {
        f.citation = "a sign nonsingular pattern whose graph is an odd cycle requires a unique inertia";
        const int n = p_.order();
        if (shape_.kind != ShapeKind::SingleCycle || n % 2 == 0) {
            f.reason = "graph is not a cycle of odd length";
            return;
        }
        f.applicable = true;
        const AmbSign det = sign_det(p_);
        f.reason = "determinant sign " + sign_word(det);
        if (det == AmbSign::Plus || det == AmbSign::Minus) {
            f.conclusion = Conclusion::RequiresUnique;
            f.reason += ": sign nonsingular, so no eigenvalue has zero real part";
        } else if (det == AmbSign::Ambiguous) {
            f.reason += ": the two directed n-cycles have opposite signs";
            refute(f, {WitnessMethod::SignClash});
        }
    }

    void r3(RuleFinding& f) {
        f.citation = "a path pattern requiring a unique inertia has at most one maximal signed run of odd length";
        if (shape_.kind != ShapeKind::Path) {
            f.reason = "graph is not a path";
            return;
        }
        f.applicable = true;
        int odd = 0;
        for (const auto& run : maximal_signed_runs(path_edge_signs(g_), false)) odd += run.length() % 2;
        f.reason = std::to_string(odd) + " odd maximal signed run(s)";
        if (odd >= 2) refute(f, {WitnessMethod::MatchingGap, WitnessMethod::PathSeed});
    }

    void r4(RuleFinding& f) {
        f.citation = "a path pattern containing a P4, P4-, P6' or P6'- window does not require a unique inertia";
        if (shape_.kind != ShapeKind::Path) {
            f.reason = "graph is not a path";
            return;
        }
        f.applicable = true;
        using S = Sign;
        const std::pair<const char*, std::vector<Sign>> forbidden[] = {
            {"P4", {S::Plus, S::Minus, S::Plus}},
            {"P4-", {S::Minus, S::Plus, S::Minus}},
            {"P6'", {S::Plus, S::Minus, S::Minus, S::Minus, S::Plus}},
            {"P6'-", {S::Minus, S::Plus, S::Plus, S::Plus, S::Minus}},
        };
        // Windows are matched on edge signs along the path, which is invariant
        // under signature similarity; all four sequences are palindromes.
        const auto order = path_order(g_);
        const auto signs = path_edge_signs(g_);
        std::string hits;
        for (const auto& [name, seq] : forbidden) {
            const int len = static_cast<int>(seq.size());
            for (int s = 0; s + len <= static_cast<int>(signs.size()); ++s) {
                if (!std::equal(seq.begin(), seq.end(), signs.begin() + s)) continue;
                hits += std::string(hits.empty() ? "" : "; ") + name + " on path vertices";
                for (int t = s; t <= s + len; ++t) hits += " " + std::to_string(order[t] + 1);
            }
        }
        if (hits.empty()) {
            f.reason = "no forbidden window";
            return;
        }
        f.reason = hits;
        refute(f, {WitnessMethod::PathSeed, WitnessMethod::MatchingGap});
    }

    void r5(RuleFinding& f) {
        f.citation = "a cycle graph with an odd number of negative edges, with all edges negative, or of even "
                     "length with an odd maximal signed run does not require a unique inertia";
        if (shape_.kind != ShapeKind::SingleCycle) {
            f.reason = "graph is not a single cycle";
            return;
        }
        f.applicable = true;
        const auto& c = shape_.cycles.front();
        const auto cc = conditions(c);
        const bool even = c.length() % 2 == 0;
        std::vector<std::string> met;
        if (cc.odd_negative) met.push_back("(i) odd number of negative edges");
        if (cc.all_negative) met.push_back("(ii) every edge negative");
        if (even && cc.odd_run) met.push_back("(iii) even length with an odd maximal signed run");
        conclude_cycle_rule(f, met, cc, even);
    }

    void r6(RuleFinding& f) {
        f.citation = "a unicyclic graph whose leaves lie at even distance from the cycle, with the cycle meeting a "
                     "cycle condition, does not require a unique inertia";
        if (shape_.kind != ShapeKind::Unicyclic) {
            f.reason = "graph is not unicyclic";
            return;
        }
        f.applicable = true;
        const auto report = cycle_structure(g_);
        for (const auto& lc : report.leaf_cycle_distances)
            if (lc.distance % 2 != 0) {
                f.reason = "leaf " + std::to_string(lc.leaf + 1) + " is at odd distance " +
                           std::to_string(lc.distance) + " from the cycle";
                return;
            }
        const auto& c = report.cycles.front();
        const auto cc = conditions(c);
        const bool even = c.length() % 2 == 0;
        std::vector<std::string> met;
        if (cc.odd_negative) met.push_back("(i) odd number of negative edges on the cycle");
        if (cc.all_negative) met.push_back("(ii) every cycle edge negative");
        if (even && cc.odd_run) met.push_back("(iii) even cycle with an odd maximal signed run");
        conclude_cycle_rule(f, met, cc, even);
    }

    void r7(RuleFinding& f) {
        f.citation = "a leafless graph whose path-adjacent cycles lie at odd distance, with a cycle meeting a cycle "
                     "condition, does not require a unique inertia";
        if (shape_.kind != ShapeKind::MultiCycleNoLeaf) {
            f.reason = "graph is not a leafless graph with several cycles";
            return;
        }
        f.applicable = true;
        const auto report = cycle_structure(g_);
        const std::string convention = opt_.strict_adjacency ? "connecting-path edge count"
                                                             : "connecting-path edge count and graph distance";
        for (const auto& pa : report.path_adjacent_pairs) {
            const bool odd = pa.connecting_edges % 2 == 1 && (opt_.strict_adjacency || pa.graph_distance % 2 == 1);
            if (!odd) {
                f.reason = "cycles " + std::to_string(pa.first + 1) + " and " + std::to_string(pa.second + 1) +
                           " are path-adjacent at even distance (" + std::to_string(pa.connecting_edges) +
                           " connecting edges, graph distance " + std::to_string(pa.graph_distance) +
                           "; convention: " + convention + ")";
                return;
            }
        }
        bool all_even = true;
        for (const auto& c : report.cycles) all_even &= c.length() % 2 == 0;
        std::vector<std::string> met;
        bool any_all_neg = false, any_odd_run = false, any_odd_neg = false;
        for (const auto& c : report.cycles) {
            const auto cc = conditions(c);
            if (cc.odd_negative && !any_odd_neg) {
                met.push_back("(i) " + cycle_label(c) + " has an odd number of negative edges");
                any_odd_neg = true;
            }
            if (all_even && cc.all_negative && !any_all_neg) {
                met.push_back("(ii) all cycles even and " + cycle_label(c) + " is all negative");
                any_all_neg = true;
            }
            if (all_even && cc.odd_run && !any_odd_run) {
                met.push_back("(iii) all cycles even and " + cycle_label(c) + " has an odd maximal signed run");
                any_odd_run = true;
            }
        }
        if (met.empty()) {
            f.reason = "no cycle condition holds (path-adjacent distances odd under " + convention + ")";
            return;
        }
        f.reason = join(met) + "; path-adjacent distances odd under " + convention;
        std::vector<WitnessMethod> order;
        if (any_all_neg) order.push_back(WitnessMethod::NegativeCycle);
        if (any_odd_run || (all_even && any_odd_neg)) order.push_back(WitnessMethod::OddRun);
        order.push_back(WitnessMethod::SignClash);
        refute_with(f, order);
    }

    void conclude_cycle_rule(RuleFinding& f, const std::vector<std::string>& met, const CycleConditions& cc,
                             bool even) {
        if (met.empty()) {
            f.reason = "none of the cycle conditions holds";
            return;
        }
        f.reason = join(met);
        std::vector<WitnessMethod> order;
        if (even && cc.all_negative) order.push_back(WitnessMethod::NegativeCycle);
        if (even) order.push_back(WitnessMethod::OddRun);
        order.push_back(WitnessMethod::SignClash);
        refute_with(f, order);
    }

    void refute_with(RuleFinding& f, const std::vector<WitnessMethod>& order) {
        f.conclusion = Conclusion::DoesNotRequire;
        for (auto m : order)
            if (auto w = witness_by(p_, m, opt_.witness)) {
                f.witness = std::move(w);
                return;
            }
        refute(f, {});
    }

    static std::string join(const std::vector<std::string>& parts) {
        std::string out;
        for (const auto& s : parts) out += (out.empty() ? "" : "; ") + s;
        return out;
    }

    void r8(RuleFinding& f) {
        f.citation = "two matrices of the class with different numbers of eigenvalues on the imaginary axis show "
                     "that the inertia is not unique";
        f.applicable = true;
        const auto zs = census_.clean_zero_counts();
        std::string zlist;
        for (int z : zs) zlist += (zlist.empty() ? "" : ",") + std::to_string(z);
        f.reason = "sampled i0 values {" + zlist + "} over " + std::to_string(census_.trials) + " trials";
        if (zs.size() < 2) return;
        std::vector<std::pair<const Eigen::MatrixXd*, SpectralProfile>> reps;
        for (const auto& [in, entry] : census_.inertias) {
            if (entry.clean == 0) continue;
            const auto prof = spectral_profile(entry.representative);
            if (!prof.clean()) continue;
            for (const auto& [a, pa] : reps) {
                if (pa.inertia.zero == prof.inertia.zero) continue;
                WitnessPair w{*a, entry.representative, pa, prof, WitnessMethod::Census,
                              "sampled " + to_string(pa.inertia) + " vs " + to_string(prof.inertia), {}, {}};
                if (confirm_pair(p_, w)) {
                    f.conclusion = Conclusion::DoesNotRequire;
                    f.witness = std::move(w);
                    return;
                }
            }
            reps.emplace_back(&entry.representative, prof);
        }
        f.reason += "; no clean representative pair confirmed";
    }

    void r9(RuleFinding& f) {
        f.citation = "a tree pattern requires a unique inertia exactly when its edge-flipped pattern P- is "
                     "consistent (evidence only)";
        if (shape_.kind != ShapeKind::Tree && shape_.kind != ShapeKind::Path) {
            f.reason = "graph is not a tree";
            return;
        }
        f.applicable = true;
        if (!opt_.census_of_p_minus) {
            f.reason = "census of P- disabled";
            return;
        }
        const Census cm = census(p_minus(p_), opt_.census);
        std::string freqs;
        for (const auto& [fr, count] : cm.frequencies)
            freqs += (freqs.empty() ? "" : ", ") + to_string(fr) + " x" + std::to_string(count);
        f.reason = std::string("P- frequencies {") + freqs + "}: " +
                   (cm.consistent_observed() ? "consistent in the sample" : "not consistent in the sample");
    }

    const SignPattern& p_;
    const AnalyzeOptions& opt_;
    SignedDigraph d_;
    SignedGraph g_;
    GraphShape shape_;
    Census census_;
    bool fallback_done_ = false;
    std::optional<WitnessPair> fallback_;
};

}  // namespace

Verdict analyze(const SignPattern& p, const AnalyzeOptions& opt) { return Analyzer(p, opt).run(); }

namespace {

std::string matrix_text(const Eigen::MatrixXd& a, const std::string& indent) {
    std::ostringstream os;
    os.precision(6);
    for (int i = 0; i < a.rows(); ++i) {
        os << indent;
        for (int j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::string explain(const Verdict& v) {
    std::ostringstream os;
    os << "pattern (n=" << v.pattern.order() << "):\n";
    std::istringstream rows(serialize(v.pattern));
    for (std::string line; std::getline(rows, line);) os << "  " << line << '\n';
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "flags: combinatorially symmetric " << yn(v.flags.combinatorially_symmetric) << ", zero diagonal "
       << yn(v.flags.zero_diagonal) << ", irreducible " << yn(v.flags.irreducible) << '\n';
    if (v.shape) os << "shape: " << to_string(*v.shape) << '\n';
    for (const auto& f : v.findings) {
        os << f.rule << ": " << (f.applicable ? "applicable" : "not applicable") << ", " << to_string(f.conclusion)
           << '\n';
        os << "  rule: " << f.citation << '\n';
        os << "  found: " << f.reason << '\n';
        if (f.witness) {
            const auto& w = *f.witness;
            os << "  witness (" << to_string(w.method) << "): " << w.detail << '\n';
            os << "    A inertia " << to_string(w.profile_a.inertia);
            if (w.epsilon_a) os << " at epsilon " << *w.epsilon_a;
            os << '\n' << matrix_text(w.a, "      ");
            os << "    B inertia " << to_string(w.profile_b.inertia);
            if (w.epsilon_b) os << " at epsilon " << *w.epsilon_b;
            os << '\n' << matrix_text(w.b, "      ");
        } else if (f.conclusion == Conclusion::DoesNotRequire) {
            os << "  witness: none constructed\n";
        }
    }
    if (v.census) {
        const auto& c = *v.census;
        os << "census: " << c.trials << " trials, " << c.skipped << " skipped, " << c.borderline << " borderline\n";
        for (const auto& [in, e] : c.inertias) os << "  inertia " << to_string(in) << " x" << e.count << '\n';
        for (const auto& [fr, n] : c.frequencies) os << "  frequency " << to_string(fr) << " x" << n << '\n';
    }
    os << "overall: " << to_string(v.overall) << '\n';
    return os.str();
}

namespace {

using nlohmann::ordered_json;

ordered_json matrix_json(const Eigen::MatrixXd& a) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < a.rows(); ++i) {
        ordered_json r = ordered_json::array();
        for (int j = 0; j < a.cols(); ++j) r.push_back(a(i, j));
        rows.push_back(r);
    }
    return rows;
}

ordered_json inertia_json(const Inertia& in) { return ordered_json::array({in.pos, in.neg, in.zero}); }

ordered_json profile_json(const SpectralProfile& p) {
    ordered_json j;
    j["inertia"] = inertia_json(p.inertia);
    j["refined"] = ordered_json::array({p.refined.pos, p.refined.neg, p.refined.zero_eigs, p.refined.imag});
    j["frequency"] = ordered_json::array({p.frequency.real, p.frequency.nonreal});
    return j;
}

}  // namespace

std::string to_json(const Verdict& v, int indent) {
    ordered_json j;
    std::vector<std::string> rows;
    std::istringstream in(serialize(v.pattern));
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    j["pattern"] = rows;
    j["flags"] = {{"combinatorially_symmetric", v.flags.combinatorially_symmetric},
                  {"zero_diagonal", v.flags.zero_diagonal},
                  {"irreducible", v.flags.irreducible}};
    j["shape"] = v.shape ? ordered_json(std::string(to_string(*v.shape))) : ordered_json(nullptr);
    j["findings"] = ordered_json::array();
    for (const auto& f : v.findings) {
        ordered_json fj;
        fj["rule"] = f.rule;
        fj["applicable"] = f.applicable;
        fj["conclusion"] = std::string(to_string(f.conclusion));
        fj["citation"] = f.citation;
        fj["reason"] = f.reason;
        if (f.witness) {
            const auto& w = *f.witness;
            ordered_json wj;
            wj["method"] = std::string(to_string(w.method));
            wj["detail"] = w.detail;
            wj["a"] = matrix_json(w.a);
            wj["b"] = matrix_json(w.b);
            wj["profile_a"] = profile_json(w.profile_a);
            wj["profile_b"] = profile_json(w.profile_b);
            if (w.epsilon_a) wj["epsilon_a"] = *w.epsilon_a;
            if (w.epsilon_b) wj["epsilon_b"] = *w.epsilon_b;
            fj["witness"] = wj;
        }
        j["findings"].push_back(fj);
    }
    j["overall"] = std::string(to_string(v.overall));
    if (v.census) {
        const auto& c = *v.census;
        ordered_json cj;
        cj["trials"] = c.trials;
        cj["skipped"] = c.skipped;
        cj["borderline"] = c.borderline;
        cj["inertias"] = ordered_json::array();
        for (const auto& [in, e] : c.inertias)
            cj["inertias"].push_back({{"inertia", inertia_json(in)}, {"count", e.count}, {"clean", e.clean}});
        cj["frequencies"] = ordered_json::array();
        for (const auto& [fr, n] : c.frequencies)
            cj["frequencies"].push_back(
                {{"frequency", ordered_json::array({fr.real, fr.nonreal})}, {"count", n}});
        j["census"] = cj;
    } else {
        j["census"] = nullptr;
    }
    return j.dump(indent);
}

}  // namespace signum
