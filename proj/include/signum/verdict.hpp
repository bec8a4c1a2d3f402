#pragma once

#include "signum/witness.hpp"

#include <optional>
#include <string>
#include <vector>

namespace signum {

enum class Conclusion { DoesNotRequire, RequiresUnique, NoConclusion };
enum class Overall { RequiresUnique, DoesNotRequire, Inconclusive };

std::string_view to_string(Conclusion c);
std::string_view to_string(Overall o);

struct RuleFinding {
    std::string rule;  // "R1" ... "R9", or "precondition"
    bool applicable = false;
    Conclusion conclusion = Conclusion::NoConclusion;
    std::string citation;  // the principle the rule applies
    std::string reason;    // what was found for this pattern
    std::optional<WitnessPair> witness;
};

struct AnalyzeOptions {
    SampleConfig census;
    WitnessOptions witness;
    // R7 tests only the connecting-path edge count instead of requiring both
    // distance conventions to be odd.
    bool strict_adjacency = false;
    bool census_of_p_minus = true;  // R9
};

struct Verdict {
    SignPattern pattern;
    PatternFlags flags;
    std::optional<ShapeKind> shape;
    std::vector<RuleFinding> findings;
    Overall overall = Overall::Inconclusive;
    std::optional<Census> census;
};

// Never throws for well-formed patterns; precondition failures and rule
// errors surface as findings.
Verdict analyze(const SignPattern& p, const AnalyzeOptions& opt = {});

std::string explain(const Verdict& v);

// Keys in fixed order: pattern, flags, shape, findings, overall, census.
std::string to_json(const Verdict& v, int indent = 2);

}  // namespace signum
