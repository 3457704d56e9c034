#pragma once

#include "aspic/arguments.hpp"
#include "aspic/logic.hpp"
#include "aspic/semantics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aspic {

enum class Mode {
    AspicMinus,   ///< extensions of the plain attack framework
    Deductive,    ///< sup(sigma)-extensions of the joint-support framework
};

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view name);
std::string_view to_string(FlattenMode m);
std::optional<FlattenMode> parse_flatten_mode(std::string_view name);

struct EvalLimits {
    EnumerationLimits enumeration;
    SearchLimits search;
    FlattenMode flatten = FlattenMode::Literal;
    /// When false, inconsistent systems are evaluated but flagged out of postulate scope.
    bool require_consistent = true;
};

struct ConclusionSet {
    FormulaSet formulas;
    /// The (projected, for deductive mode) extension the formulas come from.
    Extension source_extension;
    Mode mode = Mode::Deductive;
    Semantics semantics = Semantics::Preferred;

    friend bool operator==(const ConclusionSet&, const ConclusionSet&) = default;
};

/// Everything computed on the way to the conclusion sets of one (system, sigma, mode) run.
struct Evaluation {
    ArgumentStore store;
    JSBAF framework;                       ///< supports empty in aspic-minus mode
    std::optional<AF> flattened;           ///< deductive mode only
    std::vector<Extension> raw_extensions; ///< extensions of the evaluated AF
    std::vector<Extension> extensions;     ///< projected and deduplicated
    std::vector<ConclusionSet> conclusion_sets;
    bool consistent = true;
};

/// Throws InconsistentSystem (when consistency is required), LimitExceeded
/// or SearchLimitExceeded.
Evaluation evaluate(const ArgumentationSystem& as, Semantics sigma, Mode mode, const EvalLimits& limits = {});

std::vector<ConclusionSet> conclusion_sets(const ArgumentationSystem& as, Semantics sigma, Mode mode,
                                           const EvalLimits& limits = {});

struct ClosureVerdict {
    bool satisfied = true;
    /// A strict rule whose body lies inside the set but whose head does not.
    std::optional<Rule> witness;
};

struct ConsistencyVerdict {
    bool satisfied = true;
    /// (phi, ~phi)
    std::optional<std::pair<Formula, Formula>> witness;
};

ClosureVerdict check_closure(const ArgumentationSystem& as, const FormulaSet& c);
ConsistencyVerdict check_direct_consistency(const FormulaSet& c);
ConsistencyVerdict check_indirect_consistency(const ArgumentationSystem& as, const FormulaSet& c);

struct PostulateReport {
    ClosureVerdict closure;
    ConsistencyVerdict direct_consistency;
    ConsistencyVerdict indirect_consistency;

    bool all_satisfied() const {
        return closure.satisfied && direct_consistency.satisfied && indirect_consistency.satisfied;
    }
};

PostulateReport check_postulates(const ArgumentationSystem& as, const FormulaSet& c);

struct ModeResult {
    Mode mode = Mode::Deductive;
    std::vector<ConclusionSet> sets;
    std::vector<PostulateReport> reports;
    bool closure = true;
    bool direct_consistency = true;
    bool indirect_consistency = true;

    bool all_satisfied() const { return closure && direct_consistency && indirect_consistency; }
};

struct ComparisonReport {
    Semantics semantics = Semantics::Preferred;
    /// False when the system is inconsistent and was scored anyway.
    bool in_postulate_scope = true;
    ModeResult aspic_minus;
    ModeResult deductive;
    /// Names of the postulates whose aggregate verdict differs between modes.
    std::vector<std::string> differing;
};

ComparisonReport compare_modes(const ArgumentationSystem& as, Semantics sigma, const EvalLimits& limits = {});

struct RandomSystemParams {
    unsigned atoms = 4;
    unsigned strict_rules = 3;
    unsigned defeasible_rules = 3;
    unsigned max_body = 2;
    double undercut_density = 0.3;
    unsigned max_attempts = 1000;
};

struct GeneratedSystem {
    ArgumentationSystem system;
    std::uint64_t seed = 0;
    /// Number of draws until a consistent system came up.
    unsigned attempts = 0;
};

/// Deterministic in `seed`; rejection-samples until the system is consistent.
/// Throws GenerationFailed once `params.max_attempts` draws are used up.
GeneratedSystem random_system(const RandomSystemParams& params, std::uint64_t seed);

} // namespace aspic
