#include "aspic/postulates.hpp"

#include "aspic/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

namespace aspic {

std::string_view to_string(Mode m) {
    return m == Mode::AspicMinus ? "aspic-minus" : "deductive";
}

std::optional<Mode> parse_mode(std::string_view name) {
    if (name == "aspic-minus")
        return Mode::AspicMinus;
    if (name == "deductive" || name == "deductive-aspic-minus")
        return Mode::Deductive;
    return std::nullopt;
}

std::string_view to_string(FlattenMode m) {
    return m == FlattenMode::Literal ? "literal" : "prune-inert";
}

std::optional<FlattenMode> parse_flatten_mode(std::string_view name) {
    if (name == "literal")
        return FlattenMode::Literal;
    if (name == "prune-inert")
        return FlattenMode::PruneInert;
    return std::nullopt;
}

Evaluation evaluate(const ArgumentationSystem& as, Semantics sigma, Mode mode, const EvalLimits& limits) {
    const auto witness = inconsistency_witness(as);
    if (witness && limits.require_consistent)
        throw InconsistentSystem("strict rules alone derive both " + witness->first.str() + " and " +
                                 witness->second.str());
    Evaluation ev;
    ev.store = construct_arguments(as, limits.enumeration);
    ev.consistent = !witness;

    if (mode == Mode::AspicMinus) {
        AF af = build_aspic_minus_af(as, ev.store);
        ev.raw_extensions = extensions(af, sigma, limits.search);
        ev.extensions = ev.raw_extensions;
        ev.framework.nodes = std::move(af.nodes);
        ev.framework.attacks = std::move(af.attacks);
    } else {
        ev.framework = build_da_jsbaf(as, ev.store);
        ev.flattened = flatten_simplified(ev.framework, limits.flatten);
        ev.raw_extensions = extensions(*ev.flattened, sigma, limits.search);
        for (const auto& e : ev.raw_extensions)
            ev.extensions.push_back(project(e, ev.framework.nodes));
        std::sort(ev.extensions.begin(), ev.extensions.end());
        ev.extensions.erase(std::unique(ev.extensions.begin(), ev.extensions.end()), ev.extensions.end());
    }

    std::map<std::string, ArgId> by_label;
    for (const auto& a : ev.store.arguments())
        by_label.emplace(a.label, a.id);
    for (const auto& e : ev.extensions) {
        ConclusionSet c;
        c.source_extension = e;
        c.mode = mode;
        c.semantics = sigma;
        for (const auto& n : e)
            c.formulas.insert(ev.store[by_label.at(n.label())].conclusion);
        ev.conclusion_sets.push_back(std::move(c));
    }
    return ev;
}

std::vector<ConclusionSet> conclusion_sets(const ArgumentationSystem& as, Semantics sigma, Mode mode,
                                           const EvalLimits& limits) {
    return evaluate(as, sigma, mode, limits).conclusion_sets;
}

ClosureVerdict check_closure(const ArgumentationSystem& as, const FormulaSet& c) {
    for (const auto& r : as.strict_rules) {
        if (c.count(r.head))
            continue;
        if (std::all_of(r.body.begin(), r.body.end(), [&](const Formula& f) { return c.count(f) > 0; }))
            return {false, r};
    }
    return {};
}

ConsistencyVerdict check_direct_consistency(const FormulaSet& c) {
    if (auto w = find_complement_pair(c))
        return {false, w};
    return {};
}

ConsistencyVerdict check_indirect_consistency(const ArgumentationSystem& as, const FormulaSet& c) {
    return check_direct_consistency(strict_closure(c, as.strict_rules));
}

PostulateReport check_postulates(const ArgumentationSystem& as, const FormulaSet& c) {
    return {check_closure(as, c), check_direct_consistency(c), check_indirect_consistency(as, c)};
}

namespace {

ModeResult score(const ArgumentationSystem& as, Semantics sigma, Mode mode, const EvalLimits& limits) {
    ModeResult r;
    r.mode = mode;
    r.sets = conclusion_sets(as, sigma, mode, limits);
    for (const auto& c : r.sets) {
        PostulateReport p = check_postulates(as, c.formulas);
        r.closure &= p.closure.satisfied;
        r.direct_consistency &= p.direct_consistency.satisfied;
        r.indirect_consistency &= p.indirect_consistency.satisfied;
        r.reports.push_back(std::move(p));
    }
    return r;
}

} // namespace

ComparisonReport compare_modes(const ArgumentationSystem& as, Semantics sigma, const EvalLimits& limits) {
    ComparisonReport out;
    out.semantics = sigma;
    out.in_postulate_scope = is_consistent(as);
    out.aspic_minus = score(as, sigma, Mode::AspicMinus, limits);
    out.deductive = score(as, sigma, Mode::Deductive, limits);
    if (out.aspic_minus.closure != out.deductive.closure)
        out.differing.push_back("closure");
    if (out.aspic_minus.direct_consistency != out.deductive.direct_consistency)
        out.differing.push_back("direct_consistency");
    if (out.aspic_minus.indirect_consistency != out.deductive.indirect_consistency)
        out.differing.push_back("indirect_consistency");
    return out;
}

namespace {

std::string atom_name(unsigned i) {
    if (i < 26)
        return std::string(1, static_cast<char>('a' + i));
    return "p" + std::to_string(i);
}

class SystemSampler {
public:
    SystemSampler(const RandomSystemParams& p, std::uint64_t seed) : p_(p), rng_(seed) {
        for (unsigned i = 0; i < p.atoms; ++i)
            atoms_.push_back(atom_name(i));
    }

    ArgumentationSystem draw() {
        ArgumentationSystem as;
        as.vocabulary = atoms_;
        std::set<std::tuple<RuleKind, std::vector<Formula>, Formula>> shapes;
        auto add_rules = [&](std::vector<Rule>& into, RuleKind kind, unsigned count, const char* prefix) {
            for (unsigned i = 0; i < count; ++i) {
                Rule r;
                // Bounded redraws; a shape collision that survives them just drops the rule.
                for (int tries = 0; tries < 32; ++tries) {
                    r = draw_rule(kind);
                    if (shapes.emplace(r.kind, r.body, r.head).second) {
                        r.id = prefix + std::to_string(into.size() + 1);
                        into.push_back(r);
                        break;
                    }
                }
            }
        };
        add_rules(as.strict_rules, RuleKind::Strict, p_.strict_rules, "s");
        add_rules(as.defeasible_rules, RuleKind::Defeasible, p_.defeasible_rules, "d");
        std::bernoulli_distribution named(p_.undercut_density);
        for (const auto& r : as.defeasible_rules)
            if (named(rng_))
                as.undercut_names.emplace(r.id, literal());
        return as;
    }

private:
    Formula literal() {
        std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(atoms_.size()) - 1);
        std::bernoulli_distribution negate(0.5);
        Formula f = Formula::atom(atoms_[pick(rng_)]);
        return negate(rng_) ? f.negated() : f;
    }

    Rule draw_rule(RuleKind kind) {
        Rule r;
        r.kind = kind;
        r.head = literal();
        std::uniform_int_distribution<unsigned> size(0, p_.max_body);
        const unsigned want = size(rng_);
        std::set<Formula> seen{r.head};
        for (unsigned k = 0; k < want * 4 && r.body.size() < want; ++k) {
            Formula f = literal();
            if (seen.insert(f).second)
                r.body.push_back(f);
        }
        return r;
    }

    RandomSystemParams p_;
    std::mt19937_64 rng_;
    std::vector<std::string> atoms_;
};

} // namespace

GeneratedSystem random_system(const RandomSystemParams& params, std::uint64_t seed) {
    if (params.atoms == 0)
        throw GenerationFailed("random_system needs at least one atom");
    SystemSampler sampler(params, seed);
    for (unsigned attempt = 1; attempt <= params.max_attempts; ++attempt) {
        ArgumentationSystem as = sampler.draw();
        if (is_consistent(as))
            return {std::move(as), seed, attempt};
    }
    throw GenerationFailed("no consistent system after " + std::to_string(params.max_attempts) +
                           " draws (seed " + std::to_string(seed) + ")");
}

} // namespace aspic
