#include "aspic/logic.hpp"

#include "aspic/errors.hpp"

#include <cassert>
#include <tuple>

namespace aspic {

Formula Formula::inner() const {
    assert(negations_ > 0);
    return Formula(atom_, negations_ - 1);
}

std::string Formula::str() const {
    return std::string(negations_, '~') + atom_;
}

bool complement(const Formula& phi, const Formula& psi) {
    if (phi.atom_name() != psi.atom_name())
        return false;
    return phi.negations() == psi.negations() + 1 || psi.negations() == phi.negations() + 1;
}

std::string Rule::str() const {
    std::string out;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (i)
            out += ", ";
        out += body[i].str();
    }
    if (!out.empty())
        out += ' ';
    out += is_strict() ? "->" : "=>";
    out += ' ';
    out += head.str();
    return out;
}

const Rule* ArgumentationSystem::find_rule(const std::string& id) const {
    for (const auto& r : strict_rules)
        if (r.id == id)
            return &r;
    for (const auto& r : defeasible_rules)
        if (r.id == id)
            return &r;
    return nullptr;
}

std::optional<Formula> ArgumentationSystem::name_of(const std::string& defeasible_id) const {
    auto it = undercut_names.find(defeasible_id);
    if (it == undercut_names.end())
        return std::nullopt;
    return it->second;
}

void ArgumentationSystem::validate() const {
    std::set<std::string> ids;
    std::set<std::tuple<RuleKind, std::vector<Formula>, Formula>> shapes;
    std::set<std::string> atoms(vocabulary.begin(), vocabulary.end());

    auto check_formula = [&](const Formula& f, const Rule* owner) {
        if (f.atom_name().empty())
            throw ValidationError("empty atom name" + (owner ? " in rule " + owner->id : std::string()));
        if (!atoms.empty() && !atoms.count(f.atom_name()))
            throw ValidationError("undeclared atom '" + f.atom_name() + "'" +
                                  (owner ? " in rule " + owner->id : std::string()));
    };

    auto check_rules = [&](const std::vector<Rule>& rules, RuleKind kind) {
        for (const auto& r : rules) {
            if (r.id.empty())
                throw ValidationError("rule with empty id");
            if (r.kind != kind)
                throw ValidationError("rule " + r.id + " filed under the wrong rule kind");
            if (!ids.insert(r.id).second)
                throw ValidationError("duplicate rule id " + r.id);
            if (!shapes.emplace(r.kind, r.body, r.head).second)
                throw ValidationError("duplicate rule " + r.id + ": " + r.str());
            for (const auto& f : r.body)
                check_formula(f, &r);
            check_formula(r.head, &r);
        }
    };
    check_rules(strict_rules, RuleKind::Strict);
    check_rules(defeasible_rules, RuleKind::Defeasible);

    for (const auto& [id, name] : undercut_names) {
        const Rule* r = find_rule(id);
        if (!r)
            throw ValidationError("n defined on unknown rule " + id);
        if (r->is_strict())
            throw ValidationError("n defined on strict rule " + id);
        check_formula(name, nullptr);
    }
}

FormulaSet strict_closure(const FormulaSet& seed, std::span<const Rule> rules) {
    FormulaSet closure = seed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : rules) {
            if (closure.count(r.head))
                continue;
            bool fires = true;
            for (const auto& f : r.body) {
                if (!closure.count(f)) {
                    fires = false;
                    break;
                }
            }
            if (fires) {
                closure.insert(r.head);
                changed = true;
            }
        }
    }
    return closure;
}

std::optional<std::pair<Formula, Formula>> find_complement_pair(const FormulaSet& formulas) {
    for (const auto& f : formulas) {
        Formula neg = f.negated();
        if (formulas.count(neg))
            return std::pair{f, neg};
    }
    return std::nullopt;
}

std::optional<std::pair<Formula, Formula>> inconsistency_witness(const ArgumentationSystem& as) {
    return find_complement_pair(strict_closure({}, as.strict_rules));
}

bool is_consistent(const ArgumentationSystem& as) {
    return !inconsistency_witness(as).has_value();
}

} // namespace aspic
