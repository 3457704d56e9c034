#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aspic {

/// A formula of the object language: an atom under zero or more negations.
///
/// Since negation is the only connective, `~~a` is stored as the pair
/// (a, 2). No double-negation elimination is ever applied; `~~a` and `a`
/// are distinct formulas.
class Formula {
public:
    Formula() = default;

    static Formula atom(std::string name) { return Formula(std::move(name), 0); }

    Formula negated() const { return Formula(atom_, negations_ + 1); }

    /// The formula directly under the outermost negation. Requires `!is_atom()`.
    Formula inner() const;

    bool is_atom() const { return negations_ == 0; }
    const std::string& atom_name() const { return atom_; }
    unsigned negations() const { return negations_; }

    /// ASCII rendering, `~` for negation.
    std::string str() const;

    friend bool operator==(const Formula&, const Formula&) = default;
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
        if (auto c = a.atom_ <=> b.atom_; c != 0)
            return c;
        return a.negations_ <=> b.negations_;
    }

private:
    Formula(std::string atom, unsigned negations) : atom_(std::move(atom)), negations_(negations) {}

    std::string atom_;
    unsigned negations_ = 0;
};

using FormulaSet = std::set<Formula>;

/// True iff one formula is the syntactic negation of the other.
bool complement(const Formula& phi, const Formula& psi);

enum class RuleKind { Strict, Defeasible };

struct Rule {
    std::string id;
    RuleKind kind = RuleKind::Strict;
    std::vector<Formula> body;
    Formula head;

    bool is_strict() const { return kind == RuleKind::Strict; }

    /// "a, b -> c" or "a => c".
    std::string str() const;

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// (R_s, R_d, n) plus an optional declared atom vocabulary.
struct ArgumentationSystem {
    /// Declared atoms; empty means "no declaration", i.e. any atom is accepted.
    std::vector<std::string> vocabulary;
    std::vector<Rule> strict_rules;
    std::vector<Rule> defeasible_rules;
    /// The partial naming function n, keyed by defeasible-rule id.
    std::map<std::string, Formula> undercut_names;

    const Rule* find_rule(const std::string& id) const;
    std::optional<Formula> name_of(const std::string& defeasible_id) const;

    std::size_t rule_count() const { return strict_rules.size() + defeasible_rules.size(); }

    /// Throws ValidationError on duplicate ids, duplicate rules, rules filed
    /// under the wrong kind, names on non-defeasible rules, or formulas over
    /// undeclared atoms.
    void validate() const;

    friend bool operator==(const ArgumentationSystem&, const ArgumentationSystem&) = default;
};

/// Least superset of `seed` closed under `rules` (body formulas present => head present).
FormulaSet strict_closure(const FormulaSet& seed, std::span<const Rule> rules);

/// First complement pair in `formulas` in canonical order, if any.
std::optional<std::pair<Formula, Formula>> find_complement_pair(const FormulaSet& formulas);

/// Strict arguments never conclude a complement pair.
bool is_consistent(const ArgumentationSystem& as);

/// The complement pair derivable by strict rules alone, when the system is inconsistent.
std::optional<std::pair<Formula, Formula>> inconsistency_witness(const ArgumentationSystem& as);

} // namespace aspic
