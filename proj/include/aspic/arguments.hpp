#pragma once

#include "aspic/frameworks.hpp"
#include "aspic/logic.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace aspic {

/// Position of an argument inside its ArgumentStore.
struct ArgId {
    std::uint32_t index = 0;

    friend bool operator==(ArgId, ArgId) = default;
    friend auto operator<=>(ArgId, ArgId) = default;
};

struct Argument {
    ArgId id;
    /// Canonical label "A<n>", 1-based in enumeration order.
    std::string label;
    std::string rule_id;
    RuleKind kind = RuleKind::Strict;
    /// One immediate sub-argument per body formula of the top rule, in body order.
    std::vector<ArgId> subs;
    Formula conclusion;
    std::set<std::string> def_rules;
    /// Sub(A), including A itself, sorted.
    std::vector<ArgId> sub_arguments;
    /// Conclusions of every member of Sub(A).
    FormulaSet branch_conclusions;
    /// 1 for arguments built from empty-body rules.
    unsigned depth = 1;

    bool defeasible() const { return !def_rules.empty(); }
    bool strict_top() const { return kind == RuleKind::Strict; }
};

struct EnumerationLimits {
    std::size_t max_arguments = 10000;
};

/// Every argument on the basis of a system, deduplicated and closed under Sub.
///
/// Enumeration is breadth-first by derivation depth; within a depth,
/// arguments are ordered by top-rule id (natural order) and then by their
/// sub-argument ids. An argument is rejected when a proper sub-argument
/// already has its conclusion, which keeps the store finite on cyclic
/// rule sets; `pruned_circular()` counts the rejected candidates.
class ArgumentStore {
public:
    const std::vector<Argument>& arguments() const { return args_; }
    std::size_t size() const { return args_.size(); }
    bool empty() const { return args_.empty(); }
    const Argument& operator[](ArgId id) const { return args_.at(id.index); }

    std::optional<ArgId> find(const std::string& rule_id, const std::vector<ArgId>& subs) const;
    std::optional<ArgId> find_label(const std::string& label) const;

    /// "A5,A6 -> ~ht"
    std::string describe(ArgId id) const;
    /// "no_h(s_rides(s_wants),t_rides(t_wants))"
    std::string expand(ArgId id) const;

    NodeId node(ArgId id) const { return NodeId::base(args_.at(id.index).label); }

    std::size_t pruned_circular() const { return pruned_circular_; }
    const EnumerationLimits& limits() const { return limits_; }

private:
    friend ArgumentStore construct_arguments(const ArgumentationSystem&, EnumerationLimits);

    std::vector<Argument> args_;
    std::map<std::pair<std::string, std::vector<ArgId>>, ArgId> index_;
    std::size_t pruned_circular_ = 0;
    EnumerationLimits limits_;
};

/// Throws LimitExceeded when the store would grow past `limits.max_arguments`.
ArgumentStore construct_arguments(const ArgumentationSystem& as, EnumerationLimits limits = {});

/// Sub-arguments of `b` on which `a` undercuts it.
std::vector<ArgId> undercuts(const ArgumentationSystem& as, const ArgumentStore& store, ArgId a, ArgId b);

/// Sub-arguments of `b` on which `a` unrestrictedly rebuts it.
std::vector<ArgId> rebuts_unrestricted(const ArgumentStore& store, ArgId a, ArgId b);

enum class AttackKind { Undercut, Rebut };

struct AttackWitness {
    ArgId attacker;
    ArgId target;
    AttackKind kind = AttackKind::Rebut;
    ArgId on;

    friend bool operator==(const AttackWitness&, const AttackWitness&) = default;
    friend auto operator<=>(const AttackWitness&, const AttackWitness&) = default;
};

/// Every (attacker, target, kind, attacked sub-argument) quadruple.
std::vector<AttackWitness> attack_witnesses(const ArgumentationSystem& as, const ArgumentStore& store);

AF build_aspic_minus_af(const ArgumentationSystem& as, const ArgumentStore& store);
AF build_aspic_minus_af(const ArgumentationSystem& as, EnumerationLimits limits = {});

/// Same nodes and attacks as the ASPIC- framework, plus a support from the
/// set of immediate sub-arguments to every argument with a strict top rule.
JSBAF build_da_jsbaf(const ArgumentationSystem& as, const ArgumentStore& store);
JSBAF build_da_jsbaf(const ArgumentationSystem& as, EnumerationLimits limits = {});

} // namespace aspic
