#include "aspic/arguments.hpp"

#include "aspic/errors.hpp"
#include "aspic/natural_order.hpp"

#include <algorithm>

namespace aspic {

std::optional<ArgId> ArgumentStore::find(const std::string& rule_id, const std::vector<ArgId>& subs) const {
    auto it = index_.find({rule_id, subs});
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<ArgId> ArgumentStore::find_label(const std::string& label) const {
    for (const auto& a : args_)
        if (a.label == label)
            return a.id;
    return std::nullopt;
}

std::string ArgumentStore::describe(ArgId id) const {
    const Argument& a = (*this)[id];
    std::string out;
    for (std::size_t i = 0; i < a.subs.size(); ++i) {
        if (i)
            out += ',';
        out += (*this)[a.subs[i]].label;
    }
    if (!out.empty())
        out += ' ';
    out += a.strict_top() ? "-> " : "=> ";
    return out + a.conclusion.str();
}

std::string ArgumentStore::expand(ArgId id) const {
    const Argument& a = (*this)[id];
    std::string out = a.rule_id;
    if (a.subs.empty())
        return out;
    out += '(';
    for (std::size_t i = 0; i < a.subs.size(); ++i) {
        if (i)
            out += ',';
        out += expand(a.subs[i]);
    }
    return out + ')';
}

namespace {

struct Candidate {
    const Rule* rule;
    std::vector<ArgId> subs;
};

} // namespace

ArgumentStore construct_arguments(const ArgumentationSystem& as, EnumerationLimits limits) {
    as.validate();

    std::vector<const Rule*> rules;
    for (const auto& r : as.strict_rules)
        rules.push_back(&r);
    for (const auto& r : as.defeasible_rules)
        rules.push_back(&r);
    std::sort(rules.begin(), rules.end(),
              [](const Rule* x, const Rule* y) { return natural_compare(x->id, y->id) < 0; });

    ArgumentStore store;
    store.limits_ = limits;
    std::map<Formula, std::vector<ArgId>> by_conclusion;

    auto overflow = [&](std::size_t wanted) {
        if (wanted > limits.max_arguments)
            throw LimitExceeded("max_arguments", limits.max_arguments,
                                "argument enumeration exceeds max_arguments=" +
                                    std::to_string(limits.max_arguments));
    };

    for (unsigned depth = 1;; ++depth) {
        std::vector<Candidate> fresh;
        for (const Rule* r : rules) {
            if (depth == 1) {
                if (r->body.empty())
                    fresh.push_back({r, {}});
                continue;
            }
            if (r->body.empty())
                continue;

            std::vector<const std::vector<ArgId>*> slots;
            bool fillable = true;
            for (const auto& f : r->body) {
                auto it = by_conclusion.find(f);
                if (it == by_conclusion.end()) {
                    fillable = false;
                    break;
                }
                slots.push_back(&it->second);
            }
            if (!fillable)
                continue;

            // Odometer over the cartesian product of candidate sub-arguments.
            std::vector<std::size_t> pos(slots.size(), 0);
            while (true) {
                std::vector<ArgId> subs;
                unsigned deepest = 0;
                for (std::size_t i = 0; i < slots.size(); ++i) {
                    ArgId s = (*slots[i])[pos[i]];
                    subs.push_back(s);
                    deepest = std::max(deepest, store[s].depth);
                }
                if (deepest + 1 == depth) {
                    bool circular = false;
                    for (ArgId s : subs)
                        if (store[s].branch_conclusions.count(r->head)) {
                            circular = true;
                            break;
                        }
                    if (circular) {
                        ++store.pruned_circular_;
                    } else {
                        fresh.push_back({r, std::move(subs)});
                        overflow(store.args_.size() + fresh.size());
                    }
                }
                std::size_t k = 0;
                while (k < pos.size() && ++pos[k] == slots[k]->size())
                    pos[k++] = 0;
                if (k == pos.size())
                    break;
            }
        }
        if (fresh.empty())
            break;
        overflow(store.args_.size() + fresh.size());

        std::stable_sort(fresh.begin(), fresh.end(), [](const Candidate& x, const Candidate& y) {
            if (auto c = natural_compare(x.rule->id, y.rule->id); c != 0)
                return c < 0;
            return x.subs < y.subs;
        });

        for (auto& c : fresh) {
            Argument a;
            a.id = ArgId{static_cast<std::uint32_t>(store.args_.size())};
            a.label = "A" + std::to_string(store.args_.size() + 1);
            a.rule_id = c.rule->id;
            a.kind = c.rule->kind;
            a.conclusion = c.rule->head;
            a.depth = depth;
            a.subs = c.subs;
            std::set<ArgId> sub_args{a.id};
            a.branch_conclusions.insert(a.conclusion);
            for (ArgId s : c.subs) {
                const Argument& sa = store[s];
                a.def_rules.insert(sa.def_rules.begin(), sa.def_rules.end());
                sub_args.insert(sa.sub_arguments.begin(), sa.sub_arguments.end());
                a.branch_conclusions.insert(sa.branch_conclusions.begin(), sa.branch_conclusions.end());
            }
            if (a.kind == RuleKind::Defeasible)
                a.def_rules.insert(a.rule_id);
            a.sub_arguments.assign(sub_args.begin(), sub_args.end());

            store.index_.emplace(std::pair{a.rule_id, a.subs}, a.id);
            by_conclusion[a.conclusion].push_back(a.id);
            store.args_.push_back(std::move(a));
        }
    }
    return store;
}

std::vector<ArgId> undercuts(const ArgumentationSystem& as, const ArgumentStore& store, ArgId a, ArgId b) {
    std::vector<ArgId> on;
    const Formula& conc = store[a].conclusion;
    for (ArgId s : store[b].sub_arguments) {
        const Argument& sub = store[s];
        if (sub.kind != RuleKind::Defeasible)
            continue;
        if (auto name = as.name_of(sub.rule_id); name && complement(conc, *name))
            on.push_back(s);
    }
    return on;
}

std::vector<ArgId> rebuts_unrestricted(const ArgumentStore& store, ArgId a, ArgId b) {
    std::vector<ArgId> on;
    const Formula& conc = store[a].conclusion;
    for (ArgId s : store[b].sub_arguments) {
        const Argument& sub = store[s];
        if (sub.defeasible() && complement(conc, sub.conclusion))
            on.push_back(s);
    }
    return on;
}

std::vector<AttackWitness> attack_witnesses(const ArgumentationSystem& as, const ArgumentStore& store) {
    std::map<Formula, std::vector<ArgId>> by_conclusion;
    std::vector<std::vector<ArgId>> supers(store.size());
    for (const auto& a : store.arguments()) {
        by_conclusion[a.conclusion].push_back(a.id);
        for (ArgId s : a.sub_arguments)
            supers[s.index].push_back(a.id);
    }
    auto complements_of = [&](const Formula& f) {
        std::vector<ArgId> out;
        auto add = [&](const Formula& g) {
            if (auto it = by_conclusion.find(g); it != by_conclusion.end())
                out.insert(out.end(), it->second.begin(), it->second.end());
        };
        add(f.negated());
        if (!f.is_atom())
            add(f.inner());
        return out;
    };

    std::vector<AttackWitness> out;
    for (const auto& on : store.arguments()) {
        if (on.kind == RuleKind::Defeasible) {
            if (auto name = as.name_of(on.rule_id))
                for (ArgId attacker : complements_of(*name))
                    for (ArgId target : supers[on.id.index])
                        out.push_back({attacker, target, AttackKind::Undercut, on.id});
        }
        if (on.defeasible()) {
            for (ArgId attacker : complements_of(on.conclusion))
                for (ArgId target : supers[on.id.index])
                    out.push_back({attacker, target, AttackKind::Rebut, on.id});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

AF build_aspic_minus_af(const ArgumentationSystem& as, const ArgumentStore& store) {
    AF af;
    for (const auto& a : store.arguments())
        af.nodes.insert(store.node(a.id));
    for (const auto& w : attack_witnesses(as, store))
        af.attacks.insert({store.node(w.attacker), store.node(w.target)});
    return af;
}

AF build_aspic_minus_af(const ArgumentationSystem& as, EnumerationLimits limits) {
    return build_aspic_minus_af(as, construct_arguments(as, limits));
}

JSBAF build_da_jsbaf(const ArgumentationSystem& as, const ArgumentStore& store) {
    AF af = build_aspic_minus_af(as, store);
    JSBAF j;
    j.nodes = std::move(af.nodes);
    j.attacks = std::move(af.attacks);
    for (const auto& a : store.arguments()) {
        if (!a.strict_top())
            continue;
        NodeSet sources;
        for (ArgId s : a.subs)
            sources.insert(store.node(s));
        j.supports.insert({std::move(sources), store.node(a.id)});
    }
    return j;
}

JSBAF build_da_jsbaf(const ArgumentationSystem& as, EnumerationLimits limits) {
    return build_da_jsbaf(as, construct_arguments(as, limits));
}

} // namespace aspic
