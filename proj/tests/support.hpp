#pragma once

#include "aspic/dsl.hpp"
#include "aspic/frameworks.hpp"

#include <array>
#include <initializer_list>
#include <random>
#include <string>

namespace aspic::test {

inline NodeId n(const std::string& label) { return NodeId::base(label); }
inline NodeId bar(const NodeId& x) { return NodeId::bar(x); }
inline NodeId bar(const std::string& label) { return NodeId::bar(n(label)); }
inline NodeId e(std::initializer_list<NodeId> members) { return NodeId::joint(NodeSet(members)); }

inline NodeSet labels(std::initializer_list<const char*> ls) {
    NodeSet out;
    for (const char* l : ls)
        out.insert(n(l));
    return out;
}

inline FormulaSet formulas(std::initializer_list<const char*> fs) {
    FormulaSet out;
    for (std::string s : fs) {
        unsigned negs = 0;
        while (!s.empty() && s.front() == '~') {
            s.erase(s.begin());
            ++negs;
        }
        Formula f = Formula::atom(s);
        for (unsigned k = 0; k < negs; ++k)
            f = f.negated();
        out.insert(f);
    }
    return out;
}

inline AF make_af(std::initializer_list<const char*> nodes, std::initializer_list<std::pair<const char*, const char*>> edges) {
    AF af;
    af.nodes = labels(nodes);
    for (auto [a, b] : edges)
        af.attacks.insert({n(a), n(b)});
    return af;
}

inline std::string data_path(const std::string& file) { return std::string(ASPIC_DATA_DIR) + "/" + file; }

inline ArgumentationSystem tandem() { return parse_system(read_source(data_path("tandem.asp"))); }

/// a and b jointly support c, d attacks c.
inline JSBAF j1() {
    JSBAF j;
    j.nodes = labels({"a", "b", "c", "d"});
    j.attacks = {{n("d"), n("c")}};
    j.supports = {{labels({"a", "b"}), n("c")}};
    return j;
}

/// a supports b.
inline JSBAF j2() {
    JSBAF j;
    j.nodes = labels({"a", "b"});
    j.supports = {{labels({"a"}), n("b")}};
    return j;
}

/// a, b and c jointly support d.
inline JSBAF j3() {
    JSBAF j;
    j.nodes = labels({"a", "b", "c", "d"});
    j.supports = {{labels({"a", "b", "c"}), n("d")}};
    return j;
}

inline AF random_af(std::mt19937_64& rng, std::size_t nodes, double density) {
    AF af;
    for (std::size_t i = 0; i < nodes; ++i)
        af.nodes.insert(n("a" + std::to_string(i)));
    std::bernoulli_distribution edge(density);
    for (std::size_t i = 0; i < nodes; ++i)
        for (std::size_t k = 0; k < nodes; ++k)
            if (edge(rng))
                af.attacks.insert({n("a" + std::to_string(i)), n("a" + std::to_string(k))});
    return af;
}

/// The AF on `nodes` nodes whose attack relation is bit-encoded in `code` (row-major).
inline AF af_from_code(std::size_t nodes, std::uint64_t code) {
    AF af;
    for (std::size_t i = 0; i < nodes; ++i)
        af.nodes.insert(n("a" + std::to_string(i)));
    for (std::size_t i = 0; i < nodes; ++i)
        for (std::size_t k = 0; k < nodes; ++k)
            if (code >> (i * nodes + k) & 1)
                af.attacks.insert({n("a" + std::to_string(i)), n("a" + std::to_string(k))});
    return af;
}

/// Random JSBAF. Support sources are nonempty unless `allow_empty_sources`,
/// in which case empty sources are only given to unattacked targets (the
/// shape they take in frameworks built from argumentation systems).
inline JSBAF random_jsbaf(std::mt19937_64& rng, std::size_t nodes, std::size_t max_supports, double attack_density,
                          std::size_t max_sources = 3, bool allow_empty_sources = true) {
    AF base = random_af(rng, nodes, attack_density);
    JSBAF j;
    j.nodes = base.nodes;
    j.attacks = base.attacks;
    if (nodes == 0)
        return j;
    std::vector<NodeId> all(j.nodes.begin(), j.nodes.end());
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<std::size_t> support_count(0, max_supports);
    std::uniform_int_distribution<std::size_t> source_count(allow_empty_sources ? 0 : 1, max_sources);
    const std::size_t count = support_count(rng);
    for (std::size_t s = 0; s < count; ++s) {
        Support sup;
        sup.target = all[pick(rng)];
        const std::size_t want = std::min(source_count(rng), all.size());
        for (std::size_t tries = 0; sup.sources.size() < want && tries < 20; ++tries)
            sup.sources.insert(all[pick(rng)]);
        if (sup.sources.empty()) {
            bool attacked = false;
            for (const auto& [x, y] : j.attacks)
                attacked |= y == sup.target;
            if (attacked)
                continue;
        }
        j.supports.insert(sup);
    }
    return j;
}

/// The flattened tandem framework written out by hand: the twelve
/// mutual attacks, A4..A6 -> their bars, and for each joint support
/// {x,y} => t the e-nodes e(y,t) -> x and e(x,t) -> y, each attacked by
/// t and by the bar of its other member.
inline AF tandem_flat_by_hand() {
    AF af;
    for (int i = 1; i <= 9; ++i)
        af.nodes.insert(n("A" + std::to_string(i)));
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
             {"A7", "A8"}, {"A8", "A9"}, {"A9", "A7"}, {"A7", "A4"}, {"A8", "A5"}, {"A9", "A6"}}) {
        af.attacks.insert({n(x), n(y)});
        af.attacks.insert({n(y), n(x)});
    }
    for (const char* s : {"A4", "A5", "A6"}) {
        af.nodes.insert(bar(s));
        af.attacks.insert({n(s), bar(s)});
    }
    const std::vector<std::array<const char*, 3>> supports{{"A5", "A6", "A7"}, {"A6", "A4", "A8"}, {"A4", "A5", "A9"}};
    for (const auto& [x, y, t] : supports) {
        const NodeId ey = e({n(y), n(t)}), ex = e({n(x), n(t)});
        af.nodes.insert(ey);
        af.nodes.insert(ex);
        af.attacks.insert({ey, n(x)});
        af.attacks.insert({ex, n(y)});
        af.attacks.insert({n(t), ey});
        af.attacks.insert({n(t), ex});
        af.attacks.insert({bar(y), ey});
        af.attacks.insert({bar(x), ex});
    }
    return af;
}

/// The three preferred extensions E1', E2', E3' of the flattened tandem framework.
inline std::vector<NodeSet> tandem_preferred_flat() {
    auto ext = [](std::initializer_list<const char*> args, const char* barred, std::pair<const char*, const char*> e1,
                  std::pair<const char*, const char*> e2) {
        NodeSet s = labels(args);
        s.insert(bar(barred));
        s.insert(e({n(e1.first), n(e1.second)}));
        s.insert(e({n(e2.first), n(e2.second)}));
        return s;
    };
    return {ext({"A1", "A2", "A3", "A9", "A4", "A5"}, "A6", {"A5", "A7"}, {"A4", "A8"}),
            ext({"A1", "A2", "A3", "A8", "A4", "A6"}, "A5", {"A6", "A7"}, {"A4", "A9"}),
            ext({"A1", "A2", "A3", "A7", "A6", "A5"}, "A4", {"A6", "A8"}, {"A5", "A9"})};
}

inline std::vector<NodeSet> tandem_preferred_projected() {
    return {labels({"A1", "A2", "A3", "A9", "A4", "A5"}), labels({"A1", "A2", "A3", "A8", "A4", "A6"}),
            labels({"A1", "A2", "A3", "A7", "A6", "A5"})};
}

} // namespace aspic::test
