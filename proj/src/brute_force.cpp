#include "aspic/brute_force.hpp"

#include "aspic/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace aspic::brute_force {

namespace {

using Mask = std::uint32_t;

bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

} // namespace

std::vector<Extension> extensions(const AF& af, Semantics sigma) {
    const std::size_t n = af.nodes.size();
    if (n > max_nodes)
        throw SearchLimitExceeded("oracle_nodes", max_nodes,
                                  "brute-force oracle handles at most " + std::to_string(max_nodes) + " nodes");
    std::vector<NodeId> nodes(af.nodes.begin(), af.nodes.end());
    auto pos = [&](const NodeId& x) {
        return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), x) - nodes.begin());
    };
    // attackers_of[i]: bitmask of nodes attacking i
    std::vector<Mask> attackers_of(n, 0);
    for (const auto& [a, b] : af.attacks)
        attackers_of[pos(b)] |= Mask{1} << pos(a);

    const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    auto attacked_by = [&](Mask s) {
        Mask out = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (attackers_of[i] & s)
                out |= Mask{1} << i;
        return out;
    };
    auto defended_by = [&](Mask s) {
        const Mask hit = attacked_by(s);
        Mask out = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (subset_of(attackers_of[i], hit))
                out |= Mask{1} << i;
        return out;
    };

    std::vector<Mask> complete, stable;
    for (std::uint64_t raw = 0; raw <= full; ++raw) {
        const Mask s = static_cast<Mask>(raw);
        const Mask hit = attacked_by(s);
        if (hit & s)
            continue; // not conflict-free
        const Mask defended = defended_by(s);
        if (!subset_of(s, defended))
            continue; // not admissible
        if (defended == s)
            complete.push_back(s);
        if ((s | hit) == full)
            stable.push_back(s);
    }

    std::vector<Mask> chosen;
    switch (sigma) {
    case Semantics::Complete:
        chosen = complete;
        break;
    case Semantics::Stable:
        chosen = stable;
        break;
    case Semantics::Grounded:
        for (Mask c : complete)
            if (std::all_of(complete.begin(), complete.end(), [&](Mask d) { return subset_of(c, d); }))
                chosen.push_back(c);
        break;
    case Semantics::Preferred:
        for (Mask c : complete)
            if (std::none_of(complete.begin(), complete.end(), [&](Mask d) { return d != c && subset_of(c, d); }))
                chosen.push_back(c);
        break;
    }

    std::vector<Extension> out;
    for (Mask m : chosen) {
        Extension e;
        for (std::size_t i = 0; i < n; ++i)
            if (m & (Mask{1} << i))
                e.insert(nodes[i]);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace aspic::brute_force
