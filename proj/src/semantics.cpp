#include "aspic/semantics.hpp"

#include "aspic/errors.hpp"

#include <algorithm>
#include <map>

namespace aspic {

std::string_view to_string(Semantics s) {
    switch (s) {
    case Semantics::Grounded:
        return "grounded";
    case Semantics::Complete:
        return "complete";
    case Semantics::Stable:
        return "stable";
    case Semantics::Preferred:
        return "preferred";
    }
    return "?";
}

std::optional<Semantics> parse_semantics(std::string_view name) {
    for (Semantics s : all_semantics)
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

namespace {

struct IndexedAF {
    std::vector<NodeId> nodes;
    std::vector<std::vector<int>> attackers;
    std::vector<std::vector<int>> attacked;

    explicit IndexedAF(const AF& af) : nodes(af.nodes.begin(), af.nodes.end()) {
        std::map<NodeId, int> index;
        for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
            index.emplace(nodes[i], i);
        attackers.resize(nodes.size());
        attacked.resize(nodes.size());
        for (const auto& [a, b] : af.attacks) {
            int x = index.at(a), y = index.at(b);
            attackers[y].push_back(x);
            attacked[x].push_back(y);
        }
    }

    int size() const { return static_cast<int>(nodes.size()); }

    Extension to_extension(const std::vector<bool>& in) const {
        Extension e;
        for (int i = 0; i < size(); ++i)
            if (in[i])
                e.insert(nodes[i]);
        return e;
    }
};

enum class Label : unsigned char { Unassigned, In, Out, Undec };

// Depth-first search over three-valued labellings. A complete labelling
// satisfies: In iff every attacker is Out; Out iff some attacker is In;
// Undec otherwise. With `allow_undec` false only stable labellings remain.
class LabellingSearch {
public:
    LabellingSearch(const IndexedAF& g, bool allow_undec) : g_(g), allow_undec_(allow_undec) {}

    std::vector<std::vector<bool>> run() {
        std::vector<Label> labels(g_.size(), Label::Unassigned);
        if (propagate(labels))
            branch(labels);
        return std::move(found_);
    }

private:
    bool propagate(std::vector<Label>& labels) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < g_.size(); ++x) {
                int in = 0, undec = 0, open = 0, last_open = -1;
                for (int y : g_.attackers[x]) {
                    switch (labels[y]) {
                    case Label::In:
                        ++in;
                        break;
                    case Label::Undec:
                        ++undec;
                        break;
                    case Label::Unassigned:
                        ++open;
                        last_open = y;
                        break;
                    case Label::Out:
                        break;
                    }
                }
                auto set = [&](int node, Label l) {
                    labels[node] = l;
                    changed = true;
                };
                switch (labels[x]) {
                case Label::Unassigned:
                    if (in > 0)
                        set(x, Label::Out);
                    else if (open == 0) {
                        if (undec == 0)
                            set(x, Label::In);
                        else if (allow_undec_)
                            set(x, Label::Undec);
                        else
                            return false;
                    }
                    break;
                case Label::In:
                    if (in > 0 || undec > 0)
                        return false;
                    for (int y : g_.attackers[x])
                        if (labels[y] == Label::Unassigned)
                            set(y, Label::Out);
                    break;
                case Label::Out:
                    if (in == 0 && open == 0)
                        return false;
                    if (in == 0 && open == 1)
                        set(last_open, Label::In);
                    break;
                case Label::Undec:
                    if (in > 0 || (undec == 0 && open == 0))
                        return false;
                    if (undec == 0 && open == 1)
                        set(last_open, Label::Undec);
                    break;
                }
                if (changed)
                    break;
            }
        }
        return true;
    }

    void branch(const std::vector<Label>& labels) {
        auto it = std::find(labels.begin(), labels.end(), Label::Unassigned);
        if (it == labels.end()) {
            std::vector<bool> in(labels.size());
            for (std::size_t i = 0; i < labels.size(); ++i)
                in[i] = labels[i] == Label::In;
            found_.push_back(std::move(in));
            return;
        }
        const auto x = static_cast<std::size_t>(it - labels.begin());
        for (Label choice : {Label::In, Label::Out, Label::Undec}) {
            if (choice == Label::Undec && !allow_undec_)
                continue;
            std::vector<Label> next = labels;
            next[x] = choice;
            if (propagate(next))
                branch(next);
        }
    }

    const IndexedAF& g_;
    bool allow_undec_;
    std::vector<std::vector<bool>> found_;
};

void check_limits(const AF& af, SearchLimits limits) {
    if (af.nodes.size() > limits.max_nodes)
        throw SearchLimitExceeded("max_nodes", limits.max_nodes,
                                  "framework has " + std::to_string(af.nodes.size()) +
                                      " nodes, search bound max_nodes=" + std::to_string(limits.max_nodes));
}

std::vector<Extension> labellings(const AF& af, bool allow_undec) {
    IndexedAF g(af);
    std::vector<Extension> out;
    for (const auto& in : LabellingSearch(g, allow_undec).run())
        out.push_back(g.to_extension(in));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool is_conflict_free(const AF& af, const NodeSet& s) {
    for (const auto& [a, b] : af.attacks)
        if (s.count(a) && s.count(b))
            return false;
    return true;
}

bool defends(const AF& af, const NodeSet& s, const NodeId& a) {
    for (const auto& [attacker, target] : af.attacks) {
        if (target != a)
            continue;
        bool countered = false;
        for (const auto& [c, d] : af.attacks)
            if (d == attacker && s.count(c)) {
                countered = true;
                break;
            }
        if (!countered)
            return false;
    }
    return true;
}

bool is_admissible(const AF& af, const NodeSet& s) {
    if (!is_conflict_free(af, s))
        return false;
    for (const auto& a : s)
        if (!defends(af, s, a))
            return false;
    return true;
}

Extension grounded_extension(const AF& af) {
    IndexedAF g(af);
    std::vector<Label> labels(g.size(), Label::Unassigned);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < g.size(); ++x) {
            if (labels[x] != Label::Unassigned)
                continue;
            bool all_out = true;
            for (int y : g.attackers[x])
                if (labels[y] != Label::Out) {
                    all_out = false;
                    break;
                }
            if (all_out) {
                labels[x] = Label::In;
                for (int z : g.attacked[x])
                    labels[z] = Label::Out;
                changed = true;
            }
        }
    }
    std::vector<bool> in(g.size());
    for (int i = 0; i < g.size(); ++i)
        in[i] = labels[i] == Label::In;
    return g.to_extension(in);
}

std::vector<Extension> complete_extensions(const AF& af, SearchLimits limits) {
    check_limits(af, limits);
    return labellings(af, true);
}

std::vector<Extension> stable_extensions(const AF& af, SearchLimits limits) {
    check_limits(af, limits);
    return labellings(af, false);
}

std::vector<Extension> preferred_extensions(const AF& af, SearchLimits limits) {
    std::vector<Extension> complete = complete_extensions(af, limits);
    std::vector<Extension> out;
    for (const auto& e : complete) {
        bool maximal = true;
        for (const auto& f : complete) {
            if (f.size() > e.size() && std::includes(f.begin(), f.end(), e.begin(), e.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.push_back(e);
    }
    return out;
}

std::vector<Extension> extensions(const AF& af, Semantics sigma, SearchLimits limits) {
    switch (sigma) {
    case Semantics::Grounded:
        return {grounded_extension(af)};
    case Semantics::Complete:
        return complete_extensions(af, limits);
    case Semantics::Stable:
        return stable_extensions(af, limits);
    case Semantics::Preferred:
        return preferred_extensions(af, limits);
    }
    return {};
}

std::vector<Extension> jsbaf_extensions(const JSBAF& j, Semantics sigma, FlattenMode mode, SearchLimits limits) {
    const AF flat = flatten_simplified(j, mode);
    std::vector<Extension> out;
    for (const auto& e : extensions(flat, sigma, limits))
        out.push_back(project(e, j.nodes));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DeductiveCheck is_deductive_extension(const JSBAF& j, const NodeSet& e) {
    for (const auto& s : j.supports) {
        if (e.count(s.target))
            continue;
        if (std::includes(e.begin(), e.end(), s.sources.begin(), s.sources.end()))
            return {false, s};
    }
    return {};
}

ConflictCheck is_conflict_free_jsbaf(const JSBAF& j, const NodeSet& e) {
    for (const auto& edge : j.attacks)
        if (e.count(edge.first) && e.count(edge.second))
            return {false, edge};
    return {};
}

} // namespace aspic
