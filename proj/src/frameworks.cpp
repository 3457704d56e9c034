#include "aspic/frameworks.hpp"

#include "aspic/natural_order.hpp"

#include <map>
#include <stdexcept>

namespace aspic {

NodeId NodeId::base(std::string label) {
    if (label.empty())
        throw std::invalid_argument("node label must be nonempty");
    NodeId n;
    n.kind_ = Kind::Base;
    n.label_ = std::move(label);
    return n;
}

NodeId NodeId::bar(const NodeId& of) {
    NodeId n;
    n.kind_ = Kind::Bar;
    n.children_.push_back(of);
    return n;
}

NodeId NodeId::joint(const std::set<NodeId>& members) {
    if (members.empty())
        throw std::invalid_argument("joint node needs at least one member");
    NodeId n;
    n.kind_ = Kind::Joint;
    n.children_.assign(members.begin(), members.end());
    return n;
}

std::string NodeId::str() const {
    switch (kind_) {
    case Kind::Base:
        return label_;
    case Kind::Bar:
        return "bar(" + barred().str() + ")";
    case Kind::Joint: {
        std::string out = "e(";
        for (std::size_t i = 0; i < children_.size(); ++i) {
            if (i)
                out += ',';
            out += children_[i].str();
        }
        return out + ")";
    }
    }
    return {};
}

std::strong_ordering operator<=>(const NodeId& a, const NodeId& b) {
    if (a.kind_ != b.kind_)
        return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.kind_ == NodeId::Kind::Base)
        return natural_compare(a.label_, b.label_);
    const auto n = std::min(a.children_.size(), b.children_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = a.children_[i] <=> b.children_[i]; c != 0)
            return c;
    return a.children_.size() <=> b.children_.size();
}

std::string to_string(const NodeSet& nodes) {
    std::string out = "{";
    bool first = true;
    for (const auto& n : nodes) {
        if (!first)
            out += ',';
        first = false;
        out += n.str();
    }
    return out + "}";
}

namespace {

void require_node(const NodeSet& nodes, const NodeId& n, const char* what) {
    if (!nodes.count(n))
        throw std::invalid_argument(std::string(what) + " endpoint " + n.str() + " is not a node");
}

} // namespace

void AF::validate() const {
    for (const auto& [a, b] : attacks) {
        require_node(nodes, a, "attack");
        require_node(nodes, b, "attack");
    }
}

void HigherLevelAF::validate() const {
    for (const auto& att : attacks) {
        if (att.attackers.empty())
            throw std::invalid_argument("joint attack on " + att.target.str() + " has no attackers");
        for (const auto& a : att.attackers)
            require_node(nodes, a, "joint attack");
        require_node(nodes, att.target, "joint attack");
    }
}

void JSBAF::validate() const {
    for (const auto& [a, b] : attacks) {
        require_node(nodes, a, "attack");
        require_node(nodes, b, "attack");
    }
    for (const auto& s : supports) {
        for (const auto& a : s.sources)
            require_node(nodes, a, "support");
        require_node(nodes, s.target, "support");
    }
}

HigherLevelAF flatten_one_step(const JSBAF& j) {
    HigherLevelAF h;
    h.nodes = j.nodes;
    for (const auto& [a, b] : j.attacks)
        h.attacks.insert({{a}, b});
    for (const auto& s : j.supports) {
        const NodeId bar = NodeId::bar(s.target);
        h.nodes.insert(bar);
        h.attacks.insert({{s.target}, bar});
        for (const auto& a : s.sources) {
            NodeSet attackers = s.sources;
            attackers.erase(a);
            attackers.insert(bar);
            h.attacks.insert({std::move(attackers), a});
        }
    }
    return h;
}

AF flatten_joint_attacks(const HigherLevelAF& h) {
    AF af;
    af.nodes = h.nodes;
    for (const auto& att : h.attacks) {
        if (att.attackers.size() == 1) {
            af.attacks.insert({*att.attackers.begin(), att.target});
            continue;
        }
        const NodeId e = NodeId::joint(att.attackers);
        af.nodes.insert(e);
        af.attacks.insert({e, att.target});
        for (const auto& a : att.attackers) {
            const NodeId bar = NodeId::bar(a);
            af.nodes.insert(bar);
            af.attacks.insert({a, bar});
            af.attacks.insert({bar, e});
        }
    }
    return af;
}

AF prune_inert(const AF& af) {
    AF out = af;
    bool changed = true;
    while (changed) {
        changed = false;
        NodeSet active;
        for (const auto& [a, b] : out.attacks)
            active.insert(a);
        for (auto it = out.nodes.begin(); it != out.nodes.end();) {
            if (it->is_meta() && !active.count(*it)) {
                const NodeId gone = *it;
                it = out.nodes.erase(it);
                std::erase_if(out.attacks, [&](const Edge& e) { return e.second == gone; });
                changed = true;
            } else {
                ++it;
            }
        }
    }
    return out;
}

AF flatten_simplified(const JSBAF& j, FlattenMode mode) {
    const AF two = flatten_joint_attacks(flatten_one_step(j));

    NodeSet jointly_supported;
    for (const auto& s : j.supports)
        if (s.sources.size() > 1)
            jointly_supported.insert(s.target);

    std::set<Edge> edges = two.attacks;
    NodeSet removed;

    // bar(bar(b)) is attacked only by bar(b), which is attacked only by b, so
    // it carries the same label as b in every complete labelling.
    for (const auto& b : jointly_supported) {
        const NodeId bb = NodeId::bar(NodeId::bar(b));
        if (!two.nodes.count(bb))
            continue;
        std::set<Edge> next;
        for (const auto& [x, y] : edges) {
            if (x == bb)
                next.insert({b, y});
            else if (y != bb)
                next.insert({x, y});
        }
        edges = std::move(next);
        removed.insert(bb);
    }
    // bar(b) goes with it unless it still attacks something: a supporter of a
    // singleton support of b, or a joint node in which b is a co-supporter.
    for (const auto& b : jointly_supported) {
        const NodeId bar = NodeId::bar(b);
        bool attacks_something = false;
        for (const auto& [x, y] : edges)
            if (x == bar) {
                attacks_something = true;
                break;
            }
        if (!attacks_something) {
            removed.insert(bar);
            std::erase_if(edges, [&](const Edge& e) { return e.second == bar; });
        }
    }

    // Joint nodes whose member bar(b) was removed are relabelled over b,
    // unless that would merge two distinct nodes.
    std::map<NodeId, NodeId> rename;
    std::map<NodeId, int> target_uses;
    for (const auto& n : two.nodes) {
        if (n.kind() != NodeId::Kind::Joint)
            continue;
        NodeSet members;
        bool touched = false;
        for (const auto& m : n.members()) {
            if (removed.count(m)) {
                members.insert(m.barred());
                touched = true;
            } else {
                members.insert(m);
            }
        }
        if (touched) {
            NodeId renamed = NodeId::joint(members);
            rename.emplace(n, renamed);
            ++target_uses[renamed];
        }
    }
    std::erase_if(rename, [&](const auto& kv) {
        return target_uses[kv.second] > 1 || two.nodes.count(kv.second) > 0;
    });
    auto apply = [&](const NodeId& n) {
        auto it = rename.find(n);
        return it == rename.end() ? n : it->second;
    };

    AF out;
    for (const auto& n : two.nodes)
        if (!removed.count(n))
            out.nodes.insert(apply(n));
    for (const auto& [x, y] : edges)
        out.attacks.insert({apply(x), apply(y)});

    if (mode == FlattenMode::PruneInert)
        return prune_inert(out);
    return out;
}

NodeSet project(const NodeSet& extension, const NodeSet& original_nodes) {
    NodeSet out;
    for (const auto& n : extension)
        if (original_nodes.count(n))
            out.insert(n);
    return out;
}

} // namespace aspic
