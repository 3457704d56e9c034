#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace aspic {

/// Identity of a node in any framework tier.
///
/// Base nodes carry a user-visible label (argument ids such as "A7").
/// Bar and Joint nodes are meta-arguments generated by flattening: Bar(x)
/// stands for "x is not accepted", Joint(X) for the joint attack of the set
/// X. Member sets of Joint nodes are kept sorted, so equal sets give equal ids.
class NodeId {
public:
    enum class Kind { Base, Bar, Joint };

    NodeId() = default;

    static NodeId base(std::string label);
    static NodeId bar(const NodeId& of);
    static NodeId joint(const std::set<NodeId>& members);

    Kind kind() const { return kind_; }
    bool is_base() const { return kind_ == Kind::Base; }
    bool is_meta() const { return kind_ != Kind::Base; }

    /// Base label. Only meaningful for Base nodes.
    const std::string& label() const { return label_; }
    /// The node a Bar refers to.
    const NodeId& barred() const { return children_.front(); }
    /// Members of a Joint node, in canonical order.
    const std::vector<NodeId>& members() const { return children_; }

    /// "A1", "bar(A1)", "e(A5,bar(A7))".
    std::string str() const;

    friend bool operator==(const NodeId&, const NodeId&) = default;
    /// Canonical order: Base by natural label order, then Bar, then Joint by member list.
    friend std::strong_ordering operator<=>(const NodeId& a, const NodeId& b);

private:
    Kind kind_ = Kind::Base;
    std::string label_;
    std::vector<NodeId> children_;
};

using NodeSet = std::set<NodeId>;
using Edge = std::pair<NodeId, NodeId>;

std::string to_string(const NodeSet& nodes);

/// Abstract argumentation framework (Ar, ->).
struct AF {
    NodeSet nodes;
    std::set<Edge> attacks;

    /// Throws std::invalid_argument when an edge endpoint is not a node.
    void validate() const;

    friend bool operator==(const AF&, const AF&) = default;
};

struct JointAttack {
    NodeSet attackers;
    NodeId target;

    friend bool operator==(const JointAttack&, const JointAttack&) = default;
    friend auto operator<=>(const JointAttack&, const JointAttack&) = default;
};

/// Framework whose attacks originate from nonempty sets of nodes.
struct HigherLevelAF {
    NodeSet nodes;
    std::set<JointAttack> attacks;

    void validate() const;
    friend bool operator==(const HigherLevelAF&, const HigherLevelAF&) = default;
};

struct Support {
    NodeSet sources;
    NodeId target;

    friend bool operator==(const Support&, const Support&) = default;
    friend auto operator<=>(const Support&, const Support&) = default;
};

/// Joint Support Bipolar Argumentation Framework (Ar, ->, =>).
/// Support sources may be empty.
struct JSBAF {
    NodeSet nodes;
    std::set<Edge> attacks;
    std::set<Support> supports;

    void validate() const;
    friend bool operator==(const JSBAF&, const JSBAF&) = default;
};

/// Treatment of meta-arguments that attack nothing (e.g. bars of empty-set supports).
enum class FlattenMode {
    Literal,    ///< keep every meta-argument the construction creates
    PruneInert, ///< drop meta-arguments without outgoing attacks
};

/// Supports become joint attacks through one Bar node per supported argument.
HigherLevelAF flatten_one_step(const JSBAF& j);

/// Joint attacks with more than one attacker become Joint/Bar gadgets.
AF flatten_joint_attacks(const HigherLevelAF& h);

/// flatten_joint_attacks(flatten_one_step(j)) with the redundant
/// b -> bar(b) -> bar(bar(b)) chains of jointly supported arguments collapsed.
AF flatten_simplified(const JSBAF& j, FlattenMode mode = FlattenMode::Literal);

/// Iteratively removes meta-arguments that have no outgoing attacks.
AF prune_inert(const AF& af);

/// Intersection of an extension with the original (pre-flattening) nodes.
NodeSet project(const NodeSet& extension, const NodeSet& original_nodes);

} // namespace aspic
