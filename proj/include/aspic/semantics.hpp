#pragma once

#include "aspic/frameworks.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aspic {

enum class Semantics { Grounded, Complete, Stable, Preferred };

inline constexpr Semantics all_semantics[] = {Semantics::Grounded, Semantics::Complete, Semantics::Stable,
                                              Semantics::Preferred};

std::string_view to_string(Semantics s);
std::optional<Semantics> parse_semantics(std::string_view name);

using Extension = NodeSet;

/// Bound on framework size for the exponential semantics (complete, stable, preferred).
struct SearchLimits {
    std::size_t max_nodes = 24;
};

bool is_conflict_free(const AF& af, const NodeSet& s);
/// Every attacker of `a` is attacked by some member of `s`.
bool defends(const AF& af, const NodeSet& s, const NodeId& a);
bool is_admissible(const AF& af, const NodeSet& s);

/// Least fixpoint of the characteristic function.
Extension grounded_extension(const AF& af);

// The enumerators below return extensions in canonical (sorted) order and
// throw SearchLimitExceeded when the framework has more than
// `limits.max_nodes` nodes.
std::vector<Extension> complete_extensions(const AF& af, SearchLimits limits = {});
std::vector<Extension> stable_extensions(const AF& af, SearchLimits limits = {});
std::vector<Extension> preferred_extensions(const AF& af, SearchLimits limits = {});

std::vector<Extension> extensions(const AF& af, Semantics sigma, SearchLimits limits = {});

/// sup(sigma): flatten with flatten_simplified, evaluate, project onto j.nodes, deduplicate.
std::vector<Extension> jsbaf_extensions(const JSBAF& j, Semantics sigma, FlattenMode mode = FlattenMode::Literal,
                                        SearchLimits limits = {});

struct DeductiveCheck {
    bool deductive = true;
    std::optional<Support> witness;
};

/// Every support whose sources lie inside `e` has its target inside `e`.
DeductiveCheck is_deductive_extension(const JSBAF& j, const NodeSet& e);

struct ConflictCheck {
    bool conflict_free = true;
    std::optional<Edge> witness;
};

ConflictCheck is_conflict_free_jsbaf(const JSBAF& j, const NodeSet& e);

} // namespace aspic
