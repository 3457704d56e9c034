#pragma once

#include "aspic/frameworks.hpp"

#include <map>
#include <string>
#include <string_view>

namespace aspic {

/// GraphViz digraphs. Attacks are solid arrows; supports and joint attacks
/// with several sources go through a point-shaped junction (supports drawn
/// with doubled lines); meta-arguments are dashed boxes.
std::string emit_dot(const AF& af);
std::string emit_dot(const HigherLevelAF& h);
std::string emit_dot(const JSBAF& j);

/// Lowercase alphanumeric APX identifiers for every node, unique within `nodes`.
std::map<NodeId, std::string> apx_names(const NodeSet& nodes);

/// ASPARTIX format: `arg(x).` per node, `att(x,y).` per attack, then a `%`
/// comment line mapping each renamed id back to its original form.
std::string emit_apx(const AF& af);

/// Reads `arg(...)./att(...).` facts; `%` starts a comment. Throws ParseError.
AF parse_apx(std::string_view text);

} // namespace aspic
