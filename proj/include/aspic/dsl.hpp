#pragma once

#include "aspic/logic.hpp"

#include <string>
#include <string_view>

namespace aspic {

/// Input text plus where it came from ("-" for stdin).
struct SourceDocument {
    std::string text;
    std::string provenance;
};

/// Reads a file, or stdin when `path` is "-". Throws Error if unreadable.
SourceDocument read_source(const std::string& path);

/// Parses the rule language:
///
///     # comment
///     atoms a b c
///     strict r1: a, ~b -> c
///     strict r2: -> a
///     defeasible d1: c => ~~d
///     name d1 = x
///
/// Throws ParseError for malformed lines and ValidationError for duplicate
/// ids or rules, names on strict or unknown rules, and atoms missing from an
/// `atoms` declaration. Both carry 1-based line/column positions.
ArgumentationSystem parse_system(const SourceDocument& doc);
ArgumentationSystem parse_system(std::string_view text);

/// Renders a system in the rule language; parse_system(print_system(as)) == as.
std::string print_system(const ArgumentationSystem& as);

} // namespace aspic
