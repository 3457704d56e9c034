#pragma once

#include "aspic/semantics.hpp"

#include <vector>

namespace aspic::brute_force {

inline constexpr std::size_t max_nodes = 20;

/// Extensions by testing every subset of the nodes against the textbook
/// definitions. Independent of the labelling search; meant as a cross-check
/// for small frameworks. Throws SearchLimitExceeded above `max_nodes`.
std::vector<Extension> extensions(const AF& af, Semantics sigma);

} // namespace aspic::brute_force
