#pragma once

#include "hvmdp/model.hpp"

#include <string>
#include <vector>

namespace hvmdp::detail {

/// Resolves the discount factor against [lower, 1), where lower = (K-1)/K.
double resolve_beta(std::optional<double> requested, double K, const char* constant_name);

/// Clamps round-off negatives, renormalizes, and drops exact zeros from a
/// transformed probability row. Throws TransformError on a real negative.
std::vector<Transition> finalize_row(std::vector<Transition> entries, StateIndex x, ActionIndex a);

/// Base model for a transform: the n original states plus an absorbing
/// state n with one cost-free self-loop.
RateMdp absorbing_shell(const RateMdp& mdp);

} // namespace hvmdp::detail
