#pragma once

#include "hvmdp/discounted_mdp.hpp"
#include "hvmdp/transience.hpp"

#include <optional>
#include <span>

namespace hvmdp {

/// Tolerance for clamping negative round-off in transformed probabilities.
/// Entries in [-kClampTolerance, 0) become zero; anything lower is an error.
inline constexpr double kClampTolerance = 1e-12;

/// Smallest admissible discount factor (K - 1) / K for a bounding constant K.
double min_admissible_beta(double K);

/// Discounted model of a transient rate MDP: costs c(x,a)/mu(x),
/// probabilities q(y|x,a) mu(y) / (beta mu(x)) and the remaining mass sent to
/// an added absorbing state (index n).
///
/// beta defaults to (K - 1) / K, which is 0 for K = 1; with beta = 0 every
/// row goes straight to the absorbing state.
DiscountedMdp build_hv(const RateMdp& mdp, const TransienceCertificate& cert,
                       std::optional<double> beta = std::nullopt);

/// v(x) = mu(x) * dv(x) for the original states. dv carries one extra
/// trailing entry for the absorbing state, which must be zero.
Vector lift_total_value(std::span<const double> dv, std::span<const double> mu);

/// One application of v -> min_a [c(x,a) + sum_y q(y|x,a) v(y)].
Vector total_cost_operator(const RateMdp& mdp, std::span<const double> v);

/// A*(x): actions attaining the total-cost optimality equation within tol.
/// Throws SolutionError if some state ends up with no action.
ActionSets total_optimal_actions(const RateMdp& mdp, std::span<const double> v, double tol);

/// Diagonal similarity: c'(x,a) = b(x) c(x,a), q'(y|x,a) = b(x) q(y|x,a) / b(y).
RateMdp similarity_transform(const RateMdp& mdp, std::span<const double> b);

} // namespace hvmdp
