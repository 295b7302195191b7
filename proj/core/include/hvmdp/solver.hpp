#pragma once

#include "hvmdp/discounted_mdp.hpp"

#include <optional>
#include <span>

namespace hvmdp {

enum class SolveMethod { ValueIteration, HowardPI, DantzigPI };

const char* to_string(SolveMethod m);

struct SolveReport {
    /// Discounted values over every state of the model, absorbing state included.
    Vector values;
    StationaryPolicy policy;
    ActionSets optimal_actions;
    /// Value iteration: Bellman sweeps. Policy iteration: policy evaluations.
    std::size_t iterations = 0;
    /// Policy iteration only: number of state-action switches performed.
    std::size_t switches = 0;
    /// sup-norm of T v - v at the returned values.
    double bellman_residual = 0.0;
    SolveMethod method = SolveMethod::HowardPI;
    double seconds = 0.0;
};

struct SolverOptions {
    /// Value iteration: target sup-norm distance to the fixed point.
    double tolerance = 1e-10;
    std::size_t max_iterations = 1'000'000;
    /// Membership tolerance for the reported optimal-action sets.
    double action_tolerance = 1e-9;
    /// Value iteration starting vector; zero when empty.
    Vector initial_values;
};

/// Solves (I - beta P_phi) v = c_phi. For beta = 0 returns c_phi.
Vector policy_evaluate(const DiscountedMdp& dmdp, const StationaryPolicy& phi);

/// Q-value c(x,a) + beta * sum_y p(y|x,a) v(y).
double backup(const DiscountedMdp& dmdp, StateIndex x, ActionIndex a, std::span<const double> v);

/// T v(x) = min_a backup(x, a, v).
Vector bellman_operator(const DiscountedMdp& dmdp, std::span<const double> v);

/// Value iteration from options.initial_values (default 0). Stops when the
/// increment is at most tol (1 - beta) / (2 beta), so the returned values are
/// within tol of the fixed point. Throws SolutionError when max_iterations
/// is exhausted.
SolveReport value_iteration(const DiscountedMdp& dmdp, const SolverOptions& options = {});

/// Howard policy iteration (block pivoting): every state switches to its
/// greedy action each round; ties go to the incumbent, then the lowest index.
SolveReport howard_pi(const DiscountedMdp& dmdp, std::optional<StationaryPolicy> initial = std::nullopt,
                      const SolverOptions& options = {});

/// Simple policy iteration with Dantzig's rule: one switch per round at the
/// state-action pair of most negative reduced cost (ties: lowest state, then
/// lowest action).
SolveReport dantzig_pi(const DiscountedMdp& dmdp, std::optional<StationaryPolicy> initial = std::nullopt,
                       const SolverOptions& options = {});

SolveReport solve(const DiscountedMdp& dmdp, SolveMethod method, const SolverOptions& options = {});

/// A*_beta(x): actions with |v(x) - backup(x, a, v)| <= tol. Throws
/// SolutionError if a state has no such action.
ActionSets optimal_actions(const DiscountedMdp& dmdp, std::span<const double> v, double tol);

/// Discounted state-action visitation of a stationary policy: the unique z
/// supported on (x, phi(x)) with sum_a z(x,a) - beta sum_{y,a} p(x|y,a) z(y,a) = 1.
struct OccupationMeasure {
    /// z[x][a], zero off the policy.
    std::vector<Vector> z;

    double objective(const DiscountedMdp& dmdp) const;
    /// Largest violation of the flow constraints.
    double max_constraint_violation(const DiscountedMdp& dmdp) const;
};

OccupationMeasure occupation_measure(const DiscountedMdp& dmdp, const StationaryPolicy& phi);

} // namespace hvmdp
