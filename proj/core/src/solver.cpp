#include "hvmdp/solver.hpp"

#include "hvmdp/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hvmdp {

namespace {

// A switch must improve the incumbent's Q-value by more than this
// (relative to max(1, |v(x)|)) to count.
constexpr double kImprovementEps = 1e-12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

StationaryPolicy initial_policy(const DiscountedMdp& dmdp, std::optional<StationaryPolicy> initial) {
    if (!initial)
        return StationaryPolicy{std::vector<ActionIndex>(dmdp.num_states(), 0)};
    auto phi = extend_policy(dmdp, *initial);
    require_valid_policy(dmdp.base(), phi);
    return phi;
}

StationaryPolicy greedy_policy(const DiscountedMdp& dmdp, std::span<const double> v) {
    StationaryPolicy phi{std::vector<ActionIndex>(dmdp.num_states(), 0)};
    for (StateIndex x = 0; x < dmdp.num_states(); ++x) {
        double best = backup(dmdp, x, 0, v);
        for (ActionIndex a = 1; a < dmdp.base().actions[x].size(); ++a) {
            const double q = backup(dmdp, x, a, v);
            if (q < best) {
                best = q;
                phi.choice[x] = a;
            }
        }
    }
    return phi;
}

void finish_report(const DiscountedMdp& dmdp, SolveReport& report, double action_tol) {
    const Vector tv = bellman_operator(dmdp, report.values);
    report.bellman_residual = max_abs_diff(tv, report.values);
    report.optimal_actions =
        optimal_actions(dmdp, report.values, std::max(action_tol, 2.0 * report.bellman_residual));
}

} // namespace

const char* to_string(SolveMethod m) {
    switch (m) {
    case SolveMethod::ValueIteration:
        return "vi";
    case SolveMethod::HowardPI:
        return "howard";
    case SolveMethod::DantzigPI:
        return "dantzig";
    }
    return "unknown";
}

Vector policy_evaluate(const DiscountedMdp& dmdp, const StationaryPolicy& policy) {
    const auto phi = extend_policy(dmdp, policy);
    const auto pm = policy_matrices(dmdp.base(), phi);
    const double beta = dmdp.beta();
    if (beta == 0.0)
        return pm.c;
    const std::size_t n = dmdp.num_states();
    Matrix a = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) -= beta * pm.q(r, c);
    auto lu = LuFactorization::factor(std::move(a));
    if (!lu)
        throw std::logic_error("I - beta P is singular for a stochastic P and beta < 1");
    return lu->solve(pm.c);
}

double backup(const DiscountedMdp& dmdp, StateIndex x, ActionIndex a, std::span<const double> v) {
    const auto& act = dmdp.base().actions[x][a];
    double expect = 0.0;
    for (const auto& t : act.transitions)
        expect += t.rate * v[t.to];
    return act.cost + dmdp.beta() * expect;
}

Vector bellman_operator(const DiscountedMdp& dmdp, std::span<const double> v) {
    Vector out(dmdp.num_states());
    for (StateIndex x = 0; x < dmdp.num_states(); ++x) {
        double best = std::numeric_limits<double>::infinity();
        for (ActionIndex a = 0; a < dmdp.base().actions[x].size(); ++a)
            best = std::min(best, backup(dmdp, x, a, v));
        out[x] = best;
    }
    return out;
}

SolveReport value_iteration(const DiscountedMdp& dmdp, const SolverOptions& options) {
    const auto start = Clock::now();
    const double beta = dmdp.beta();
    const std::size_t n = dmdp.num_states();

    Vector v = options.initial_values.empty() ? Vector(n, 0.0) : options.initial_values;
    if (v.size() != n)
        throw SolutionError("initial values have the wrong length");

    const double threshold = beta > 0.0 ? options.tolerance * (1.0 - beta) / (2.0 * beta)
                                        : std::numeric_limits<double>::infinity();
    double previous = std::numeric_limits<double>::infinity();
    SolveReport report;
    report.method = SolveMethod::ValueIteration;
    for (std::size_t k = 1;; ++k) {
        if (k > options.max_iterations)
            throw SolutionError("value iteration exceeded " + std::to_string(options.max_iterations) +
                                " iterations");
        Vector next = bellman_operator(dmdp, v);
        const double increment = max_abs_diff(next, v);
        const double slack = 1e-12 * std::max(1.0, norm_inf(next));
        if (increment > beta * previous + slack)
            throw std::logic_error("Bellman operator failed to contract");
        previous = increment;
        v = std::move(next);
        if (increment <= threshold) {
            report.iterations = k;
            break;
        }
    }
    report.values = std::move(v);
    report.policy = greedy_policy(dmdp, report.values);
    finish_report(dmdp, report, std::max(options.action_tolerance, 4.0 * options.tolerance));
    report.seconds = seconds_since(start);
    return report;
}

SolveReport howard_pi(const DiscountedMdp& dmdp, std::optional<StationaryPolicy> initial,
                      const SolverOptions& options) {
    const auto start = Clock::now();
    SolveReport report;
    report.method = SolveMethod::HowardPI;
    StationaryPolicy phi = initial_policy(dmdp, std::move(initial));
    Vector previous;

    for (std::size_t iter = 1;; ++iter) {
        if (iter > options.max_iterations)
            throw SolutionError("policy iteration exceeded the iteration budget");
        Vector v = policy_evaluate(dmdp, phi);
        if (!previous.empty()) {
            for (std::size_t x = 0; x < v.size(); ++x)
                if (v[x] > previous[x] + 1e-9 * std::max(1.0, std::abs(previous[x])))
                    throw std::logic_error("policy iteration values increased at state " +
                                           std::to_string(x));
        }
        report.iterations = iter;

        bool changed = false;
        for (StateIndex x = 0; x < dmdp.num_states(); ++x) {
            const std::size_t k = dmdp.base().actions[x].size();
            Vector q(k);
            for (ActionIndex a = 0; a < k; ++a)
                q[a] = backup(dmdp, x, a, v);
            const double best = *std::min_element(q.begin(), q.end());
            const double eps = kImprovementEps * std::max(1.0, std::abs(v[x]));
            if (q[phi[x]] - best <= eps)
                continue;
            for (ActionIndex a = 0; a < k; ++a) {
                if (q[a] <= best + eps) {
                    phi.choice[x] = a;
                    break;
                }
            }
            ++report.switches;
            changed = true;
        }
        if (!changed) {
            report.values = std::move(v);
            break;
        }
        previous = std::move(v);
    }
    report.policy = phi;
    finish_report(dmdp, report, options.action_tolerance);
    report.seconds = seconds_since(start);
    return report;
}

SolveReport dantzig_pi(const DiscountedMdp& dmdp, std::optional<StationaryPolicy> initial,
                       const SolverOptions& options) {
    const auto start = Clock::now();
    SolveReport report;
    report.method = SolveMethod::DantzigPI;
    StationaryPolicy phi = initial_policy(dmdp, std::move(initial));

    for (std::size_t iter = 1;; ++iter) {
        if (iter > options.max_iterations)
            throw SolutionError("policy iteration exceeded the iteration budget");
        Vector v = policy_evaluate(dmdp, phi);
        report.iterations = iter;

        double most_negative = 0.0;
        StateIndex pivot_state = 0;
        ActionIndex pivot_action = 0;
        for (StateIndex x = 0; x < dmdp.num_states(); ++x) {
            for (ActionIndex a = 0; a < dmdp.base().actions[x].size(); ++a) {
                const double reduced = backup(dmdp, x, a, v) - v[x];
                if (reduced < most_negative) {
                    most_negative = reduced;
                    pivot_state = x;
                    pivot_action = a;
                }
            }
        }
        const double eps = kImprovementEps * std::max(1.0, std::abs(v[pivot_state]));
        if (most_negative >= -eps) {
            report.values = std::move(v);
            break;
        }
        phi.choice[pivot_state] = pivot_action;
        ++report.switches;
    }
    report.policy = phi;
    finish_report(dmdp, report, options.action_tolerance);
    report.seconds = seconds_since(start);
    return report;
}

SolveReport solve(const DiscountedMdp& dmdp, SolveMethod method, const SolverOptions& options) {
    switch (method) {
    case SolveMethod::ValueIteration:
        return value_iteration(dmdp, options);
    case SolveMethod::HowardPI:
        return howard_pi(dmdp, std::nullopt, options);
    case SolveMethod::DantzigPI:
        return dantzig_pi(dmdp, std::nullopt, options);
    }
    throw std::invalid_argument("unknown solve method");
}

ActionSets optimal_actions(const DiscountedMdp& dmdp, std::span<const double> v, double tol) {
    if (v.size() != dmdp.num_states())
        throw SolutionError("value vector has the wrong length");
    ActionSets sets(dmdp.num_states());
    for (StateIndex x = 0; x < dmdp.num_states(); ++x) {
        for (ActionIndex a = 0; a < dmdp.base().actions[x].size(); ++a)
            if (std::abs(v[x] - backup(dmdp, x, a, v)) <= tol)
                sets[x].push_back(a);
        if (sets[x].empty())
            throw SolutionError("no action attains the optimality equation at state " +
                                std::to_string(x));
    }
    return sets;
}

OccupationMeasure occupation_measure(const DiscountedMdp& dmdp, const StationaryPolicy& policy) {
    const auto phi = extend_policy(dmdp, policy);
    const auto pm = policy_matrices(dmdp.base(), phi);
    const std::size_t n = dmdp.num_states();
    Matrix a = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) -= dmdp.beta() * pm.q(r, c);
    auto lu = LuFactorization::factor(std::move(a));
    if (!lu)
        throw std::logic_error("I - beta P is singular for a stochastic P and beta < 1");
    const Vector zphi = lu->solve_transposed(Vector(n, 1.0));

    OccupationMeasure om;
    om.z.resize(n);
    for (StateIndex x = 0; x < n; ++x) {
        om.z[x].assign(dmdp.base().actions[x].size(), 0.0);
        om.z[x][phi[x]] = zphi[x];
    }
    return om;
}

double OccupationMeasure::objective(const DiscountedMdp& dmdp) const {
    double s = 0.0;
    for (StateIndex x = 0; x < z.size(); ++x)
        for (ActionIndex a = 0; a < z[x].size(); ++a)
            s += dmdp.base().actions[x][a].cost * z[x][a];
    return s;
}

double OccupationMeasure::max_constraint_violation(const DiscountedMdp& dmdp) const {
    const std::size_t n = dmdp.num_states();
    Vector lhs(n, 0.0);
    for (StateIndex y = 0; y < n; ++y) {
        for (ActionIndex a = 0; a < z[y].size(); ++a) {
            lhs[y] += z[y][a];
            for (const auto& t : dmdp.base().actions[y][a].transitions)
                lhs[t.to] -= dmdp.beta() * t.rate * z[y][a];
        }
    }
    double worst = 0.0;
    for (double v : lhs)
        worst = std::max(worst, std::abs(v - 1.0));
    return worst;
}

} // namespace hvmdp
