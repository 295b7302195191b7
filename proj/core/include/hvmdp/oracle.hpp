#pragma once

#include "hvmdp/model.hpp"

#include <cstdint>
#include <map>

namespace hvmdp {

/// Exhaustive search over stationary policies.
struct OracleResult {
    /// Pointwise optimal value. For the average criterion every entry holds w.
    Vector optimal_value;
    /// Policies attaining the optimum at every state (within 1e-10, relative
    /// to max(1, |value|)), in lexicographic order.
    std::vector<StationaryPolicy> optimal_policies;
    std::map<StationaryPolicy, Vector> per_policy_values;
};

struct OracleOptions {
    std::uint64_t policy_cap = 1'000'000;
    double optimality_tolerance = 1e-10;
};

/// v^phi = (I - Q_phi)^{-1} c_phi for every phi. Throws ModelError if a policy
/// fails the M-matrix test.
OracleResult brute_force_total(const RateMdp& mdp, const OracleOptions& options = {});

/// w^phi = pi_phi . c_phi from the stationary distribution of every policy.
/// The instance must be stochastic and satisfy HT at ell.
OracleResult brute_force_average(const RateMdp& mdp, StateIndex ell, const OracleOptions& options = {});

/// Stationary distribution of a stochastic matrix with one recurrent class,
/// from pi (I - P) = 0 with the last balance equation replaced by sum(pi) = 1.
Vector stationary_distribution(const Matrix& p);

/// (1/N) sum_{n<N} Q_phi^n c_phi by repeated matrix-vector products.
Vector cesaro_check(const RateMdp& mdp, const StationaryPolicy& phi, std::size_t N);

} // namespace hvmdp
