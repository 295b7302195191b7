#pragma once

#include "hvmdp/errors.hpp"
#include "hvmdp/model.hpp"

#include <functional>
#include <span>
#include <variant>

namespace hvmdp {

struct SingularSystem {
    friend bool operator==(const SingularSystem&, const SingularSystem&) = default;
};
struct NegativeInverseEntry {
    StateIndex state = 0;
    friend bool operator==(const NegativeInverseEntry&, const NegativeInverseEntry&) = default;
};
struct DivergentIteration {
    StateIndex state = 0;
    double value = 0.0;
    friend bool operator==(const DivergentIteration&, const DivergentIteration&) = default;
};

using NonTransienceEvidence = std::variant<SingularSystem, NegativeInverseEntry, DivergentIteration>;

/// A stationary policy whose rate matrix has spectral radius >= 1.
struct NonTransienceWitness {
    StationaryPolicy policy;
    NonTransienceEvidence evidence;
};

std::string describe(const NonTransienceWitness& w);

enum class MuMethod { ExactPolicyIteration, ValueIterationApprox };

/// Bounding function mu with mu(x) >= 1 + sum_y q(y|x,a) mu(y) for all (x,a),
/// and the constant K = max_x mu(x).
struct TransienceCertificate {
    Vector mu;
    double K = 1.0;
    MuMethod method = MuMethod::ExactPolicyIteration;
    /// Tolerance of the approximate method, zero for the exact one.
    double tolerance = 0.0;
    /// Policy attaining mu (a lifetime-maximizing policy).
    StationaryPolicy maximizing_policy;
    std::size_t iterations = 0;
};

/// Same as TransienceCertificate but for the model truncated at ell, so the
/// sums in the defining inequality exclude y = ell.
struct HtCertificate {
    StateIndex ell = 0;
    double K_star = 1.0;
    Vector mu;
    StationaryPolicy maximizing_policy;
};

using LifetimeResult = std::variant<Vector, NonTransienceWitness>;
using TransienceResult = std::variant<TransienceCertificate, NonTransienceWitness>;
using HtResult = std::variant<HtCertificate, NonTransienceWitness>;

/// Expected lifetime tau = (I - Q_phi)^{-1} e, certified by the M-matrix test:
/// I - Q_phi must be nonsingular with an entrywise nonnegative inverse.
LifetimeResult evaluate_lifetime(const RateMdp& mdp, const StationaryPolicy& phi);

/// Exact mu = sup_phi tau^phi by policy iteration on lifetime maximization.
/// Returns a witness as soon as an evaluated policy is not transient.
TransienceResult maximize_lifetime(const RateMdp& mdp);

/// Thrown by mu_value_iteration when the budget runs out.
class NotConverged : public Error {
public:
    NotConverged(const std::string& what, NonTransienceWitness suspect, Vector last)
        : Error(what), suspect_(std::move(suspect)), last_(std::move(last)) {}

    /// Greedy policy at the last iterate with the state of largest value.
    /// Not certified; run maximize_lifetime for a real witness.
    const NonTransienceWitness& suspect() const noexcept { return suspect_; }
    const Vector& last_iterate() const noexcept { return last_; }

private:
    NonTransienceWitness suspect_;
    Vector last_;
};

struct MuIteration {
    Vector mu;
    std::size_t iterations = 0;
};

/// Called with (n, u_n) after every application of U.
using MuObserver = std::function<void(std::size_t, std::span<const double>)>;

/// Monotone iteration u_{n+1} = U u_n from u_0 = 0, where
/// U u(x) = max_a [1 + sum_y q(y|x,a) u(y)]. Stops once the sup-norm
/// increment drops below tol.
MuIteration mu_value_iteration(const RateMdp& mdp, double tol, std::size_t max_iter,
                               const MuObserver& observer = {});

/// Applies U once.
Vector apply_lifetime_operator(const RateMdp& mdp, std::span<const double> u);

/// Removes every transition into ell. States, actions and costs are kept.
RateMdp truncate_at_state(const RateMdp& mdp, StateIndex ell);

HtResult check_ht(const RateMdp& mdp, StateIndex ell);

struct HtState {
    StateIndex ell = 0;
    double K_star = 1.0;
};

/// Every state at which HT holds, sorted by K* (ties by index).
std::vector<HtState> find_ht_states(const RateMdp& mdp);

/// Gelfand estimate ||Q^k||^{1/k} of the spectral radius of a nonnegative
/// matrix. An upper bound on rho(Q) for k >= 1, up to rounding.
double spectral_radius_estimate(const Matrix& q, std::size_t k = 4096);

} // namespace hvmdp
