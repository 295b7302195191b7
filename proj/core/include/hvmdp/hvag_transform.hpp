#pragma once

#include "hvmdp/discounted_mdp.hpp"
#include "hvmdp/transience.hpp"

#include <optional>
#include <span>

namespace hvmdp {

/// Solution (w, h) of the average-cost optimality equation
///   w + h(x) = min_a [c(x,a) + sum_y q(y|x,a) h(y)],
/// normalized so that h(ell) = 0.
struct AverageSolution {
    double w = 0.0;
    Vector h;
    StateIndex ell = 0;
};

/// Discounted model for the average-cost problem at the distinguished state
/// ell. Mass q(y|x,a) mu(y) / (beta mu(x)) goes to y != ell, the surplus
/// [mu(x) - 1 - sum_{y != ell} q(y|x,a) mu(y)] / (beta mu(x)) goes to ell, and
/// 1 - (mu(x) - 1) / (beta mu(x)) goes to the absorbing state (index n).
///
/// The certificate's mu is normally the one from check_ht; mu_override lets a
/// caller substitute any larger function that still satisfies the truncated
/// bounding inequality (K* is then recomputed as its maximum).
DiscountedMdp build_hvag(const RateMdp& mdp, const HtCertificate& cert,
                         std::optional<double> beta = std::nullopt,
                         std::optional<Vector> mu_override = std::nullopt);

/// w = dv(ell), h(x) = mu(x) (dv(x) - dv(ell)).
AverageSolution extract_average_solution(std::span<const double> dv, const HtCertificate& cert);

struct AcoeReport {
    /// r(x) = w + h(x) - min_a [c(x,a) + sum_y q(y|x,a) h(y)].
    Vector residuals;
    double max_abs_residual = 0.0;
    /// A*_av(x): actions within tol of the minimum.
    ActionSets optimal_actions;
};

/// Thrown by verify_acoe when the largest residual exceeds the tolerance.
class AcoeViolation : public SolutionError {
public:
    AcoeViolation(const std::string& what, AcoeReport report)
        : SolutionError(what), report_(std::move(report)) {}
    const AcoeReport& report() const noexcept { return report_; }

private:
    AcoeReport report_;
};

/// Checks (w, h) against the optimality equation of a stochastic instance.
AcoeReport verify_acoe(const RateMdp& mdp, const AverageSolution& sol, double tol);

struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Both sides of the identity linking one discounted backup of the HVAG model
/// with the undiscounted backup of the original:
///   lhs = cbar(x,a) + beta * sum_y pbar(y|x,a) f(y)
///   rhs = [c(x,a) + sum_y q(y|x,a) mu(y) (f(y) - f(ell)) + (mu(x) - 1) f(ell)] / mu(x)
/// f is indexed over the HVAG states and must vanish at the absorbing state.
IdentitySides lemma2_identity(const RateMdp& mdp, const HtCertificate& cert,
                              const DiscountedMdp& dmdp, std::span<const double> f, StateIndex x,
                              ActionIndex a);

} // namespace hvmdp
