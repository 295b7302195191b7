#include "hvmdp/hvag_transform.hpp"

#include "hvmdp/errors.hpp"
#include "hvmdp/hv_transform.hpp"
#include "transform_detail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hvmdp {

DiscountedMdp build_hvag(const RateMdp& mdp, const HtCertificate& cert,
                         std::optional<double> beta_in, std::optional<Vector> mu_override) {
    require_valid(mdp);
    const std::size_t n = mdp.num_states();
    const StateIndex ell = cert.ell;
    if (ell >= n)
        throw TransformError("distinguished state out of range");

    Vector mu = mu_override ? std::move(*mu_override) : cert.mu;
    if (mu.size() != n)
        throw TransformError("bounding function has the wrong length");
    double K = 1.0;
    for (double m : mu) {
        if (!(m >= 1.0) || !std::isfinite(m))
            throw TransformError("bounding function must be finite and at least 1");
        K = std::max(K, m);
    }
    const double beta = detail::resolve_beta(beta_in, mu_override ? K : cert.K_star, "K*");

    RateMdp out = detail::absorbing_shell(mdp);
    for (StateIndex x = 0; x < n; ++x) {
        for (ActionIndex a = 0; a < mdp.actions[x].size(); ++a) {
            const auto& act = mdp.actions[x][a];
            std::vector<Transition> row;
            if (beta == 0.0) {
                row.push_back({n, 1.0});
            } else {
                const double scale = 1.0 / (beta * mu[x]);
                double weighted = 0.0;
                for (const auto& t : act.transitions) {
                    if (t.to == ell)
                        continue;
                    weighted += t.rate * mu[t.to];
                    row.push_back({t.to, t.rate * mu[t.to] * scale});
                }
                row.push_back({ell, (mu[x] - 1.0 - weighted) * scale});
                row.push_back({n, 1.0 - (mu[x] - 1.0) * scale});
            }
            out.actions[x].push_back(
                ActionData{act.name, act.cost / mu[x], detail::finalize_row(std::move(row), x, a)});
        }
    }
    return make_discounted(std::move(out), n, beta,
                           TransformOrigin{TransformKind::HVAG, std::move(mu), ell});
}

AverageSolution extract_average_solution(std::span<const double> dv, const HtCertificate& cert) {
    const std::size_t n = cert.mu.size();
    if (dv.size() != n + 1)
        throw SolutionError("discounted value must have one more entry than mu");
    if (!(std::abs(dv.back()) <= 1e-12))
        throw SolutionError("value at the absorbing state must be zero");
    AverageSolution sol;
    sol.ell = cert.ell;
    sol.w = dv[cert.ell];
    sol.h.resize(n);
    for (StateIndex x = 0; x < n; ++x)
        sol.h[x] = x == cert.ell ? 0.0 : cert.mu[x] * (dv[x] - dv[cert.ell]);
    return sol;
}

AcoeReport verify_acoe(const RateMdp& mdp, const AverageSolution& sol, double tol) {
    if (classify_rates(mdp) != RateClass::Stochastic)
        throw ModelError("average-cost optimality equation requires stochastic rates");
    const std::size_t n = mdp.num_states();
    if (sol.h.size() != n)
        throw SolutionError("h has the wrong length");

    AcoeReport report;
    report.residuals.resize(n);
    report.optimal_actions.resize(n);
    for (StateIndex x = 0; x < n; ++x) {
        const auto& acts = mdp.actions[x];
        Vector backups(acts.size());
        for (ActionIndex a = 0; a < acts.size(); ++a) {
            double s = acts[a].cost;
            for (const auto& t : acts[a].transitions)
                s += t.rate * sol.h[t.to];
            backups[a] = s;
        }
        const double best = *std::min_element(backups.begin(), backups.end());
        report.residuals[x] = sol.w + sol.h[x] - best;
        report.max_abs_residual = std::max(report.max_abs_residual, std::abs(report.residuals[x]));
        for (ActionIndex a = 0; a < acts.size(); ++a)
            if (std::abs(sol.w + sol.h[x] - backups[a]) <= tol)
                report.optimal_actions[x].push_back(a);
    }
    if (report.max_abs_residual > tol) {
        std::ostringstream os;
        os.precision(12);
        os << "optimality equation residual " << report.max_abs_residual << " exceeds " << tol;
        throw AcoeViolation(os.str(), std::move(report));
    }
    return report;
}

IdentitySides lemma2_identity(const RateMdp& mdp, const HtCertificate& cert,
                              const DiscountedMdp& dmdp, std::span<const double> f, StateIndex x,
                              ActionIndex a) {
    const std::size_t n = mdp.num_states();
    if (f.size() != n + 1 || dmdp.num_states() != n + 1)
        throw SolutionError("f must be indexed over the transformed state space");
    if (f[dmdp.absorbing_state()] != 0.0)
        throw SolutionError("f must vanish at the absorbing state");
    const auto& mu = dmdp.origin().mu.empty() ? cert.mu : dmdp.origin().mu;
    const StateIndex ell = cert.ell;

    IdentitySides sides;
    const auto& bar = dmdp.base().action(x, a);
    double expect = 0.0;
    for (const auto& t : bar.transitions)
        expect += t.rate * f[t.to];
    sides.lhs = bar.cost + dmdp.beta() * expect;

    const auto& act = mdp.action(x, a);
    double s = act.cost;
    for (const auto& t : act.transitions)
        s += t.rate * mu[t.to] * (f[t.to] - f[ell]);
    s += (mu[x] - 1.0) * f[ell];
    sides.rhs = s / mu[x];
    return sides;
}

} // namespace hvmdp
