#include "hvmdp/transience.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hvmdp {

namespace {

// Entries of (I - Q)^{-1} below -kNegativeSlack * max(1, max |entry|) count
// as genuinely negative rather than round-off around a structural zero.
constexpr double kNegativeSlack = 1e-10;
// Relative margin a greedy switch must beat in policy iteration.
constexpr double kImprovementEps = 1e-12;

double one_step_lifetime(const ActionData& act, std::span<const double> u) {
    double s = 1.0;
    for (const auto& t : act.transitions)
        s += t.rate * u[t.to];
    return s;
}

std::string format_policy(const StationaryPolicy& phi) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < phi.size(); ++i)
        os << (i ? ", " : "") << phi[i];
    os << "]";
    return os.str();
}

StationaryPolicy greedy_lifetime_policy(const RateMdp& mdp, std::span<const double> u) {
    StationaryPolicy phi{std::vector<ActionIndex>(mdp.num_states(), 0)};
    for (StateIndex x = 0; x < mdp.num_states(); ++x) {
        double best = one_step_lifetime(mdp.actions[x][0], u);
        for (ActionIndex a = 1; a < mdp.actions[x].size(); ++a) {
            const double v = one_step_lifetime(mdp.actions[x][a], u);
            if (v > best) {
                best = v;
                phi.choice[x] = a;
            }
        }
    }
    return phi;
}

} // namespace

std::string describe(const NonTransienceWitness& w) {
    std::ostringstream os;
    os << "policy " << format_policy(w.policy) << ": ";
    std::visit(
        [&os](const auto& ev) {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, SingularSystem>)
                os << "I - Q_phi is singular";
            else if constexpr (std::is_same_v<T, NegativeInverseEntry>)
                os << "(I - Q_phi)^-1 has a negative entry in row " << ev.state;
            else
                os << "lifetime iteration diverges at state " << ev.state << " (value " << ev.value
                   << ")";
        },
        w.evidence);
    return os.str();
}

LifetimeResult evaluate_lifetime(const RateMdp& mdp, const StationaryPolicy& phi) {
    require_valid(mdp);
    const auto pm = policy_matrices(mdp, phi);
    const std::size_t n = mdp.num_states();

    Matrix a = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) -= pm.q(r, c);

    auto lu = LuFactorization::factor(std::move(a));
    if (!lu)
        return NonTransienceWitness{phi, SingularSystem{}};

    const Matrix inv = lu->inverse();
    double scale = 1.0;
    for (std::size_t r = 0; r < n; ++r)
        for (double v : inv.row(r))
            scale = std::max(scale, std::abs(v));
    for (std::size_t r = 0; r < n; ++r)
        for (double v : inv.row(r))
            if (v < -kNegativeSlack * scale)
                return NonTransienceWitness{phi, NegativeInverseEntry{r}};

    Vector tau = lu->solve(Vector(n, 1.0));
    // Clean up round-off: tau >= 1 holds exactly for a nonnegative inverse.
    for (double& t : tau)
        t = std::max(t, 1.0);
    return tau;
}

TransienceResult maximize_lifetime(const RateMdp& mdp) {
    require_valid(mdp);
    const std::size_t n = mdp.num_states();
    StationaryPolicy phi{std::vector<ActionIndex>(n, 0)};

    // Every switch strictly increases tau, so no policy repeats; the bound is
    // a guard against a broken improvement test, not a tuning knob.
    const std::uint64_t budget = std::min<std::uint64_t>(policy_count(mdp), 1'000'000) + 1;
    for (std::uint64_t iter = 1; iter <= budget; ++iter) {
        auto evaluated = evaluate_lifetime(mdp, phi);
        if (auto* w = std::get_if<NonTransienceWitness>(&evaluated))
            return std::move(*w);
        const Vector& tau = std::get<Vector>(evaluated);

        bool improved = false;
        for (StateIndex x = 0; x < n; ++x) {
            const auto& acts = mdp.actions[x];
            double best = -1.0;
            for (const auto& act : acts)
                best = std::max(best, one_step_lifetime(act, tau));
            const double incumbent = one_step_lifetime(acts[phi[x]], tau);
            const double eps = kImprovementEps * std::max(1.0, std::abs(best));
            if (incumbent >= best - eps)
                continue;
            for (ActionIndex a = 0; a < acts.size(); ++a) {
                if (one_step_lifetime(acts[a], tau) >= best - eps) {
                    phi.choice[x] = a;
                    break;
                }
            }
            improved = true;
        }

        if (!improved) {
            TransienceCertificate cert;
            cert.mu = tau;
            cert.K = *std::max_element(tau.begin(), tau.end());
            cert.method = MuMethod::ExactPolicyIteration;
            cert.maximizing_policy = phi;
            cert.iterations = static_cast<std::size_t>(iter);
            return cert;
        }
    }
    throw std::logic_error("lifetime policy iteration failed to terminate");
}

Vector apply_lifetime_operator(const RateMdp& mdp, std::span<const double> u) {
    Vector out(mdp.num_states());
    for (StateIndex x = 0; x < mdp.num_states(); ++x) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& act : mdp.actions[x])
            best = std::max(best, one_step_lifetime(act, u));
        out[x] = best;
    }
    return out;
}

MuIteration mu_value_iteration(const RateMdp& mdp, double tol, std::size_t max_iter,
                               const MuObserver& observer) {
    require_valid(mdp);
    Vector u(mdp.num_states(), 0.0);
    for (std::size_t n = 1; n <= max_iter; ++n) {
        Vector next = apply_lifetime_operator(mdp, u);
        double increment = 0.0;
        for (std::size_t x = 0; x < u.size(); ++x) {
            const double d = next[x] - u[x];
            if (d < -1e-12 * std::max(1.0, std::abs(u[x])))
                throw std::logic_error("lifetime iterates decreased at state " + std::to_string(x));
            increment = std::max(increment, std::abs(d));
        }
        if (observer)
            observer(n, next);
        u = std::move(next);
        if (increment < tol)
            return {std::move(u), n};
    }

    const auto argmax = static_cast<StateIndex>(std::max_element(u.begin(), u.end()) - u.begin());
    NonTransienceWitness suspect{greedy_lifetime_policy(mdp, u), DivergentIteration{argmax, u[argmax]}};
    throw NotConverged("lifetime value iteration did not converge within " +
                           std::to_string(max_iter) + " iterations",
                       std::move(suspect), std::move(u));
}

RateMdp truncate_at_state(const RateMdp& mdp, StateIndex ell) {
    if (ell >= mdp.num_states())
        throw ModelError("state " + std::to_string(ell) + " out of range");
    RateMdp out = mdp;
    for (auto& acts : out.actions)
        for (auto& act : acts)
            for (auto& t : act.transitions)
                if (t.to == ell)
                    t.rate = 0.0;
    return out;
}

HtResult check_ht(const RateMdp& mdp, StateIndex ell) {
    require_valid(mdp);
    auto result = maximize_lifetime(truncate_at_state(mdp, ell));
    if (auto* w = std::get_if<NonTransienceWitness>(&result))
        return std::move(*w);
    auto& cert = std::get<TransienceCertificate>(result);
    return HtCertificate{ell, cert.K, std::move(cert.mu), std::move(cert.maximizing_policy)};
}

std::vector<HtState> find_ht_states(const RateMdp& mdp) {
    require_valid(mdp);
    std::vector<HtState> out;
    for (StateIndex ell = 0; ell < mdp.num_states(); ++ell) {
        auto r = check_ht(mdp, ell);
        if (auto* cert = std::get_if<HtCertificate>(&r))
            out.push_back({ell, cert->K_star});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const HtState& a, const HtState& b) { return a.K_star < b.K_star; });
    return out;
}

double spectral_radius_estimate(const Matrix& q, std::size_t k) {
    Vector v(q.rows(), 1.0);
    double log_sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        v = multiply(q, v);
        const double s = norm_inf(v);
        if (s == 0.0)
            return 0.0;
        log_sum += std::log(s);
        for (double& e : v)
            e /= s;
    }
    return std::exp(log_sum / static_cast<double>(k));
}

} // namespace hvmdp
