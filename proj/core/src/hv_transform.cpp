#include "hvmdp/hv_transform.hpp"

#include "hvmdp/errors.hpp"
#include "transform_detail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hvmdp {

namespace detail {

double resolve_beta(std::optional<double> requested, double K, const char* constant_name) {
    const double lower = min_admissible_beta(K);
    if (!requested)
        return lower;
    const double beta = *requested;
    // Slack covers K read back from a file with 12-17 significant digits.
    if (!(beta >= lower - 1e-12 && beta < 1.0)) {
        std::ostringstream os;
        os.precision(12);
        os << "discount factor " << beta << " outside the admissible interval [" << lower
           << ", 1) for " << constant_name << " = " << K;
        throw TransformError(os.str());
    }
    return std::max(beta, 0.0);
}

std::vector<Transition> finalize_row(std::vector<Transition> entries, StateIndex x, ActionIndex a) {
    bool clamped = false;
    for (auto& t : entries) {
        if (t.rate >= 0.0)
            continue;
        if (t.rate < -kClampTolerance) {
            std::ostringstream os;
            os.precision(17);
            os << "transformed probability " << t.rate << " at (" << x << ", a" << a << ", " << t.to
               << ") is negative; the bounding function is not a valid certificate";
            throw TransformError(os.str());
        }
        t.rate = 0.0;
        clamped = true;
    }
    std::erase_if(entries, [](const Transition& t) { return t.rate == 0.0; });
    if (clamped) {
        double s = 0.0;
        for (const auto& t : entries)
            s += t.rate;
        for (auto& t : entries)
            t.rate /= s;
    }
    return entries;
}

RateMdp absorbing_shell(const RateMdp& mdp) {
    const std::size_t n = mdp.num_states();
    RateMdp out;
    out.actions.resize(n + 1);
    out.actions[n].push_back(ActionData{"absorb", 0.0, {Transition{n, 1.0}}});
    if (!mdp.state_labels.empty()) {
        out.state_labels = mdp.state_labels;
        out.state_labels.push_back("absorbing");
    }
    return out;
}

} // namespace detail

double min_admissible_beta(double K) {
    if (!(K >= 1.0))
        throw TransformError("bounding constant must be at least 1");
    return (K - 1.0) / K;
}

DiscountedMdp build_hv(const RateMdp& mdp, const TransienceCertificate& cert,
                       std::optional<double> beta_in) {
    require_valid(mdp);
    const std::size_t n = mdp.num_states();
    if (cert.mu.size() != n)
        throw TransformError("certificate mu has the wrong length");
    const double beta = detail::resolve_beta(beta_in, cert.K, "K");
    const auto& mu = cert.mu;

    RateMdp out = detail::absorbing_shell(mdp);
    for (StateIndex x = 0; x < n; ++x) {
        for (ActionIndex a = 0; a < mdp.actions[x].size(); ++a) {
            const auto& act = mdp.actions[x][a];
            std::vector<Transition> row;
            if (beta == 0.0) {
                row.push_back({n, 1.0});
            } else {
                const double scale = 1.0 / (beta * mu[x]);
                double kept = 0.0;
                for (const auto& t : act.transitions) {
                    const double p = t.rate * mu[t.to] * scale;
                    row.push_back({t.to, p});
                    kept += p;
                }
                row.push_back({n, 1.0 - kept});
            }
            out.actions[x].push_back(
                ActionData{act.name, act.cost / mu[x], detail::finalize_row(std::move(row), x, a)});
        }
    }
    return make_discounted(std::move(out), n, beta, TransformOrigin{TransformKind::HV, mu, std::nullopt});
}

Vector lift_total_value(std::span<const double> dv, std::span<const double> mu) {
    if (dv.size() != mu.size() + 1)
        throw SolutionError("discounted value must have one more entry than mu");
    if (!(std::abs(dv.back()) <= 1e-12))
        throw SolutionError("value at the absorbing state must be zero");
    Vector v(mu.size());
    for (std::size_t x = 0; x < mu.size(); ++x)
        v[x] = mu[x] * dv[x];
    return v;
}

namespace {

double total_cost_backup(const ActionData& act, std::span<const double> v) {
    double s = act.cost;
    for (const auto& t : act.transitions)
        s += t.rate * v[t.to];
    return s;
}

} // namespace

Vector total_cost_operator(const RateMdp& mdp, std::span<const double> v) {
    Vector out(mdp.num_states());
    for (StateIndex x = 0; x < mdp.num_states(); ++x) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& act : mdp.actions[x])
            best = std::min(best, total_cost_backup(act, v));
        out[x] = best;
    }
    return out;
}

ActionSets total_optimal_actions(const RateMdp& mdp, std::span<const double> v, double tol) {
    require_valid(mdp);
    if (v.size() != mdp.num_states())
        throw SolutionError("value vector has the wrong length");
    ActionSets sets(mdp.num_states());
    for (StateIndex x = 0; x < mdp.num_states(); ++x) {
        for (ActionIndex a = 0; a < mdp.actions[x].size(); ++a)
            if (std::abs(v[x] - total_cost_backup(mdp.actions[x][a], v)) <= tol)
                sets[x].push_back(a);
        if (sets[x].empty())
            throw SolutionError("no action attains the optimality equation at state " +
                                std::to_string(x));
    }
    return sets;
}

RateMdp similarity_transform(const RateMdp& mdp, std::span<const double> b) {
    require_valid(mdp);
    if (b.size() != mdp.num_states())
        throw ModelError("scaling vector has the wrong length");
    for (double e : b)
        if (!(e > 0.0) || !std::isfinite(e))
            throw ModelError("scaling vector must be entrywise positive");
    RateMdp out = mdp;
    for (StateIndex x = 0; x < out.num_states(); ++x) {
        for (auto& act : out.actions[x]) {
            act.cost *= b[x];
            for (auto& t : act.transitions)
                t.rate = b[x] * t.rate / b[t.to];
        }
    }
    return out;
}

} // namespace hvmdp
