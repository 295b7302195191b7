#include "hvmdp/model.hpp"

#include "hvmdp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace hvmdp {

double ActionData::rate_sum() const {
    double s = 0.0;
    for (const auto& t : transitions)
        s += t.rate;
    return s;
}

std::size_t RateMdp::num_pairs() const {
    std::size_t m = 0;
    for (const auto& acts : actions)
        m += acts.size();
    return m;
}

const char* to_string(RateClass rc) {
    switch (rc) {
    case RateClass::Stochastic:
        return "stochastic";
    case RateClass::Substochastic:
        return "substochastic";
    case RateClass::GeneralRates:
        return "general";
    }
    return "unknown";
}

namespace {

std::string where(StateIndex x, ActionIndex a) {
    std::ostringstream os;
    os << "(" << x << ", a" << a << ")";
    return os.str();
}

std::string where(StateIndex x, ActionIndex a, StateIndex y) {
    std::ostringstream os;
    os << "(" << x << ", a" << a << ", " << y << ")";
    return os.str();
}

std::string first_violation(const RateMdp& mdp) {
    const std::size_t n = mdp.num_states();
    if (n == 0)
        return "instance has no states";
    if (!mdp.state_labels.empty() && mdp.state_labels.size() != n)
        return "state_labels has " + std::to_string(mdp.state_labels.size()) +
               " entries, expected " + std::to_string(n);

    std::unordered_set<StateIndex> seen;
    for (StateIndex x = 0; x < n; ++x) {
        const auto& acts = mdp.actions[x];
        if (acts.empty())
            return "empty action set at state " + std::to_string(x);
        for (ActionIndex a = 0; a < acts.size(); ++a) {
            const auto& act = acts[a];
            if (!std::isfinite(act.cost))
                return "non-finite cost at " + where(x, a);
            seen.clear();
            for (const auto& t : act.transitions) {
                if (t.to >= n)
                    return "target index " + std::to_string(t.to) + " out of range at " + where(x, a);
                if (!std::isfinite(t.rate))
                    return "non-finite rate at " + where(x, a, t.to);
                if (t.rate < 0.0)
                    return "negative rate at " + where(x, a, t.to);
                if (!seen.insert(t.to).second)
                    return "duplicate target at " + where(x, a, t.to);
            }
        }
    }
    return {};
}

} // namespace

ValidationReport validate(const RateMdp& mdp) {
    ValidationReport report;
    report.error = first_violation(mdp);
    report.valid = report.error.empty();
    if (!report.valid)
        return report;

    bool stochastic = true;
    bool substochastic = true;
    for (const auto& acts : mdp.actions) {
        for (const auto& act : acts) {
            const double s = act.rate_sum();
            report.max_row_sum = std::max(report.max_row_sum, s);
            if (std::abs(s - 1.0) > kRowSumTolerance)
                stochastic = false;
            if (s > 1.0 + kRowSumTolerance)
                substochastic = false;
        }
    }
    report.rate_class = stochastic      ? RateClass::Stochastic
                        : substochastic ? RateClass::Substochastic
                                        : RateClass::GeneralRates;
    return report;
}

void require_valid(const RateMdp& mdp) {
    auto report = validate(mdp);
    if (!report.valid)
        throw ModelError("invalid instance: " + report.error);
}

RateClass classify_rates(const RateMdp& mdp) {
    require_valid(mdp);
    return validate(mdp).rate_class;
}

void require_valid_policy(const RateMdp& mdp, const StationaryPolicy& phi) {
    if (phi.size() != mdp.num_states())
        throw ModelError("policy has " + std::to_string(phi.size()) + " entries, instance has " +
                         std::to_string(mdp.num_states()) + " states");
    for (StateIndex x = 0; x < phi.size(); ++x) {
        if (phi[x] >= mdp.actions[x].size())
            throw ModelError("policy selects action " + std::to_string(phi[x]) + " at state " +
                             std::to_string(x) + " which has " +
                             std::to_string(mdp.actions[x].size()) + " actions");
    }
}

PolicyMatrices policy_matrices(const RateMdp& mdp, const StationaryPolicy& phi) {
    require_valid_policy(mdp, phi);
    const std::size_t n = mdp.num_states();
    PolicyMatrices pm{Matrix(n, n), Vector(n)};
    for (StateIndex x = 0; x < n; ++x) {
        const auto& act = mdp.actions[x][phi[x]];
        pm.c[x] = act.cost;
        for (const auto& t : act.transitions)
            pm.q(x, t.to) = t.rate;
    }
    return pm;
}

std::uint64_t policy_count(const RateMdp& mdp) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (const auto& acts : mdp.actions) {
        const std::uint64_t k = acts.size();
        if (k == 0)
            return 0;
        if (total > kMax / k)
            return kMax;
        total *= k;
    }
    return total;
}

PolicyEnumerator::PolicyEnumerator(const RateMdp& mdp, std::uint64_t cap) {
    count_ = policy_count(mdp);
    if (count_ > cap)
        throw CapExceeded("instance has more than " + std::to_string(cap) + " stationary policies");
    sizes_.reserve(mdp.num_states());
    for (const auto& acts : mdp.actions)
        sizes_.push_back(acts.size());
    current_.assign(sizes_.size(), 0);
    done_ = count_ == 0;
}

std::optional<StationaryPolicy> PolicyEnumerator::next() {
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        return StationaryPolicy{current_};
    }
    for (std::size_t i = sizes_.size(); i-- > 0;) {
        if (++current_[i] < sizes_[i])
            return StationaryPolicy{current_};
        current_[i] = 0;
    }
    done_ = true;
    return std::nullopt;
}

std::vector<StationaryPolicy> enumerate_policies(const RateMdp& mdp, std::uint64_t cap) {
    PolicyEnumerator it(mdp, cap);
    std::vector<StationaryPolicy> out;
    out.reserve(static_cast<std::size_t>(it.count()));
    while (auto phi = it.next())
        out.push_back(std::move(*phi));
    return out;
}

} // namespace hvmdp
