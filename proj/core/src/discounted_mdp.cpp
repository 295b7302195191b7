#include "hvmdp/discounted_mdp.hpp"

#include "hvmdp/errors.hpp"

#include <cmath>

namespace hvmdp {

const char* to_string(TransformKind k) {
    switch (k) {
    case TransformKind::Direct:
        return "direct";
    case TransformKind::HV:
        return "hv";
    case TransformKind::HVAG:
        return "hvag";
    }
    return "unknown";
}

DiscountedMdp make_discounted(RateMdp base, StateIndex absorbing, double beta,
                              TransformOrigin origin) {
    require_valid(base);
    if (!(beta >= 0.0 && beta < 1.0))
        throw ModelError("discount factor " + std::to_string(beta) + " outside [0, 1)");
    if (absorbing >= base.num_states())
        throw ModelError("absorbing state index out of range");

    const auto& abs_actions = base.actions[absorbing];
    if (abs_actions.size() != 1 || abs_actions[0].cost != 0.0 ||
        abs_actions[0].transitions.size() != 1 || abs_actions[0].transitions[0].to != absorbing ||
        abs_actions[0].transitions[0].rate != 1.0)
        throw ModelError("absorbing state must have one cost-free action with self-probability 1");

    for (StateIndex x = 0; x < base.num_states(); ++x)
        for (ActionIndex a = 0; a < base.actions[x].size(); ++a)
            if (std::abs(base.actions[x][a].rate_sum() - 1.0) > kRowSumTolerance)
                throw ModelError("row (" + std::to_string(x) + ", a" + std::to_string(a) +
                                 ") is not a probability distribution");

    if (origin.kind != TransformKind::Direct) {
        if (origin.mu.size() + 1 != base.num_states())
            throw ModelError("origin mu has the wrong length");
        if (origin.kind == TransformKind::HVAG &&
            (!origin.ell || *origin.ell >= origin.mu.size()))
            throw ModelError("HVAG origin requires a distinguished state");
    }

    DiscountedMdp d;
    d.base_ = std::move(base);
    d.absorbing_ = absorbing;
    d.beta_ = beta;
    d.origin_ = std::move(origin);
    return d;
}

StationaryPolicy extend_policy(const DiscountedMdp& dmdp, const StationaryPolicy& phi) {
    if (phi.size() == dmdp.num_states())
        return phi;
    if (phi.size() != dmdp.num_original_states())
        throw ModelError("policy length does not match the discounted model");
    StationaryPolicy out;
    out.choice.reserve(dmdp.num_states());
    for (StateIndex x = 0, k = 0; x < dmdp.num_states(); ++x)
        out.choice.push_back(x == dmdp.absorbing_state() ? 0 : phi[k++]);
    return out;
}

} // namespace hvmdp
