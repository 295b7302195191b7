#pragma once

#include "hvmdp/model.hpp"

#include <optional>

namespace hvmdp {

enum class TransformKind { Direct, HV, HVAG };

const char* to_string(TransformKind k);

/// How a discounted model maps back to the instance it came from.
struct TransformOrigin {
    TransformKind kind = TransformKind::Direct;
    /// Bounding function used for the rescaling; empty for Direct.
    Vector mu;
    /// Distinguished state, HVAG only.
    std::optional<StateIndex> ell;

    friend bool operator==(const TransformOrigin&, const TransformOrigin&) = default;
};

/// Discounted MDP with stochastic transition rows and a cost-free absorbing
/// state. Constructed through make_discounted(), which checks the invariants.
class DiscountedMdp {
public:
    const RateMdp& base() const noexcept { return base_; }
    StateIndex absorbing_state() const noexcept { return absorbing_; }
    double beta() const noexcept { return beta_; }
    const TransformOrigin& origin() const noexcept { return origin_; }

    std::size_t num_states() const noexcept { return base_.num_states(); }
    /// Number of states of the original model (all states except the absorbing one).
    std::size_t num_original_states() const noexcept { return base_.num_states() - 1; }

    friend bool operator==(const DiscountedMdp&, const DiscountedMdp&) = default;

private:
    friend DiscountedMdp make_discounted(RateMdp, StateIndex, double, TransformOrigin);

    RateMdp base_;
    StateIndex absorbing_ = 0;
    double beta_ = 0.0;
    TransformOrigin origin_;
};

/// Throws ModelError unless rows are stochastic within 1e-12 with nonnegative
/// entries, the absorbing state has a single cost-free self-loop, and
/// beta lies in [0, 1).
DiscountedMdp make_discounted(RateMdp base, StateIndex absorbing, double beta,
                              TransformOrigin origin = {});

/// Extends a policy on the original states with the single action of the
/// absorbing state. Policies already covering every state are returned as is.
StationaryPolicy extend_policy(const DiscountedMdp& dmdp, const StationaryPolicy& phi);

} // namespace hvmdp
