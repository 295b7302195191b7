#pragma once

#include "hvmdp/linalg.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hvmdp {

using StateIndex = std::size_t;
using ActionIndex = std::size_t;

struct Transition {
    StateIndex to = 0;
    double rate = 0.0;

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// One action available at a state: its one-step cost c(x,a) and the sparse
/// row of transition rates q(.|x,a). Rates need not sum to one.
struct ActionData {
    std::string name;
    double cost = 0.0;
    std::vector<Transition> transitions;

    double rate_sum() const;

    friend bool operator==(const ActionData&, const ActionData&) = default;
};

/// Finite MDP with nonnegative transition rates.
///
/// This is a plain aggregate so that malformed instances can be built and
/// handed to validate(); every algorithm calls require_valid() first.
struct RateMdp {
    /// actions[x] lists A(x); must be nonempty for every state.
    std::vector<std::vector<ActionData>> actions;
    /// Optional, either empty or one label per state.
    std::vector<std::string> state_labels;

    std::size_t num_states() const noexcept { return actions.size(); }
    std::size_t num_actions(StateIndex x) const { return actions.at(x).size(); }
    /// Total number of state-action pairs.
    std::size_t num_pairs() const;

    const ActionData& action(StateIndex x, ActionIndex a) const { return actions.at(x).at(a); }

    friend bool operator==(const RateMdp&, const RateMdp&) = default;
};

struct StationaryPolicy {
    std::vector<ActionIndex> choice;

    std::size_t size() const noexcept { return choice.size(); }
    ActionIndex operator[](StateIndex x) const { return choice[x]; }

    friend auto operator<=>(const StationaryPolicy&, const StationaryPolicy&) = default;
};

/// Per-state sets of action indices, each sorted ascending.
using ActionSets = std::vector<std::vector<ActionIndex>>;

/// Dense Q_phi and c_phi for one stationary policy.
struct PolicyMatrices {
    Matrix q;
    Vector c;
};

enum class RateClass { Stochastic, Substochastic, GeneralRates };

const char* to_string(RateClass rc);

struct ValidationReport {
    bool valid = false;
    /// First violated invariant with its location; empty when valid.
    std::string error;
    /// sup over (x,a) of the row sum of rates. Only meaningful when valid.
    double max_row_sum = 0.0;
    RateClass rate_class = RateClass::GeneralRates;
};

/// Row-sum tolerance used for classification.
inline constexpr double kRowSumTolerance = 1e-12;

ValidationReport validate(const RateMdp& mdp);

/// Throws ModelError carrying validate()'s message when the instance is invalid.
void require_valid(const RateMdp& mdp);

RateClass classify_rates(const RateMdp& mdp);

/// Throws ModelError if phi does not name an available action at every state.
void require_valid_policy(const RateMdp& mdp, const StationaryPolicy& phi);

PolicyMatrices policy_matrices(const RateMdp& mdp, const StationaryPolicy& phi);

/// Number of stationary policies, saturating at UINT64_MAX.
std::uint64_t policy_count(const RateMdp& mdp);

/// Lexicographic enumeration of every stationary policy (last state varies
/// fastest).
class PolicyEnumerator {
public:
    static constexpr std::uint64_t kDefaultCap = 1'000'000;

    /// Throws CapExceeded when the number of policies exceeds cap.
    explicit PolicyEnumerator(const RateMdp& mdp, std::uint64_t cap = kDefaultCap);

    std::uint64_t count() const noexcept { return count_; }

    /// Next policy, or nullopt once every policy has been produced.
    std::optional<StationaryPolicy> next();

private:
    std::vector<std::size_t> sizes_;
    std::vector<ActionIndex> current_;
    std::uint64_t count_ = 0;
    bool started_ = false;
    bool done_ = false;
};

std::vector<StationaryPolicy> enumerate_policies(const RateMdp& mdp,
                                                 std::uint64_t cap = PolicyEnumerator::kDefaultCap);

} // namespace hvmdp
