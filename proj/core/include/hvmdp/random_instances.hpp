#pragma once

#include "hvmdp/model.hpp"

#include <cstdint>
#include <variant>

namespace hvmdp {

struct StochasticRates {
    friend bool operator==(const StochasticRates&, const StochasticRates&) = default;
};

/// Each action loses a kill probability drawn from [kill_min, kill_max].
struct SubstochasticRates {
    double kill_min = 0.2;
    double kill_max = 0.5;
    friend bool operator==(const SubstochasticRates&, const SubstochasticRates&) = default;
};

/// Row sums drawn from [row_sum_min, row_sum_max]; may exceed one.
struct GeneralRateSums {
    double row_sum_min = 0.5;
    double row_sum_max = 1.5;
    friend bool operator==(const GeneralRateSums&, const GeneralRateSums&) = default;
};

using RateClassSpec = std::variant<StochasticRates, SubstochasticRates, GeneralRateSums>;

/// Parameters of a seeded random instance. The seed fully determines the output.
struct GenSpec {
    std::size_t n_states = 4;
    /// Each state gets between 1 and max_actions actions.
    std::size_t max_actions = 3;
    RateClassSpec rate_class = SubstochasticRates{};
    double cost_min = 0.0;
    double cost_max = 10.0;
    /// Probability that a given state is a transition target of an action.
    double density = 0.6;
    std::uint64_t seed = 1;

    /// Throws ModelError on empty ranges or out-of-range probabilities.
    void check() const;

    friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// Random instance of the requested rate class.
RateMdp generate(const GenSpec& spec);

/// Substochastic instance whose every row loses at least kill_min, so every
/// policy has lifetime at most 1 / kill_min.
RateMdp gen_transient(const GenSpec& spec);

/// Stochastic instance with q(ell|x,a) >= alpha at every pair, so the
/// expected hitting time of ell is at most 1 / alpha.
RateMdp gen_ht(const GenSpec& spec, StateIndex ell, double alpha);

/// Stochastic instance without the minorization structure, drawn repeatedly
/// (seed, seed + 1, ...) until HT holds at ell. Throws ModelError after
/// max_tries rejections.
RateMdp gen_ht_rejection(const GenSpec& spec, StateIndex ell, std::size_t max_tries = 1000);

} // namespace hvmdp
