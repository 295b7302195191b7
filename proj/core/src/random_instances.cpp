#include "hvmdp/random_instances.hpp"

#include "hvmdp/errors.hpp"
#include "hvmdp/transience.hpp"

#include <random>

namespace hvmdp {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
    if (lo == hi)
        return lo;
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random probability vector over a random subset of the states.
std::vector<Transition> random_distribution(Rng& rng, std::size_t n, double density) {
    std::vector<Transition> row;
    std::bernoulli_distribution keep(density);
    for (StateIndex y = 0; y < n; ++y)
        if (keep(rng))
            row.push_back({y, uniform(rng, 0.05, 1.0)});
    if (row.empty())
        row.push_back({uniform_index(rng, 0, n - 1), 1.0});
    double s = 0.0;
    for (const auto& t : row)
        s += t.rate;
    for (auto& t : row)
        t.rate /= s;
    return row;
}

RateMdp skeleton(const GenSpec& spec, Rng& rng) {
    RateMdp mdp;
    mdp.actions.resize(spec.n_states);
    for (auto& acts : mdp.actions) {
        const std::size_t k = uniform_index(rng, 1, spec.max_actions);
        for (std::size_t a = 0; a < k; ++a)
            acts.push_back(ActionData{"a" + std::to_string(a), uniform(rng, spec.cost_min, spec.cost_max), {}});
    }
    return mdp;
}

} // namespace

void GenSpec::check() const {
    if (n_states == 0 || max_actions == 0)
        throw ModelError("generator needs at least one state and one action");
    if (!(cost_min <= cost_max))
        throw ModelError("empty cost range");
    if (!(density > 0.0 && density <= 1.0))
        throw ModelError("density must lie in (0, 1]");
    std::visit(
        [](const auto& rc) {
            using T = std::decay_t<decltype(rc)>;
            if constexpr (std::is_same_v<T, SubstochasticRates>) {
                if (!(rc.kill_min > 0.0 && rc.kill_min <= rc.kill_max && rc.kill_max <= 1.0))
                    throw ModelError("kill probability range must be a nonempty subset of (0, 1]");
            } else if constexpr (std::is_same_v<T, GeneralRateSums>) {
                if (!(rc.row_sum_min >= 0.0 && rc.row_sum_min <= rc.row_sum_max))
                    throw ModelError("empty row-sum range");
            }
        },
        rate_class);
}

RateMdp generate(const GenSpec& spec) {
    spec.check();
    Rng rng(spec.seed);
    RateMdp mdp = skeleton(spec, rng);
    for (auto& acts : mdp.actions) {
        for (auto& act : acts) {
            const double mass = std::visit(
                [&rng](const auto& rc) -> double {
                    using T = std::decay_t<decltype(rc)>;
                    if constexpr (std::is_same_v<T, StochasticRates>)
                        return 1.0;
                    else if constexpr (std::is_same_v<T, SubstochasticRates>)
                        return 1.0 - uniform(rng, rc.kill_min, rc.kill_max);
                    else
                        return uniform(rng, rc.row_sum_min, rc.row_sum_max);
                },
                spec.rate_class);
            act.transitions = random_distribution(rng, spec.n_states, spec.density);
            if (mass != 1.0)
                for (auto& t : act.transitions)
                    t.rate *= mass;
            std::erase_if(act.transitions, [](const Transition& t) { return t.rate == 0.0; });
        }
    }
    return mdp;
}

RateMdp gen_transient(const GenSpec& spec) {
    if (!std::holds_alternative<SubstochasticRates>(spec.rate_class))
        throw ModelError("gen_transient requires the substochastic rate class");
    return generate(spec);
}

RateMdp gen_ht(const GenSpec& spec, StateIndex ell, double alpha) {
    spec.check();
    if (!std::holds_alternative<StochasticRates>(spec.rate_class))
        throw ModelError("gen_ht requires the stochastic rate class");
    if (ell >= spec.n_states)
        throw ModelError("distinguished state out of range");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw ModelError("alpha must lie in (0, 1]");

    Rng rng(spec.seed);
    RateMdp mdp = skeleton(spec, rng);
    for (auto& acts : mdp.actions) {
        for (auto& act : acts) {
            auto rest = random_distribution(rng, spec.n_states, spec.density);
            if (alpha == 1.0) {
                act.transitions = {{ell, 1.0}};
                continue;
            }
            bool has_ell = false;
            for (auto& t : rest) {
                t.rate *= 1.0 - alpha;
                if (t.to == ell) {
                    t.rate += alpha;
                    has_ell = true;
                }
            }
            if (!has_ell)
                rest.push_back({ell, alpha});
            act.transitions = std::move(rest);
        }
    }
    return mdp;
}

RateMdp gen_ht_rejection(const GenSpec& spec, StateIndex ell, std::size_t max_tries) {
    if (!std::holds_alternative<StochasticRates>(spec.rate_class))
        throw ModelError("gen_ht_rejection requires the stochastic rate class");
    GenSpec attempt = spec;
    for (std::size_t i = 0; i < max_tries; ++i) {
        attempt.seed = spec.seed + i;
        RateMdp mdp = generate(attempt);
        if (std::holds_alternative<HtCertificate>(check_ht(mdp, ell)))
            return mdp;
    }
    throw ModelError("no HT instance found within " + std::to_string(max_tries) + " draws");
}

} // namespace hvmdp
