#include "hvmdp/oracle.hpp"

#include "hvmdp/errors.hpp"
#include "hvmdp/transience.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hvmdp {

namespace {

void select_optimal(OracleResult& result, double tol) {
    const std::size_t n = result.per_policy_values.begin()->second.size();
    result.optimal_value.assign(n, std::numeric_limits<double>::infinity());
    for (const auto& [phi, v] : result.per_policy_values)
        for (std::size_t x = 0; x < n; ++x)
            result.optimal_value[x] = std::min(result.optimal_value[x], v[x]);
    for (const auto& [phi, v] : result.per_policy_values) {
        bool attains = true;
        for (std::size_t x = 0; x < n && attains; ++x)
            attains = v[x] <= result.optimal_value[x] + tol * std::max(1.0, std::abs(result.optimal_value[x]));
        if (attains)
            result.optimal_policies.push_back(phi);
    }
    if (result.optimal_policies.empty())
        throw std::logic_error("no policy attains the pointwise optimum");
}

} // namespace

OracleResult brute_force_total(const RateMdp& mdp, const OracleOptions& options) {
    require_valid(mdp);
    const std::size_t n = mdp.num_states();
    OracleResult result;
    PolicyEnumerator policies(mdp, options.policy_cap);
    while (auto phi = policies.next()) {
        const auto pm = policy_matrices(mdp, *phi);
        Matrix a = Matrix::identity(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                a(r, c) -= pm.q(r, c);
        auto lu = LuFactorization::factor(std::move(a));
        bool transient = lu.has_value();
        if (transient) {
            const Matrix inv = lu->inverse();
            double scale = 1.0;
            for (std::size_t r = 0; r < n; ++r)
                for (double v : inv.row(r))
                    scale = std::max(scale, std::abs(v));
            for (std::size_t r = 0; r < n && transient; ++r)
                for (double v : inv.row(r))
                    if (v < -1e-10 * scale)
                        transient = false;
        }
        if (!transient)
            throw ModelError("policy is not transient; the instance violates the transience assumption");
        result.per_policy_values.emplace(*phi, lu->solve(pm.c));
    }
    select_optimal(result, options.optimality_tolerance);
    return result;
}

Vector stationary_distribution(const Matrix& p) {
    const std::size_t n = p.rows();
    // Row x of the system is balance equation x: sum_y pi(y) (delta_yx - P(y,x)) = 0.
    Matrix a(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            a(x, y) = (x == y ? 1.0 : 0.0) - p(y, x);
    for (std::size_t y = 0; y < n; ++y)
        a(n - 1, y) = 1.0;
    auto lu = LuFactorization::factor(std::move(a));
    if (!lu)
        throw ModelError("stationary distribution is not unique; the chain has several recurrent classes");
    Vector rhs(n, 0.0);
    rhs[n - 1] = 1.0;
    return lu->solve(rhs);
}

OracleResult brute_force_average(const RateMdp& mdp, StateIndex ell, const OracleOptions& options) {
    if (classify_rates(mdp) != RateClass::Stochastic)
        throw ModelError("average-cost oracle requires stochastic rates");
    if (std::holds_alternative<NonTransienceWitness>(check_ht(mdp, ell)))
        throw ModelError("HT does not hold at state " + std::to_string(ell));
    const std::size_t n = mdp.num_states();
    OracleResult result;
    PolicyEnumerator policies(mdp, options.policy_cap);
    while (auto phi = policies.next()) {
        const auto pm = policy_matrices(mdp, *phi);
        const Vector pi = stationary_distribution(pm.q);
        double w = 0.0;
        for (std::size_t x = 0; x < n; ++x)
            w += pi[x] * pm.c[x];
        result.per_policy_values.emplace(*phi, Vector(n, w));
    }
    select_optimal(result, options.optimality_tolerance);
    return result;
}

Vector cesaro_check(const RateMdp& mdp, const StationaryPolicy& phi, std::size_t N) {
    const auto pm = policy_matrices(mdp, phi);
    Vector term = pm.c;
    Vector sum(term.size(), 0.0);
    for (std::size_t k = 0; k < N; ++k) {
        for (std::size_t x = 0; x < sum.size(); ++x)
            sum[x] += term[x];
        if (k + 1 < N)
            term = multiply(pm.q, term);
    }
    for (double& s : sum)
        s /= static_cast<double>(N);
    return sum;
}

} // namespace hvmdp
