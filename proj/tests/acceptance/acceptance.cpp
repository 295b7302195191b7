// Acceptance suite: one PASS/FAIL line per criterion.
//
//   hvmdp_acceptance                  run every criterion
//   hvmdp_acceptance --criterion 7    run one
//   hvmdp_acceptance --report f.csv   where criterion 14 writes its table
//
// Exit status is nonzero if any selected criterion fails.

#include "test_support.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace hvmdp;
using namespace hvmdp::testing;

namespace {

constexpr std::size_t kInstances = 240;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects the first few failures of a criterion without stopping at them.
class Tally {
public:
    void require(bool ok, const std::string& what) {
        ++checks_;
        if (ok)
            return;
        ++failures_;
        if (first_.empty())
            first_ = what;
    }
    std::size_t checks() const { return checks_; }
    Outcome outcome(const std::string& summary) const {
        if (failures_ == 0)
            return {true, summary + ", " + std::to_string(checks_) + " checks"};
        return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed; first: " + first_};
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string vec(const Vector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v[i]);
        s += (i ? ", " : "") + std::string(buf);
    }
    return s + "]";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct TransientCase {
    std::uint64_t seed;
    RateMdp mdp;
    TransienceCertificate cert;
};

struct HtCase {
    std::uint64_t seed;
    RateMdp mdp;
    HtCertificate cert;
};

GenSpec case_spec(std::uint64_t seed, RateClassSpec rc) {
    return small_spec(seed, 2 + seed % 4, 3, rc);
}

const std::vector<TransientCase>& transient_cases() {
    static const std::vector<TransientCase> cases = [] {
        std::vector<TransientCase> out;
        for (std::uint64_t seed = 1; seed <= kInstances; ++seed) {
            const double delta = 0.2 + 0.1 * static_cast<double>(seed % 4);
            auto m = gen_transient(case_spec(seed, SubstochasticRates{delta, 0.8}));
            auto r = maximize_lifetime(m);
            if (!std::holds_alternative<TransienceCertificate>(r))
                throw std::runtime_error("generated instance " + std::to_string(seed) + " is not transient");
            out.push_back({seed, std::move(m), std::get<TransienceCertificate>(std::move(r))});
        }
        return out;
    }();
    return cases;
}

const std::vector<HtCase>& ht_cases() {
    static const std::vector<HtCase> cases = [] {
        std::vector<HtCase> out;
        for (std::uint64_t seed = 1; seed <= kInstances; ++seed) {
            const GenSpec spec = case_spec(seed, StochasticRates{});
            const StateIndex ell = seed % spec.n_states;
            const double alpha = 0.2 + 0.1 * static_cast<double>(seed % 4);
            auto m = gen_ht(spec, ell, alpha);
            auto r = check_ht(m, ell);
            if (!std::holds_alternative<HtCertificate>(r))
                throw std::runtime_error("generated instance " + std::to_string(seed) + " fails HT");
            out.push_back({seed, std::move(m), std::get<HtCertificate>(std::move(r))});
        }
        return out;
    }();
    return cases;
}

ActionSets head(const ActionSets& s, std::size_t n) { return {s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n)}; }

// 1. Geometric instance: one state, self-rate 0.5, cost 1.
Outcome closed_form_total() {
    Tally t;
    const RateMdp m = geometric(0.5, 1.0);
    const double expected = geometric_series(0.5, 1.0, 200);
    const auto cert = std::get<TransienceCertificate>(maximize_lifetime(m));
    t.require(std::abs(cert.K - 2.0) <= 1e-12, "K = " + fmt(cert.K));
    const auto d = build_hv(m, cert);
    t.require(std::abs(d.beta() - 0.5) <= 1e-12, "beta = " + fmt(d.beta()));
    for (auto method : {SolveMethod::ValueIteration, SolveMethod::HowardPI, SolveMethod::DantzigPI}) {
        SolverOptions o;
        o.tolerance = 1e-13;
        const Vector v = lift_total_value(solve(d, method, o).values, cert.mu);
        t.require(std::abs(v[0] - expected) <= 1e-12,
                  std::string(to_string(method)) + " gives v = " + vec(v));
    }
    return t.outcome("K = 2, beta = 0.5, v = [2] by vi, howard and dantzig");
}

// 2. Two-state cycle with costs (0, 2) and ell = 0.
Outcome closed_form_average() {
    Tally t;
    const RateMdp m = cycle(0.0, 2.0);
    const auto cert = std::get<HtCertificate>(check_ht(m, 0));
    t.require(std::abs(cert.K_star - 2.0) <= 1e-12, "K* = " + fmt(cert.K_star));
    const auto d = build_hvag(m, cert);
    t.require(std::abs(d.beta() - 0.5) <= 1e-12, "beta = " + fmt(d.beta()));
    // Independent oracle for w: stationary distribution (1/2, 1/2) by Cesaro averaging.
    const Vector pi = cesaro_stationary(policy_matrices(m, {{0, 0}}).q, 100000);
    const double w_oracle = pi[0] * 0.0 + pi[1] * 2.0;
    const auto sol = extract_average_solution(howard_pi(d).values, cert);
    t.require(std::abs(sol.w - 1.0) <= 1e-12 && std::abs(w_oracle - 1.0) <= 1e-9, "w = " + fmt(sol.w));
    const Vector stated{0.0, 2.0};
    t.require(max_abs_diff(sol.h, stated) <= 1e-12,
              "h = " + vec(sol.h) + ", expected (0, 2); the ACOE residual of (0, 2) at state 1 is " +
                  fmt(std::abs(sol.w + 2.0 - (2.0 + 0.0))) + " while h = " + vec(sol.h) + " has residual " +
                  fmt(verify_acoe(m, sol, 1.0).max_abs_residual));
    return t.outcome("K* = 2, beta = 0.5, w = 1, h = (0, 2)");
}

// 3. HV pipeline against the brute-force total-cost oracle.
Outcome oracle_total() {
    Tally t;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const auto& c : transient_cases()) {
        const auto d = build_hv(c.mdp, c.cert);
        const auto oracle = brute_force_total(c.mdp);
        for (auto method : {SolveMethod::HowardPI, SolveMethod::DantzigPI, SolveMethod::ValueIteration}) {
            SolverOptions o;
            o.tolerance = 1e-11;
            const auto rep = solve(d, method, o);
            const Vector v = lift_total_value(rep.values, c.cert.mu);
            const double dev = max_abs_diff(v, oracle.optimal_value);
            worst = std::max(worst, dev);
            t.require(dev <= 1e-8, "seed " + std::to_string(c.seed) + " " + to_string(method) +
                                       " deviates by " + fmt(dev));
            const ActionSets original = total_optimal_actions(c.mdp, v, 1e-8);
            const ActionSets discounted = head(optimal_actions(d, rep.values, 1e-8), c.mdp.num_states());
            t.require(original == discounted, "seed " + std::to_string(c.seed) + " action sets differ");
            const StationaryPolicy restricted{
                {rep.policy.choice.begin(), rep.policy.choice.begin() + static_cast<std::ptrdiff_t>(c.mdp.num_states())}};
            const bool listed = std::find(oracle.optimal_policies.begin(), oracle.optimal_policies.end(),
                                          restricted) != oracle.optimal_policies.end();
            t.require(listed, "seed " + std::to_string(c.seed) + " policy not oracle optimal");
        }
    }
    const double secs = seconds_since(t0);
    t.require(secs <= 60.0, "runtime " + fmt(secs) + " s");
    return t.outcome(std::to_string(kInstances) + " instances, max deviation " + fmt(worst) + ", " +
                     fmt(secs) + " s");
}

// 4. HVAG pipeline against the brute-force average-cost oracle.
Outcome oracle_average() {
    Tally t;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0, worst_res = 0.0;
    for (const auto& c : ht_cases()) {
        const auto d = build_hvag(c.mdp, c.cert);
        const auto oracle = brute_force_average(c.mdp, c.cert.ell);
        for (auto method : {SolveMethod::HowardPI, SolveMethod::DantzigPI, SolveMethod::ValueIteration}) {
            SolverOptions o;
            o.tolerance = 1e-12;
            const auto rep = solve(d, method, o);
            const auto sol = extract_average_solution(rep.values, c.cert);
            const double dev = std::abs(sol.w - oracle.optimal_value[0]);
            worst = std::max(worst, dev);
            t.require(dev <= 1e-8, "seed " + std::to_string(c.seed) + " " + to_string(method) +
                                       " w deviates by " + fmt(dev));
            AcoeReport acoe;
            try {
                acoe = verify_acoe(c.mdp, sol, 1e-9);
            } catch (const AcoeViolation& e) {
                acoe = e.report();
            }
            worst_res = std::max(worst_res, acoe.max_abs_residual);
            t.require(acoe.max_abs_residual <= 1e-9, "seed " + std::to_string(c.seed) + " " +
                                                         to_string(method) + " ACOE residual " +
                                                         fmt(acoe.max_abs_residual));
        }
    }
    const double secs = seconds_since(t0);
    t.require(secs <= 120.0, "runtime " + fmt(secs) + " s");
    return t.outcome(std::to_string(kInstances) + " instances, max |w - w*| " + fmt(worst) +
                     ", max ACOE residual " + fmt(worst_res) + ", " + fmt(secs) + " s");
}

// 5. v^phi = mu * (discounted value of phi) for every policy.
Outcome policy_value_scaling() {
    Tally t;
    std::size_t policies = 0;
    for (const auto& c : transient_cases()) {
        const auto d = build_hv(c.mdp, c.cert);
        const auto oracle = brute_force_total(c.mdp);
        for (const auto& [phi, v] : oracle.per_policy_values) {
            ++policies;
            const Vector dv = policy_evaluate(d, extend_policy(d, phi));
            for (StateIndex x = 0; x < v.size(); ++x)
                t.require(std::abs(v[x] - c.cert.mu[x] * dv[x]) <= 1e-9,
                          "seed " + std::to_string(c.seed) + " state " + std::to_string(x));
        }
    }
    return t.outcome(std::to_string(policies) + " policies");
}

// 6. Policy identity of the average-cost transformation.
Outcome policy_identities_average() {
    Tally t;
    std::size_t policies = 0;
    for (const auto& c : ht_cases()) {
        const auto d = build_hvag(c.mdp, c.cert);
        const auto oracle = brute_force_average(c.mdp, c.cert.ell);
        const StateIndex ell = c.cert.ell;
        for (const auto& [phi, w] : oracle.per_policy_values) {
            ++policies;
            const Vector dv = policy_evaluate(d, extend_policy(d, phi));
            auto h = [&](StateIndex y) { return c.cert.mu[y] * (dv[y] - dv[ell]); };
            for (StateIndex x = 0; x < c.mdp.num_states(); ++x) {
                const auto& a = c.mdp.action(x, phi[x]);
                double rhs = a.cost;
                for (const auto& tr : a.transitions)
                    rhs += tr.rate * h(tr.to);
                t.require(std::abs(dv[ell] + h(x) - rhs) <= 1e-9,
                          "seed " + std::to_string(c.seed) + " state " + std::to_string(x));
            }
            t.require(std::abs(w[0] - dv[ell]) <= 1e-8, "seed " + std::to_string(c.seed) + " w^phi");
        }
    }
    return t.outcome(std::to_string(policies) + " policies");
}

// 7. One discounted backup of the HVAG model against the undiscounted one.
Outcome lemma_identity() {
    Tally t;
    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> value(-10.0, 10.0);
    double worst = 0.0;
    const auto& cases = ht_cases();
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& c = cases[static_cast<std::size_t>(trial) % cases.size()];
        const auto d = build_hvag(c.mdp, c.cert);
        const std::size_t n = c.mdp.num_states();
        Vector f(n + 1, 0.0);
        for (std::size_t y = 0; y < n; ++y)
            f[y] = value(rng);
        const StateIndex x = std::uniform_int_distribution<StateIndex>(0, n - 1)(rng);
        const ActionIndex a = std::uniform_int_distribution<ActionIndex>(0, c.mdp.num_actions(x) - 1)(rng);
        const auto s = lemma2_identity(c.mdp, c.cert, d, f, x, a);
        worst = std::max(worst, std::abs(s.lhs - s.rhs));
        t.require(std::abs(s.lhs - s.rhs) <= 1e-10, "trial " + std::to_string(trial) + " gap " +
                                                        fmt(std::abs(s.lhs - s.rhs)));
    }
    return t.outcome("1000 trials, max gap " + fmt(worst));
}

// 8. Value iteration for mu against the exact policy-iteration mu.
Outcome mu_cross_check() {
    Tally t;
    double worst = 0.0;
    for (const auto& c : transient_cases()) {
        Vector prev(c.mdp.num_states(), 0.0);
        bool monotone = true, bounded = true;
        const auto it = mu_value_iteration(c.mdp, 1e-10, 1'000'000, [&](std::size_t, std::span<const double> u) {
            for (std::size_t x = 0; x < u.size(); ++x) {
                monotone = monotone && u[x] >= prev[x];
                bounded = bounded && u[x] <= c.cert.K + 1e-12;
            }
            prev.assign(u.begin(), u.end());
        });
        const double dev = max_abs_diff(it.mu, c.cert.mu);
        worst = std::max(worst, dev);
        t.require(dev <= 1e-8, "seed " + std::to_string(c.seed) + " deviation " + fmt(dev));
        t.require(monotone, "seed " + std::to_string(c.seed) + " iterates decreased");
        t.require(bounded, "seed " + std::to_string(c.seed) + " iterate above K");
    }
    return t.outcome(std::to_string(kInstances) + " instances, max deviation " + fmt(worst));
}

void check_rows(Tally& t, const DiscountedMdp& d, const std::string& where) {
    for (StateIndex x = 0; x < d.num_states(); ++x)
        for (const auto& a : d.base().actions[x]) {
            double s = 0.0;
            bool nonneg = true;
            for (const auto& tr : a.transitions) {
                s += tr.rate;
                nonneg = nonneg && tr.rate >= 0.0;
            }
            t.require(nonneg && std::abs(s - 1.0) <= 1e-12, where + " state " + std::to_string(x));
        }
}

// 9. Transformed rows are probability distributions over a beta grid.
Outcome transform_validity() {
    Tally t;
    for (const auto& c : transient_cases()) {
        const double lo = min_admissible_beta(c.cert.K);
        for (int k = 0; k < 5; ++k)
            check_rows(t, build_hv(c.mdp, c.cert, lo + (1.0 - lo) * k / 5.0),
                       "hv seed " + std::to_string(c.seed) + " grid " + std::to_string(k));
    }
    for (const auto& c : ht_cases()) {
        const double lo = min_admissible_beta(c.cert.K_star);
        for (int k = 0; k < 5; ++k)
            check_rows(t, build_hvag(c.mdp, c.cert, lo + (1.0 - lo) * k / 5.0),
                       "hvag seed " + std::to_string(c.seed) + " grid " + std::to_string(k));
    }
    return t.outcome(std::to_string(2 * kInstances) + " instances x 5 discount factors");
}

// 10. Positive diagonal similarity keeps the set of optimal policies.
Outcome similarity_invariance() {
    Tally t;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    const auto& cases = transient_cases();
    for (std::size_t k = 0; k < 50; ++k) {
        const auto& c = cases[k * 3 % cases.size()];
        Vector b(c.mdp.num_states());
        for (double& x : b)
            x = scale(rng);
        const auto before = brute_force_total(c.mdp).optimal_policies;
        const auto after = brute_force_total(similarity_transform(c.mdp, b)).optimal_policies;
        t.require(before == after, "seed " + std::to_string(c.seed));
    }
    return t.outcome("50 scaling vectors");
}

// 11. Scaling the rates by beta in (0, 1] keeps transience with no larger K.
Outcome beta_scaling() {
    Tally t;
    for (const auto& c : transient_cases()) {
        for (double beta : {0.25, 0.5, 1.0}) {
            RateMdp scaled = c.mdp;
            for (auto& acts : scaled.actions)
                for (auto& a : acts)
                    for (auto& tr : a.transitions)
                        tr.rate *= beta;
            const auto r = maximize_lifetime(scaled);
            const auto* cert = std::get_if<TransienceCertificate>(&r);
            t.require(cert != nullptr && cert->K <= c.cert.K + 1e-9,
                      "seed " + std::to_string(c.seed) + " beta " + fmt(beta));
        }
    }
    return t.outcome(std::to_string(kInstances) + " instances x 3 factors");
}

// 12. Occupation measure of the optimal policy against the LP.
Outcome lp_consistency() {
    Tally t;
    for (const auto& c : transient_cases()) {
        const auto d = build_hv(c.mdp, c.cert);
        const auto rep = howard_pi(d);
        const auto z = occupation_measure(d, rep.policy);
        const std::string tag = "seed " + std::to_string(c.seed);
        t.require(z.max_constraint_violation(d) <= 1e-9, tag + " infeasible");
        double sum = 0.0;
        for (double v : rep.values)
            sum += v;
        t.require(std::abs(z.objective(d) - sum) <= 1e-8, tag + " objective " + fmt(z.objective(d)) +
                                                              " vs " + fmt(sum));
        for (StateIndex x = 0; x < d.num_states(); ++x)
            for (ActionIndex a = 0; a < d.base().num_actions(x); ++a) {
                const double reduced = backup(d, x, a, rep.values) - rep.values[x];
                t.require(z.z[x][a] >= 0.0, tag + " negative z");
                t.require(reduced >= -1e-9, tag + " negative reduced cost");
                if (z.z[x][a] > 1e-9)
                    t.require(reduced <= 1e-9, tag + " complementary slackness");
            }

        const std::string first = emit_lp(d);
        const std::string second = emit_lp(build_hv(c.mdp, std::get<TransienceCertificate>(maximize_lifetime(c.mdp))));
        t.require(first == second, tag + " LP text differs between runs");
        // The parsed text carries the same constraints that z satisfies.
        const auto lp = parse_lp(first);
        for (const auto& [row, terms] : lp.rows) {
            double lhs = 0.0;
            for (const auto& [col, coef] : terms) {
                unsigned x = 0, a = 0;
                std::sscanf(col.c_str(), "z_%u_%u", &x, &a);
                lhs += coef * z.z[x][a];
            }
            t.require(std::abs(lhs - lp.rhs.at(row)) <= 1e-9, tag + " parsed row " + row);
        }
    }
    return t.outcome(std::to_string(kInstances) + " instances");
}

// 13. K = 1 and K* = 1 edge cases.
Outcome edge_cases() {
    Tally t;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        // No transitions at all: every lifetime is one step.
        RateMdp m = gen_transient(case_spec(seed, SubstochasticRates{}));
        for (auto& acts : m.actions)
            for (auto& a : acts)
                a.transitions.clear();
        const auto cert = std::get<TransienceCertificate>(maximize_lifetime(m));
        t.require(cert.K == 1.0, "seed " + std::to_string(seed) + " K != 1");
        const auto d = build_hv(m, cert);
        t.require(d.beta() == 0.0, "seed " + std::to_string(seed) + " beta != 0");
        const Vector v = lift_total_value(howard_pi(d).values, cert.mu);
        Vector greedy(m.num_states());
        for (StateIndex x = 0; x < m.num_states(); ++x) {
            greedy[x] = m.action(x, 0).cost;
            for (const auto& a : m.actions[x])
                greedy[x] = std::min(greedy[x], a.cost);
        }
        t.require(max_abs_diff(v, brute_force_total(m).optimal_value) <= 1e-12 && max_abs_diff(v, greedy) == 0.0,
                  "seed " + std::to_string(seed) + " total cost");

        // Everything jumps to ell, which is then absorbing under every policy.
        const GenSpec spec = case_spec(seed, StochasticRates{});
        const StateIndex ell = seed % spec.n_states;
        const RateMdp h = gen_ht(spec, ell, 1.0);
        const auto ht = std::get<HtCertificate>(check_ht(h, ell));
        t.require(ht.K_star == 1.0, "seed " + std::to_string(seed) + " K* != 1");
        const auto dh = build_hvag(h, ht);
        t.require(dh.beta() == 0.0, "seed " + std::to_string(seed) + " average beta != 0");
        const auto sol = extract_average_solution(howard_pi(dh).values, ht);
        double best = h.action(ell, 0).cost;
        for (const auto& a : h.actions[ell])
            best = std::min(best, a.cost);
        t.require(std::abs(sol.w - best) <= 1e-12, "seed " + std::to_string(seed) + " w");
        t.require(std::abs(brute_force_average(h, ell).optimal_value[0] - best) <= 1e-12,
                  "seed " + std::to_string(seed) + " oracle w");
    }
    return t.outcome("40 instances of each kind");
}

// 14. Howard iteration counts next to m K log K.
Outcome iteration_report(const std::string& path) {
    Tally t;
    std::ofstream csv(path);
    t.require(static_cast<bool>(csv), "cannot write " + path);
    csv << "seed,states,pairs,K,beta,m_K_logK,howard_iterations,howard_switches,dantzig_iterations\n";
    std::size_t rows = 0, most = 0;
    for (const auto& c : transient_cases()) {
        const auto d = build_hv(c.mdp, c.cert);
        const auto h = howard_pi(d);
        const auto z = dantzig_pi(d);
        const double m = static_cast<double>(c.mdp.num_pairs());
        csv << c.seed << ',' << c.mdp.num_states() << ',' << c.mdp.num_pairs() << ',' << c.cert.K << ','
            << d.beta() << ',' << m * c.cert.K * std::log(c.cert.K) << ',' << h.iterations << ','
            << h.switches << ',' << z.iterations << '\n';
        most = std::max(most, h.iterations);
        ++rows;
    }
    csv.close();
    t.require(rows == transient_cases().size() && csv.good(), "report incomplete");
    return t.outcome(std::to_string(rows) + " rows written to " + path + ", at most " + std::to_string(most) +
                     " Howard iterations");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    std::string report = "howard_iterations.csv";
    app.add_option("--criterion", only, "Run a single criterion (1-14)")->check(CLI::Range(1, 14));
    app.add_option("--report", report, "CSV written by criterion 14");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"closed-form total cost", closed_form_total},
        {"closed-form average cost", closed_form_average},
        {"total-cost oracle equivalence", oracle_total},
        {"average-cost oracle equivalence", oracle_average},
        {"policy value scaling", policy_value_scaling},
        {"average-cost policy identities", policy_identities_average},
        {"discounted backup identity", lemma_identity},
        {"lifetime value iteration cross-check", mu_cross_check},
        {"transform validity", transform_validity},
        {"similarity invariance", similarity_invariance},
        {"rate scaling keeps transience", beta_scaling},
        {"LP consistency", lp_consistency},
        {"K = 1 and K* = 1 edge cases", edge_cases},
        {"iteration-count report", [&] { return iteration_report(report); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<std::size_t>(only) != i + 1)
            continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s  %2zu  %-40s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
