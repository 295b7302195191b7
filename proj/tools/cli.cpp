#include "cli.hpp"

#include "hvmdp/hvmdp.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace hvmdp::cli {

namespace {

struct CliConfig {
    std::string subcommand;
    std::string input;
    std::string output;
    std::string method = "howard";
    std::string kind = "hv";
    std::optional<double> beta;
    double tolerance = 1e-10;
    double action_tolerance = 1e-9;
    double acoe_tolerance = 1e-9;
    std::optional<std::size_t> state;
    bool all_states = false;
    bool oracle = false;

    // gen
    std::string gen_kind = "transient";
    std::string spec_file;
    GenSpec spec;
    double delta = 0.2;
    double alpha = 0.2;
    std::size_t ell = 0;
    bool rejection = false;
};

/// Raised for violated modelling assumptions (exit code 2).
class AssumptionFailure : public Error {
public:
    using Error::Error;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string vec(std::span<const double> v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + num(v[i]);
    return s + "]";
}

std::string ints(std::span<const std::size_t> v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

std::string sets(const ActionSets& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? ", " : "") + ints(a[i]);
    return s + "]";
}

SolveMethod parse_method(const std::string& m) {
    if (m == "vi")
        return SolveMethod::ValueIteration;
    if (m == "dantzig")
        return SolveMethod::DantzigPI;
    return SolveMethod::HowardPI;
}

RateMdp load_instance(const std::string& path, std::ostream& out) {
    RateMdp mdp = parse_rate_mdp(read_text_file(path));
    const auto report = validate(mdp);
    if (!report.valid)
        throw ModelError("invalid instance: " + report.error);
    out << "states: " << mdp.num_states() << "\n";
    out << "state_action_pairs: " << mdp.num_pairs() << "\n";
    out << "rate_class: " << to_string(report.rate_class) << "\n";
    out << "max_row_sum: " << num(report.max_row_sum) << "\n";
    return mdp;
}

void write_output(const CliConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output.empty() || cfg.output == "-") {
        out << text;
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f)
        throw Error("cannot write " + cfg.output);
    f << text;
}

TransienceCertificate require_transient(const RateMdp& mdp, std::ostream& out) {
    auto result = maximize_lifetime(mdp);
    if (auto* w = std::get_if<NonTransienceWitness>(&result)) {
        out << "verdict: not transient\n";
        throw AssumptionFailure("instance is not transient: " + describe(*w));
    }
    auto cert = std::get<TransienceCertificate>(std::move(result));
    out << "verdict: transient\n";
    out << "K: " << num(cert.K) << "\n";
    out << "mu: " << vec(cert.mu) << "\n";
    return cert;
}

HtCertificate require_ht(const RateMdp& mdp, std::optional<std::size_t> state, std::ostream& out) {
    if (!state) {
        const auto candidates = find_ht_states(mdp);
        if (candidates.empty()) {
            out << "verdict: HT fails at every state\n";
            throw AssumptionFailure("HT does not hold at any state");
        }
        state = candidates.front().ell;
    }
    if (*state >= mdp.num_states())
        throw ModelError("state " + std::to_string(*state) + " out of range");
    out << "state: " << *state << "\n";
    auto result = check_ht(mdp, *state);
    if (auto* w = std::get_if<NonTransienceWitness>(&result)) {
        out << "verdict: HT fails\n";
        throw AssumptionFailure("HT does not hold at state " + std::to_string(*state) + ": " +
                                describe(*w));
    }
    auto cert = std::get<HtCertificate>(std::move(result));
    out << "verdict: HT holds\n";
    out << "K_star: " << num(cert.K_star) << "\n";
    out << "mu: " << vec(cert.mu) << "\n";
    return cert;
}

void print_solve_report(const SolveReport& r, std::ostream& out) {
    out << "method: " << to_string(r.method) << "\n";
    out << "iterations: " << r.iterations << "\n";
    out << "switches: " << r.switches << "\n";
    out << "bellman_residual: " << num(r.bellman_residual) << "\n";
    out << "seconds: " << num(r.seconds) << "\n";
    out << "discounted_values: " << vec(r.values) << "\n";
}

SolverOptions solver_options(const CliConfig& cfg) {
    SolverOptions opt;
    opt.tolerance = cfg.tolerance;
    opt.action_tolerance = cfg.action_tolerance;
    return opt;
}

int cmd_check(const CliConfig& cfg, std::ostream& out) {
    const RateMdp mdp = load_instance(cfg.input, out);
    if (cfg.all_states) {
        out << "assumption: HT\n";
        const auto states = find_ht_states(mdp);
        out << "ht_states: [";
        for (std::size_t i = 0; i < states.size(); ++i)
            out << (i ? ", " : "") << "{state: " << states[i].ell << ", K_star: " << num(states[i].K_star) << "}";
        out << "]\n";
        return states.empty() ? kAssumptionFailure : kSuccess;
    }
    if (cfg.state) {
        out << "assumption: HT\n";
        require_ht(mdp, cfg.state, out);
        return kSuccess;
    }
    out << "assumption: T\n";
    const auto cert = require_transient(mdp, out);
    out << "maximizing_policy: " << ints(cert.maximizing_policy.choice) << "\n";
    return kSuccess;
}

int cmd_solve_total(const CliConfig& cfg, std::ostream& out) {
    const RateMdp mdp = load_instance(cfg.input, out);
    const auto cert = require_transient(mdp, out);
    const DiscountedMdp dmdp = build_hv(mdp, cert, cfg.beta);
    out << "beta: " << num(dmdp.beta()) << "\n";

    const SolveReport report = solve(dmdp, parse_method(cfg.method), solver_options(cfg));
    print_solve_report(report, out);

    const Vector v = lift_total_value(report.values, cert.mu);
    const std::size_t n = mdp.num_states();
    const StationaryPolicy policy{{report.policy.choice.begin(), report.policy.choice.begin() + n}};
    const ActionSets actions(report.optimal_actions.begin(), report.optimal_actions.begin() + n);
    out << "values: " << vec(v) << "\n";
    out << "policy: " << ints(policy.choice) << "\n";
    out << "optimal_actions: " << sets(actions) << "\n";

    if (cfg.oracle) {
        const auto oracle = brute_force_total(mdp);
        out << "oracle_values: " << vec(oracle.optimal_value) << "\n";
        out << "oracle_max_deviation: " << num(max_abs_diff(oracle.optimal_value, v)) << "\n";
        bool listed = false;
        for (const auto& phi : oracle.optimal_policies)
            listed = listed || phi == policy;
        out << "oracle_policy_optimal: " << (listed ? "true" : "false") << "\n";
    }
    return kSuccess;
}

int cmd_solve_average(const CliConfig& cfg, std::ostream& out) {
    const RateMdp mdp = load_instance(cfg.input, out);
    if (validate(mdp).rate_class != RateClass::Stochastic)
        throw AssumptionFailure("average-cost pipeline requires stochastic rates");
    const auto cert = require_ht(mdp, cfg.state, out);
    const DiscountedMdp dmdp = build_hvag(mdp, cert, cfg.beta);
    out << "beta: " << num(dmdp.beta()) << "\n";

    const SolveReport report = solve(dmdp, parse_method(cfg.method), solver_options(cfg));
    print_solve_report(report, out);

    const AverageSolution sol = extract_average_solution(report.values, cert);
    out << "w: " << num(sol.w) << "\n";
    out << "h: " << vec(sol.h) << "\n";
    const std::size_t n = mdp.num_states();
    out << "policy: " << ints(std::span(report.policy.choice).first(n)) << "\n";

    AcoeReport acoe;
    try {
        acoe = verify_acoe(mdp, sol, cfg.acoe_tolerance);
    } catch (const AcoeViolation& e) {
        out << "acoe_max_residual: " << num(e.report().max_abs_residual) << "\n";
        out << "residuals: " << vec(e.report().residuals) << "\n";
        throw;
    }
    out << "optimal_actions: " << sets(acoe.optimal_actions) << "\n";
    out << "acoe_max_residual: " << num(acoe.max_abs_residual) << "\n";
    out << "residuals: " << vec(acoe.residuals) << "\n";
    const ActionSets discounted(report.optimal_actions.begin(), report.optimal_actions.begin() + n);
    out << "action_sets_coincide: " << (discounted == acoe.optimal_actions ? "true" : "false") << "\n";

    if (cfg.oracle) {
        const auto oracle = brute_force_average(mdp, cert.ell);
        out << "oracle_w: " << num(oracle.optimal_value.front()) << "\n";
        out << "oracle_max_deviation: " << num(std::abs(oracle.optimal_value.front() - sol.w)) << "\n";
    }
    return kSuccess;
}

DiscountedMdp transform(const CliConfig& cfg, std::ostream& log) {
    const RateMdp mdp = load_instance(cfg.input, log);
    if (cfg.kind == "hvag") {
        const auto cert = require_ht(mdp, cfg.state, log);
        return build_hvag(mdp, cert, cfg.beta);
    }
    const auto cert = require_transient(mdp, log);
    return build_hv(mdp, cert, cfg.beta);
}

int cmd_transform(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    // When the document goes to stdout the diagnostics go to stderr.
    std::ostream& log = cfg.output.empty() || cfg.output == "-" ? err : out;
    const DiscountedMdp dmdp = transform(cfg, log);
    write_output(cfg, serialize(dmdp), out);
    return kSuccess;
}

int cmd_emit_lp(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ostream& log = cfg.output.empty() || cfg.output == "-" ? err : out;
    const DiscountedMdp dmdp = transform(cfg, log);
    write_output(cfg, emit_lp(dmdp), out);
    return kSuccess;
}

int cmd_gen(CliConfig cfg, std::ostream& out) {
    GenSpec spec = cfg.spec;
    if (!cfg.spec_file.empty())
        spec = parse_gen_spec(read_text_file(cfg.spec_file));
    RateMdp mdp;
    if (cfg.gen_kind == "ht") {
        if (!cfg.spec_file.empty() && !std::holds_alternative<StochasticRates>(spec.rate_class))
            throw ModelError("ht generation requires a stochastic rate class");
        spec.rate_class = StochasticRates{};
        mdp = cfg.rejection ? gen_ht_rejection(spec, cfg.ell) : gen_ht(spec, cfg.ell, cfg.alpha);
    } else if (cfg.gen_kind == "general") {
        if (cfg.spec_file.empty())
            spec.rate_class = GeneralRateSums{};
        mdp = generate(spec);
    } else {
        if (cfg.spec_file.empty())
            spec.rate_class = SubstochasticRates{cfg.delta, std::max(cfg.delta, 0.5)};
        mdp = gen_transient(spec);
    }
    write_output(cfg, serialize(mdp), out);
    return kSuccess;
}

void add_input(CLI::App* sub, CliConfig& cfg) {
    sub->add_option("input", cfg.input, "Instance file (JSON)")->required()->check(CLI::ExistingFile);
}

void add_method(CLI::App* sub, CliConfig& cfg) {
    sub->add_option("--method", cfg.method, "Discounted solver")
        ->check(CLI::IsMember({"vi", "howard", "dantzig"}));
    sub->add_option("--tol", cfg.tolerance, "Value iteration tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--action-tol", cfg.action_tolerance, "Optimal-action membership tolerance")
        ->check(CLI::PositiveNumber);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Total-cost and average-cost MDPs through discounted reductions", "hvmdp"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "Check transience (T) or HT at a state");
    add_input(check, cfg);
    auto* check_state = check->add_option("--state", cfg.state, "Check HT at this state");
    check->add_flag("--all-states", cfg.all_states, "List every state at which HT holds")
        ->excludes(check_state);

    auto* total = app.add_subcommand("solve-total", "Solve a transient total-cost MDP");
    add_input(total, cfg);
    add_method(total, cfg);
    total->add_option("--beta", cfg.beta, "Discount factor in [(K-1)/K, 1)");
    total->add_flag("--oracle", cfg.oracle, "Compare against brute-force enumeration");

    auto* average = app.add_subcommand("solve-average", "Solve an average-cost MDP under HT");
    add_input(average, cfg);
    add_method(average, cfg);
    average->add_option("--state", cfg.state, "Distinguished state (default: smallest K*)");
    average->add_option("--beta", cfg.beta, "Discount factor in [(K*-1)/K*, 1)");
    average->add_option("--acoe-tol", cfg.acoe_tolerance, "Optimality-equation residual tolerance")
        ->check(CLI::PositiveNumber);
    average->add_flag("--oracle", cfg.oracle, "Compare against brute-force enumeration");

    auto* trans = app.add_subcommand("transform", "Write the transformed discounted instance");
    auto* lp = app.add_subcommand("emit-lp", "Write the LP of the transformed instance");
    for (auto* sub : {trans, lp}) {
        add_input(sub, cfg);
        sub->add_option("--kind", cfg.kind, "Transformation")->check(CLI::IsMember({"hv", "hvag"}));
        sub->add_option("--state", cfg.state, "Distinguished state for hvag");
        sub->add_option("--beta", cfg.beta, "Discount factor override");
        sub->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
    }

    auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
    gen->add_option("--kind", cfg.gen_kind, "Instance family")
        ->check(CLI::IsMember({"transient", "ht", "general"}));
    auto* spec_opt = gen->add_option("--spec", cfg.spec_file, "Generator spec (JSON)")->check(CLI::ExistingFile);
    std::vector<CLI::Option*> spec_fields = {
        gen->add_option("--states", cfg.spec.n_states, "Number of states"),
        gen->add_option("--max-actions", cfg.spec.max_actions, "Maximum actions per state"),
        gen->add_option("--seed", cfg.spec.seed, "Random seed"),
        gen->add_option("--cost-min", cfg.spec.cost_min, "Lower end of the cost range"),
        gen->add_option("--cost-max", cfg.spec.cost_max, "Upper end of the cost range"),
        gen->add_option("--density", cfg.spec.density, "Transition density in (0, 1]"),
        gen->add_option("--delta", cfg.delta, "Minimum kill probability (transient)"),
    };
    for (auto* o : spec_fields)
        o->excludes(spec_opt);
    gen->add_option("--alpha", cfg.alpha, "Minimum probability into the distinguished state (ht)");
    gen->add_option("--ell", cfg.ell, "Distinguished state (ht)");
    gen->add_flag("--rejection", cfg.rejection, "Rejection-sample HT instances instead of minorizing");
    gen->add_option("-o,--output", cfg.output, "Output file (default: stdout)");

    std::vector<char*> argv;
    std::vector<std::string> storage(args);
    for (auto& s : storage)
        argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (check->parsed())
            return cmd_check(cfg, out);
        if (total->parsed())
            return cmd_solve_total(cfg, out);
        if (average->parsed())
            return cmd_solve_average(cfg, out);
        if (trans->parsed())
            return cmd_transform(cfg, out, err);
        if (lp->parsed())
            return cmd_emit_lp(cfg, out, err);
        if (gen->parsed())
            return cmd_gen(cfg, out);
    } catch (const AssumptionFailure& e) {
        err << "error: " << e.what() << "\n";
        return kAssumptionFailure;
    } catch (const AcoeViolation& e) {
        err << "error: " << e.what() << "\n";
        return kAssumptionFailure;
    } catch (const ParseError& e) {
        err << "error: " << cfg.input << ": " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

} // namespace hvmdp::cli
