#include "hvmdp/lp.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace hvmdp {

namespace {

constexpr std::size_t kTermsPerLine = 6;

std::string format_coefficient(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Term {
    double coefficient;
    std::string variable;
};

void write_expression(std::ostringstream& os, const std::vector<Term>& terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        const bool negative = std::signbit(t.coefficient) && t.coefficient != 0.0;
        if (i > 0 && i % kTermsPerLine == 0)
            os << "\n   ";
        if (i == 0)
            os << (negative ? "- " : "");
        else
            os << (negative ? " - " : " + ");
        os << format_coefficient(std::abs(t.coefficient)) << ' ' << t.variable;
    }
}

} // namespace

std::string lp_variable_name(StateIndex x, ActionIndex a) {
    return "z_" + std::to_string(x) + "_" + std::to_string(a);
}

std::string emit_lp(const DiscountedMdp& dmdp) {
    const auto& base = dmdp.base();
    const std::size_t n = base.num_states();
    const double beta = dmdp.beta();

    // Column-wise scatter of -beta p(x|y,a) into row x.
    std::vector<std::vector<Term>> rows(n);
    std::vector<Term> objective;
    for (StateIndex y = 0; y < n; ++y) {
        for (ActionIndex a = 0; a < base.actions[y].size(); ++a) {
            const auto& act = base.actions[y][a];
            const std::string name = lp_variable_name(y, a);
            objective.push_back({act.cost, name});
            double self = 1.0;
            std::vector<std::pair<StateIndex, double>> others;
            for (const auto& t : act.transitions) {
                if (t.to == y)
                    self -= beta * t.rate;
                else if (beta != 0.0 && t.rate != 0.0)
                    others.emplace_back(t.to, -beta * t.rate);
            }
            rows[y].push_back({self, name});
            for (const auto& [x, coef] : others)
                rows[x].push_back({coef, name});
        }
    }

    std::ostringstream os;
    os << "\\ occupation-measure LP of a discounted MDP\n";
    os << "\\ states: " << n << ", columns: " << base.num_pairs()
       << ", beta: " << format_coefficient(beta) << ", absorbing state: " << dmdp.absorbing_state()
       << ", origin: " << to_string(dmdp.origin().kind) << "\n";
    os << "Minimize\n obj: ";
    write_expression(os, objective);
    os << "\nSubject To\n";
    for (StateIndex x = 0; x < n; ++x) {
        // Row terms arrive grouped by column state; keep that deterministic order.
        os << " flow_" << x << ": ";
        write_expression(os, rows[x]);
        os << " = 1\n";
    }
    os << "Bounds\n";
    for (StateIndex x = 0; x < n; ++x)
        for (ActionIndex a = 0; a < base.actions[x].size(); ++a)
            os << " " << lp_variable_name(x, a) << " >= 0\n";
    os << "End\n";
    return os.str();
}

} // namespace hvmdp
