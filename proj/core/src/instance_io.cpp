#include "hvmdp/instance_io.hpp"

#include "hvmdp/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <unordered_map>

namespace hvmdp {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what, 0, 0);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // Convert the byte offset into a 1-based line and column.
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::ostringstream os;
        os << "syntax error at line " << line << ", column " << column << ": " << e.what();
        throw ParseError(os.str(), line, column);
    }
}

void allow_only(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
    if (!obj.is_object())
        schema_error(path, "expected an object");
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (const char* allowed : keys)
            known = known || k == allowed;
        if (!known)
            schema_error(path, "unknown field '" + k + "'");
    }
}

const json& require(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        schema_error(path, std::string("missing field '") + key + "'");
    return *it;
}

double number(const json& v, const std::string& path) {
    if (!v.is_number())
        schema_error(path, "expected a number");
    return v.get<double>();
}

std::size_t index(const json& v, const std::string& path) {
    if (!v.is_number_unsigned())
        schema_error(path, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

const json& array(const json& v, const std::string& path) {
    if (!v.is_array())
        schema_error(path, "expected an array");
    return v;
}

RateMdp rate_mdp_from_json(const json& doc, std::initializer_list<const char*> top_keys) {
    allow_only(doc, "$", top_keys);
    RateMdp mdp;

    const json& states = require(doc, "$", "states");
    std::unordered_map<std::string, StateIndex> by_label;
    std::size_t n = 0;
    if (states.is_array()) {
        n = states.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (!states[i].is_string())
                schema_error("$.states[" + std::to_string(i) + "]", "expected a string label");
            mdp.state_labels.push_back(states[i].get<std::string>());
            if (!by_label.emplace(mdp.state_labels.back(), i).second)
                schema_error("$.states[" + std::to_string(i) + "]", "duplicate label");
        }
    } else {
        n = index(states, "$.states");
    }

    const json& actions = array(require(doc, "$", "actions"), "$.actions");
    if (actions.size() != n)
        schema_error("$.actions", "expected " + std::to_string(n) + " entries, one per state");
    mdp.actions.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        const std::string sp = "$.actions[" + std::to_string(x) + "]";
        for (std::size_t a = 0; a < array(actions[x], sp).size(); ++a) {
            const std::string ap = sp + "[" + std::to_string(a) + "]";
            const json& act = actions[x][a];
            allow_only(act, ap, {"name", "cost", "transitions"});
            ActionData data;
            if (auto it = act.find("name"); it != act.end()) {
                if (!it->is_string())
                    schema_error(ap + ".name", "expected a string");
                data.name = it->get<std::string>();
            }
            data.cost = number(require(act, ap, "cost"), ap + ".cost");
            const json& trans = array(require(act, ap, "transitions"), ap + ".transitions");
            for (std::size_t k = 0; k < trans.size(); ++k) {
                const std::string tp = ap + ".transitions[" + std::to_string(k) + "]";
                allow_only(trans[k], tp, {"to", "rate"});
                const json& to = require(trans[k], tp, "to");
                Transition t;
                if (to.is_string()) {
                    auto found = by_label.find(to.get<std::string>());
                    if (found == by_label.end())
                        schema_error(tp + ".to", "unknown state label '" + to.get<std::string>() + "'");
                    t.to = found->second;
                } else {
                    t.to = index(to, tp + ".to");
                }
                t.rate = number(require(trans[k], tp, "rate"), tp + ".rate");
                data.transitions.push_back(t);
            }
            mdp.actions[x].push_back(std::move(data));
        }
    }
    return mdp;
}

json rate_mdp_to_json(const RateMdp& mdp) {
    json doc;
    if (mdp.state_labels.empty())
        doc["states"] = mdp.num_states();
    else
        doc["states"] = mdp.state_labels;
    json actions = json::array();
    for (const auto& acts : mdp.actions) {
        json state = json::array();
        for (const auto& act : acts) {
            json a;
            if (!act.name.empty())
                a["name"] = act.name;
            a["cost"] = act.cost;
            json trans = json::array();
            for (const auto& t : act.transitions)
                trans.push_back({{"to", t.to}, {"rate", t.rate}});
            a["transitions"] = std::move(trans);
            state.push_back(std::move(a));
        }
        actions.push_back(std::move(state));
    }
    doc["actions"] = std::move(actions);
    return doc;
}

Vector number_array(const json& v, const std::string& path) {
    Vector out;
    for (std::size_t i = 0; i < array(v, path).size(); ++i)
        out.push_back(number(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace

RateMdp parse_rate_mdp(std::string_view text) {
    return rate_mdp_from_json(parse_json(text), {"states", "actions"});
}

std::string serialize(const RateMdp& mdp) {
    return rate_mdp_to_json(mdp).dump(2) + "\n";
}

DiscountedMdp parse_discounted_mdp(std::string_view text) {
    const json doc = parse_json(text);
    RateMdp base = rate_mdp_from_json(doc, {"states", "actions", "discounted"});
    const json& header = require(doc, "$", "discounted");
    allow_only(header, "$.discounted", {"beta", "absorbing_state", "origin"});
    const double beta = number(require(header, "$.discounted", "beta"), "$.discounted.beta");
    const std::size_t absorbing =
        index(require(header, "$.discounted", "absorbing_state"), "$.discounted.absorbing_state");

    TransformOrigin origin;
    if (auto it = header.find("origin"); it != header.end()) {
        const std::string op = "$.discounted.origin";
        allow_only(*it, op, {"kind", "mu", "ell"});
        const json& kind = require(*it, op, "kind");
        if (kind == "hv")
            origin.kind = TransformKind::HV;
        else if (kind == "hvag")
            origin.kind = TransformKind::HVAG;
        else if (kind == "direct")
            origin.kind = TransformKind::Direct;
        else
            schema_error(op + ".kind", "expected \"direct\", \"hv\" or \"hvag\"");
        if (auto mu = it->find("mu"); mu != it->end())
            origin.mu = number_array(*mu, op + ".mu");
        if (auto ell = it->find("ell"); ell != it->end())
            origin.ell = index(*ell, op + ".ell");
    }
    try {
        return make_discounted(std::move(base), absorbing, beta, std::move(origin));
    } catch (const ModelError& e) {
        throw ParseError(std::string("$: ") + e.what(), 0, 0);
    }
}

std::string serialize(const DiscountedMdp& dmdp) {
    json doc = rate_mdp_to_json(dmdp.base());
    json origin;
    origin["kind"] = to_string(dmdp.origin().kind);
    if (!dmdp.origin().mu.empty())
        origin["mu"] = dmdp.origin().mu;
    if (dmdp.origin().ell)
        origin["ell"] = *dmdp.origin().ell;
    doc["discounted"] = {
        {"beta", dmdp.beta()}, {"absorbing_state", dmdp.absorbing_state()}, {"origin", origin}};
    return doc.dump(2) + "\n";
}

GenSpec parse_gen_spec(std::string_view text) {
    const json doc = parse_json(text);
    allow_only(doc, "$", {"n_states", "max_actions", "rate_class", "cost_range", "density", "seed"});
    GenSpec spec;
    if (auto it = doc.find("n_states"); it != doc.end())
        spec.n_states = index(*it, "$.n_states");
    if (auto it = doc.find("max_actions"); it != doc.end())
        spec.max_actions = index(*it, "$.max_actions");
    if (auto it = doc.find("density"); it != doc.end())
        spec.density = number(*it, "$.density");
    if (auto it = doc.find("seed"); it != doc.end())
        spec.seed = index(*it, "$.seed");
    if (auto it = doc.find("cost_range"); it != doc.end()) {
        const Vector r = number_array(*it, "$.cost_range");
        if (r.size() != 2)
            schema_error("$.cost_range", "expected [min, max]");
        spec.cost_min = r[0];
        spec.cost_max = r[1];
    }
    if (auto it = doc.find("rate_class"); it != doc.end()) {
        const std::string rp = "$.rate_class";
        allow_only(*it, rp, {"kind", "kill_prob_range", "row_sum_range"});
        const json& kind = require(*it, rp, "kind");
        if (kind == "stochastic") {
            spec.rate_class = StochasticRates{};
        } else if (kind == "substochastic") {
            const Vector r = number_array(require(*it, rp, "kill_prob_range"), rp + ".kill_prob_range");
            if (r.size() != 2)
                schema_error(rp + ".kill_prob_range", "expected [min, max]");
            spec.rate_class = SubstochasticRates{r[0], r[1]};
        } else if (kind == "general") {
            const Vector r = number_array(require(*it, rp, "row_sum_range"), rp + ".row_sum_range");
            if (r.size() != 2)
                schema_error(rp + ".row_sum_range", "expected [min, max]");
            spec.rate_class = GeneralRateSums{r[0], r[1]};
        } else {
            schema_error(rp + ".kind", "expected \"stochastic\", \"substochastic\" or \"general\"");
        }
    }
    spec.check();
    return spec;
}

std::string serialize(const GenSpec& spec) {
    json doc;
    doc["n_states"] = spec.n_states;
    doc["max_actions"] = spec.max_actions;
    doc["cost_range"] = {spec.cost_min, spec.cost_max};
    doc["density"] = spec.density;
    doc["seed"] = spec.seed;
    std::visit(
        [&doc](const auto& rc) {
            using T = std::decay_t<decltype(rc)>;
            if constexpr (std::is_same_v<T, StochasticRates>)
                doc["rate_class"] = {{"kind", "stochastic"}};
            else if constexpr (std::is_same_v<T, SubstochasticRates>)
                doc["rate_class"] = {{"kind", "substochastic"}, {"kill_prob_range", {rc.kill_min, rc.kill_max}}};
            else
                doc["rate_class"] = {{"kind", "general"}, {"row_sum_range", {rc.row_sum_min, rc.row_sum_max}}};
        },
        spec.rate_class);
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace hvmdp
