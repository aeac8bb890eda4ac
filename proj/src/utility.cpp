#include "selfmod/utility.hpp"

#include "selfmod/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace selfmod {

UtilityFunction::UtilityFunction(std::string label, Eval eval, std::size_t suffix_order)
    : label_(std::move(label)), eval_(std::move(eval)), suffix_order_(suffix_order) {
    require_valid_symbol(label_, "utility label");
    if (!eval_) throw ConfigError("utility '" + label_ + "' has no evaluation function");
}

Rational UtilityFunction::value(const WorldHistory& h) const {
    Rational v = eval_(h);
    if (v < 0 || v > 1) {
        throw Error("utility '" + label_ + "' returned " + format_rational(v) + " at '" +
                    format_world_history(h) + "', outside [0,1]");
    }
    return v;
}

UtilityPtr constant_one_utility() { return constant_utility("one", 1); }

UtilityPtr constant_utility(std::string label, Rational value) {
    if (value < 0 || value > 1) {
        throw ConfigError("constant utility '" + label + "' outside [0,1]");
    }
    return std::make_shared<UtilityFunction>(
        std::move(label), [value](const WorldHistory&) { return value; }, 0);
}

UtilityPtr reward_utility(const EnvironmentPtr& env) {
    if (!env->has_rewards()) {
        throw ConfigError("environment '" + env->name() + "' has no reward table");
    }
    return std::make_shared<UtilityFunction>(
        "reward",
        [env](const WorldHistory& h) -> Rational {
            if (h.empty()) return 0;
            return env->reward(h.steps().back().percept);
        },
        1);
}

UtilityPtr policy_indicator_utility(WorldPolicyPtr world, std::string label) {
    return std::make_shared<UtilityFunction>(
        std::move(label),
        [world](const WorldHistory& h) -> Rational {
            if (h.empty()) return 0;
            const WorldStep& last = h.steps().back();
            return last.action == world->decide(h.prefix(h.length() - 1)) ? 1 : 0;
        },
        UtilityFunction::unbounded);
}

UtilityPtr parse_utility_text(const std::string& text, const std::string& origin) {
    std::string label;
    Rational fallback = 0;
    bool have_default = false;
    // Longest matching suffix wins, ties impossible (one entry per suffix).
    auto entries = std::make_shared<std::map<std::string, Rational>>();
    std::size_t order = 0;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = origin + ":" + std::to_string(lineno);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (tokens[0] == "utility" && tokens.size() == 2) {
            label = tokens[1];
        } else if (tokens[0] == "default" && tokens.size() == 2) {
            fallback = parse_rational(tokens[1]);
            have_default = true;
        } else if (tokens[0] == "entry" && tokens.size() == 3) {
            if (tokens[1] == "*") throw ConfigError(where + ": use 'default' instead of 'entry *'");
            WorldHistory suffix = parse_suffix_token(tokens[1], where);
            Rational v = parse_rational(tokens[2]);
            if (v < 0 || v > 1) throw ConfigError(where + ": utility value outside [0,1]");
            std::string key = format_world_history(suffix);
            if (!entries->emplace(key, v).second) {
                throw ConfigError(where + ": duplicate entry for suffix '" + tokens[1] + "'");
            }
            order = std::max(order, suffix.length());
        } else {
            throw ConfigError(where + ": unrecognized directive '" + tokens[0] + "'");
        }
    }
    if (label.empty()) throw ConfigError(origin + ": missing 'utility <name>' directive");
    if (!have_default) throw ConfigError(origin + ": missing 'default <value>' directive");
    if (fallback < 0 || fallback > 1) throw ConfigError(origin + ": default value outside [0,1]");

    auto eval = [entries, fallback, order](const WorldHistory& h) -> Rational {
        std::size_t longest = std::min(order, h.length());
        for (std::size_t k = longest + 1; k-- > 1;) {
            auto it = entries->find(format_world_history(h.suffix(k)));
            if (it != entries->end()) return it->second;
        }
        return fallback;
    };
    return std::make_shared<UtilityFunction>(label, eval, order);
}

UtilityPtr load_utility_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open utility file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_utility_text(buf.str(), path);
}

DiscountConfig::DiscountConfig(Rational g, std::size_t h) : gamma(std::move(g)), horizon(h) {
    if (gamma <= 0 || gamma >= 1) {
        throw ConfigError("gamma must lie strictly between 0 and 1, got " + format_rational(gamma));
    }
    if (horizon < 1) throw ConfigError("horizon must be at least 1");
}

Rational discounted_return(const UtilityFunction& u, const WorldHistory& stream, std::size_t t,
                           const DiscountConfig& cfg) {
    if (t < 1) throw ConfigError("start index t must be >= 1");
    if (stream.length() + 2 < t + cfg.horizon) {
        throw ConfigError("history stream too short: need " + std::to_string(t + cfg.horizon - 2) +
                          " steps, have " + std::to_string(stream.length()));
    }
    Rational total = 0;
    Rational discount = 1;
    for (std::size_t k = 0; k < cfg.horizon; ++k) {
        total += discount * u.value(stream.prefix(t + k - 1));
        discount *= cfg.gamma;
    }
    return total;
}

Rational truncation_bound(const DiscountConfig& cfg) {
    return rational_pow(cfg.gamma, static_cast<unsigned>(cfg.horizon)) / (Rational(1) - cfg.gamma);
}

Rational value_ceiling(const DiscountConfig& cfg) {
    return (Rational(1) - rational_pow(cfg.gamma, static_cast<unsigned>(cfg.horizon))) /
           (Rational(1) - cfg.gamma);
}

Rational theorem_tolerance(const DiscountConfig& cfg) {
    return 2 * truncation_bound(cfg) + Rational(1, 1000000000);
}

}  // namespace selfmod
