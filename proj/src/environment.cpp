#include "selfmod/environment.hpp"

#include "selfmod/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace selfmod {

Distribution::Distribution(std::vector<std::pair<Percept, Rational>> weights)
    : weights_(std::move(weights)) {
    std::sort(weights_.begin(), weights_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Rational total = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i > 0 && weights_[i].first == weights_[i - 1].first) {
            throw ConfigError("duplicate percept in distribution: '" + weights_[i].first.id + "'");
        }
        if (weights_[i].second < 0) {
            throw ConfigError("negative percept weight for '" + weights_[i].first.id + "'");
        }
        total += weights_[i].second;
    }
    if (total != 1) {
        throw ConfigError("percept weights sum to " + format_rational(total) + ", expected 1");
    }
    if (support().empty()) throw ConfigError("distribution has empty support");
}

Rational Distribution::weight(const Percept& e) const {
    auto it = std::lower_bound(weights_.begin(), weights_.end(), e,
                               [](const auto& w, const Percept& p) { return w.first < p; });
    if (it == weights_.end() || it->first != e) return Rational(0);
    return it->second;
}

std::vector<Percept> Distribution::support() const {
    std::vector<Percept> out;
    for (const auto& [e, w] : weights_) {
        if (w > 0) out.push_back(e);
    }
    return out;
}

namespace {

std::string suffix_key(const WorldHistory& h) {
    std::string key;
    for (std::size_t i = 0; i < h.steps().size(); ++i) {
        if (i > 0) key += '|';
        key += h.steps()[i].action.id + "." + h.steps()[i].percept.id;
    }
    return key;
}

}  // namespace

Environment::Environment(std::string name,
                         Alphabet actions,
                         Alphabet percepts,
                         std::vector<Rule> rules,
                         bool full_support,
                         std::map<std::string, Rational> rewards)
    : name_(std::move(name)),
      actions_(std::move(actions)),
      percepts_(std::move(percepts)),
      full_support_(full_support),
      rewards_(std::move(rewards)) {
    require_valid_symbol(name_, "environment name");
    for (Rule& rule : rules) {
        if (!actions_.contains(rule.action.id)) {
            throw ConfigError("rule references unknown action '" + rule.action.id + "'");
        }
        for (const WorldStep& step : rule.suffix.steps()) {
            if (!actions_.contains(step.action.id) || !percepts_.contains(step.percept.id)) {
                throw ConfigError("rule suffix references unknown symbol in '" + suffix_key(rule.suffix) + "'");
            }
        }
        for (const auto& [e, w] : rule.percepts.weights()) {
            if (!percepts_.contains(e.id)) {
                throw ConfigError("rule emits unknown percept '" + e.id + "'");
            }
            if (full_support_ && w <= 0) {
                throw ConfigError("environment '" + name_ + "' declares full support but percept '" +
                                  e.id + "' has zero weight in some rule");
            }
        }
        if (full_support_ && rule.percepts.weights().size() != percepts_.size()) {
            throw ConfigError("environment '" + name_ + "' declares full support but a rule omits percepts");
        }
        markov_order_ = std::max(markov_order_, rule.suffix.length());
        auto key = std::make_pair(suffix_key(rule.suffix), rule.action.id);
        if (!rules_.emplace(key, std::move(rule.percepts)).second) {
            throw ConfigError("duplicate rule for suffix '" + key.first + "' action '" + key.second + "'");
        }
    }
    for (const std::string& a : actions_.symbols()) {
        if (rules_.find({std::string(), a}) == rules_.end()) {
            throw ConfigError("environment '" + name_ + "' lacks a default rule for action '" + a + "'");
        }
    }
    for (const auto& [e, r] : rewards_) {
        if (!percepts_.contains(e)) {
            throw ConfigError("reward listed for unknown percept '" + e + "'");
        }
        if (r < 0 || r > 1) {
            throw ConfigError("reward for percept '" + e + "' outside [0,1]");
        }
    }
    if (!rewards_.empty() && rewards_.size() != percepts_.size()) {
        throw ConfigError("environment '" + name_ + "' must list a reward for every percept or none");
    }
}

const Distribution& Environment::percept_distribution(const WorldHistory& h, const WorldAction& a) const {
    if (!actions_.contains(a.id)) {
        throw ConfigError("unknown world action '" + a.id + "' for environment '" + name_ + "'");
    }
    std::size_t longest = std::min(markov_order_, h.length());
    for (std::size_t k = longest + 1; k-- > 0;) {
        auto it = rules_.find({suffix_key(h.suffix(k)), a.id});
        if (it != rules_.end()) return it->second;
    }
    // Unreachable: construction guarantees a default row per action.
    throw Error("no percept rule resolved for action '" + a.id + "'");
}

Rational Environment::reward(const Percept& e) const {
    auto it = rewards_.find(e.id);
    if (it == rewards_.end()) {
        throw ConfigError("environment '" + name_ + "' has no reward for percept '" + e.id + "'");
    }
    return it->second;
}

void Environment::validate(std::size_t horizon) const {
    std::vector<WorldHistory> frontier{WorldHistory{}};
    for (std::size_t depth = 0; depth < horizon; ++depth) {
        std::vector<WorldHistory> next;
        for (const WorldHistory& h : frontier) {
            for (const std::string& a : actions_.symbols()) {
                const Distribution& dist = percept_distribution(h, WorldAction{a});
                Rational total = 0;
                for (const auto& [e, w] : dist.weights()) total += w;
                if (total != 1) {
                    throw ConfigError("non-normalized distribution at '" + format_world_history(h) +
                                      "' action '" + a + "'");
                }
                if (full_support_) {
                    for (const std::string& e : percepts_.symbols()) {
                        if (dist.weight(Percept{e}) <= 0) {
                            throw ConfigError("full-support violation at '" + format_world_history(h) +
                                              "' action '" + a + "' percept '" + e + "'");
                        }
                    }
                }
                for (const Percept& e : dist.support()) {
                    next.push_back(h.extended(WorldAction{a}, e));
                }
            }
        }
        frontier = std::move(next);
    }
}

namespace {

EnvironmentPtr make_two_button(bool noisy) {
    Alphabet actions({"a_hack", "a_safe"});
    Alphabet percepts({"e_bad", "e_good"});
    std::vector<Environment::Rule> rules;
    auto dist = [](Rational good, Rational bad) {
        return Distribution({{Percept{"e_good"}, good}, {Percept{"e_bad"}, bad}});
    };
    if (noisy) {
        rules.push_back({WorldHistory{}, WorldAction{"a_safe"}, dist({9, 10}, {1, 10})});
        rules.push_back({WorldHistory{}, WorldAction{"a_hack"}, dist({1, 10}, {9, 10})});
    } else {
        rules.push_back({WorldHistory{}, WorldAction{"a_safe"}, Distribution({{Percept{"e_good"}, 1}})});
        rules.push_back({WorldHistory{}, WorldAction{"a_hack"}, Distribution({{Percept{"e_bad"}, 1}})});
    }
    std::map<std::string, Rational> rewards{{"e_bad", 0}, {"e_good", 1}};
    return std::make_shared<Environment>(noisy ? "NoisyButton" : "TwoButton", actions, percepts,
                                         std::move(rules), noisy, std::move(rewards));
}

// Working pays off, idling does not, and a loss makes the next move harder.
// The interesting part is not the world dynamics but the name space the
// experiments pair with it: a "delude" binding that swaps in the
// constant-one utility.
EnvironmentPtr make_delusion_button() {
    Alphabet actions({"a_idle", "a_work"});
    Alphabet percepts({"e_off", "e_on"});
    auto dist = [](Rational on, Rational off) {
        return Distribution({{Percept{"e_on"}, on}, {Percept{"e_off"}, off}});
    };
    WorldHistory after_work_off(std::vector<WorldStep>{{WorldAction{"a_work"}, Percept{"e_off"}}});
    WorldHistory after_idle_off(std::vector<WorldStep>{{WorldAction{"a_idle"}, Percept{"e_off"}}});
    std::vector<Environment::Rule> rules;
    rules.push_back({WorldHistory{}, WorldAction{"a_work"}, dist({3, 4}, {1, 4})});
    rules.push_back({WorldHistory{}, WorldAction{"a_idle"}, dist({1, 8}, {7, 8})});
    rules.push_back({after_work_off, WorldAction{"a_work"}, dist({1, 2}, {1, 2})});
    rules.push_back({after_idle_off, WorldAction{"a_work"}, dist({1, 2}, {1, 2})});
    std::map<std::string, Rational> rewards{{"e_off", 0}, {"e_on", 1}};
    return std::make_shared<Environment>("DelusionButton", actions, percepts, std::move(rules), true,
                                         std::move(rewards));
}

// Three percepts and an order-2 suffix dependence: two aggressive losses in
// a row make attacking even worse.
EnvironmentPtr make_chess_toy() {
    Alphabet actions({"a_attack", "a_castle"});
    Alphabet percepts({"e_draw", "e_loss", "e_win"});
    auto dist = [](Rational win, Rational loss, Rational draw) {
        return Distribution({{Percept{"e_win"}, win}, {Percept{"e_loss"}, loss}, {Percept{"e_draw"}, draw}});
    };
    WorldStep attack_loss{WorldAction{"a_attack"}, Percept{"e_loss"}};
    WorldStep castle_draw{WorldAction{"a_castle"}, Percept{"e_draw"}};
    std::vector<Environment::Rule> rules;
    rules.push_back({WorldHistory{}, WorldAction{"a_attack"}, dist({1, 2}, {1, 3}, {1, 6})});
    rules.push_back({WorldHistory{}, WorldAction{"a_castle"}, dist({1, 6}, {1, 6}, {2, 3})});
    rules.push_back({WorldHistory(std::vector<WorldStep>{attack_loss}), WorldAction{"a_attack"},
                     dist({1, 4}, {1, 2}, {1, 4})});
    rules.push_back({WorldHistory(std::vector<WorldStep>{attack_loss, attack_loss}), WorldAction{"a_attack"},
                     dist({1, 8}, {3, 4}, {1, 8})});
    rules.push_back({WorldHistory(std::vector<WorldStep>{castle_draw}), WorldAction{"a_attack"},
                     dist({2, 3}, {1, 6}, {1, 6})});
    std::map<std::string, Rational> rewards{{"e_draw", {1, 2}}, {"e_loss", 0}, {"e_win", 1}};
    return std::make_shared<Environment>("ChessToy", actions, percepts, std::move(rules), true,
                                         std::move(rewards));
}

}  // namespace

EnvironmentPtr builtin_environment(const std::string& name) {
    if (name == "TwoButton") return make_two_button(false);
    if (name == "NoisyButton") return make_two_button(true);
    if (name == "DelusionButton") return make_delusion_button();
    if (name == "ChessToy") return make_chess_toy();
    throw ConfigError("unknown environment '" + name + "'");
}

std::vector<std::string> builtin_environment_names() {
    return {"TwoButton", "NoisyButton", "DelusionButton", "ChessToy"};
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

WorldHistory parse_suffix(const std::string& token, const std::string& origin) {
    if (token == "*") return WorldHistory{};
    return parse_suffix_token(token, origin);
}

std::pair<Percept, Rational> parse_weight(const std::string& token, const std::string& origin) {
    std::size_t colon = token.find(':');
    if (colon == std::string::npos) {
        throw ConfigError(origin + ": malformed weight '" + token + "' (expected percept:weight)");
    }
    return {Percept{token.substr(0, colon)}, parse_rational(token.substr(colon + 1))};
}

}  // namespace

EnvironmentPtr parse_environment_text(const std::string& text, const std::string& origin) {
    std::string name;
    std::vector<std::string> actions, percepts;
    bool full_support = false;
    std::map<std::string, Rational> rewards;
    std::vector<Environment::Rule> rules;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = origin + ":" + std::to_string(lineno);
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        const std::string& kw = tokens[0];
        if (kw == "env" && tokens.size() == 2) {
            name = tokens[1];
        } else if (kw == "actions" && tokens.size() >= 2) {
            actions.assign(tokens.begin() + 1, tokens.end());
        } else if (kw == "percepts" && tokens.size() >= 2) {
            percepts.assign(tokens.begin() + 1, tokens.end());
        } else if (kw == "full_support" && tokens.size() == 2) {
            if (tokens[1] != "true" && tokens[1] != "false") {
                throw ConfigError(where + ": full_support must be true or false");
            }
            full_support = tokens[1] == "true";
        } else if (kw == "reward" && tokens.size() == 3) {
            rewards[tokens[1]] = parse_rational(tokens[2]);
        } else if (kw == "rule" && tokens.size() >= 4) {
            Environment::Rule rule;
            rule.suffix = parse_suffix(tokens[1], where);
            rule.action = WorldAction{tokens[2]};
            std::vector<std::pair<Percept, Rational>> weights;
            for (std::size_t i = 3; i < tokens.size(); ++i) {
                weights.push_back(parse_weight(tokens[i], where));
            }
            try {
                rule.percepts = Distribution(std::move(weights));
            } catch (const ConfigError& e) {
                throw ConfigError(where + ": " + e.what());
            }
            rules.push_back(std::move(rule));
        } else {
            throw ConfigError(where + ": unrecognized directive '" + kw + "'");
        }
    }
    if (name.empty()) throw ConfigError(origin + ": missing 'env <name>' directive");
    if (actions.empty()) throw ConfigError(origin + ": missing 'actions' directive");
    if (percepts.empty()) throw ConfigError(origin + ": missing 'percepts' directive");
    return std::make_shared<Environment>(name, Alphabet(actions), Alphabet(percepts), std::move(rules),
                                         full_support, std::move(rewards));
}

EnvironmentPtr load_environment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open environment file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_environment_text(buf.str(), path);
}

}  // namespace selfmod
