#pragma once

#include "selfmod/histories.hpp"
#include "selfmod/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace selfmod {

// Exact probability distribution over percepts.
class Distribution {
public:
    Distribution() = default;
    // Entries must be unique; weights must be non-negative and sum to 1
    // exactly. Percepts omitted from `weights` have probability 0.
    explicit Distribution(std::vector<std::pair<Percept, Rational>> weights);

    const std::vector<std::pair<Percept, Rational>>& weights() const { return weights_; }
    Rational weight(const Percept& e) const;
    std::vector<Percept> support() const;

private:
    std::vector<std::pair<Percept, Rational>> weights_;
};

// A percept model keyed on bounded world-history suffixes. The conditional
// distribution of the next percept depends on the last `markov_order`
// world steps and the current world action, never on recorded
// modifications, so the model is modification-independent by construction.
// It is used both as the true environment and as the agent's belief.
class Environment {
public:
    struct Rule {
        WorldHistory suffix;  // empty suffix = default row
        WorldAction action;
        Distribution percepts;
    };

    Environment(std::string name,
                Alphabet actions,
                Alphabet percepts,
                std::vector<Rule> rules,
                bool full_support,
                std::map<std::string, Rational> rewards = {});

    const std::string& name() const { return name_; }
    const Alphabet& actions() const { return actions_; }
    const Alphabet& percepts() const { return percepts_; }
    bool full_support() const { return full_support_; }
    std::size_t markov_order() const { return markov_order_; }

    // Distribution of the next percept after taking `a` at `h`.
    // The longest matching suffix rule wins; a default row per action is
    // required at construction, so lookup is total over valid actions.
    const Distribution& percept_distribution(const WorldHistory& h, const WorldAction& a) const;

    bool has_rewards() const { return !rewards_.empty(); }
    // Reward component of a percept, in [0,1].
    Rational reward(const Percept& e) const;

    // Walks every reachable (history, action) pair up to `horizon` and
    // rechecks normalization and, if the flag is set, full support.
    void validate(std::size_t horizon) const;

private:
    std::string name_;
    Alphabet actions_;
    Alphabet percepts_;
    bool full_support_ = false;
    std::size_t markov_order_ = 0;
    std::map<std::pair<std::string, std::string>, Distribution> rules_;
    std::map<std::string, Rational> rewards_;
};

using EnvironmentPtr = std::shared_ptr<const Environment>;

// Built-in catalog: TwoButton, NoisyButton, DelusionButton, ChessToy.
EnvironmentPtr builtin_environment(const std::string& name);
std::vector<std::string> builtin_environment_names();

// Declarative plain-text catalog format (see docs/formats.md).
EnvironmentPtr parse_environment_text(const std::string& text, const std::string& origin = "<string>");
EnvironmentPtr load_environment_file(const std::string& path);

}  // namespace selfmod
