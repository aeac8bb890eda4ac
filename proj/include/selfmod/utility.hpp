#pragma once

#include "selfmod/environment.hpp"
#include "selfmod/histories.hpp"
#include "selfmod/policy.hpp"
#include "selfmod/rational.hpp"

#include <functional>
#include <limits>
#include <memory>
#include <string>

namespace selfmod {

// Instantaneous utility of a world history, always in [0,1]. Utilities are
// defined on world histories only, so they cannot see modifications.
class UtilityFunction {
public:
    using Eval = std::function<Rational(const WorldHistory&)>;

    // `suffix_order` is the number of trailing world steps the evaluation
    // actually depends on, or `unbounded` when it reads the whole history.
    static constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

    UtilityFunction(std::string label, Eval eval, std::size_t suffix_order = unbounded);

    const std::string& label() const { return label_; }
    std::size_t suffix_order() const { return suffix_order_; }

    // Evaluates and range-checks the result.
    Rational value(const WorldHistory& h) const;

private:
    std::string label_;
    Eval eval_;
    std::size_t suffix_order_;
};

using UtilityPtr = std::shared_ptr<const UtilityFunction>;

// u(.) = 1 everywhere: the "deluded" utility.
UtilityPtr constant_one_utility();
UtilityPtr constant_utility(std::string label, Rational value);

// The reinforcement-learning special case: utility of a history is the
// reward component of its last percept; 0 at the empty history.
UtilityPtr reward_utility(const EnvironmentPtr& env);

// Scores 1 exactly when the latest world action is the one `world` picks at
// the preceding history; 0 otherwise (and 0 at the empty history). Optimal
// behavior for this utility replays `world`.
UtilityPtr policy_indicator_utility(WorldPolicyPtr world, std::string label = "u_pi");

// Declarative text format shared with the environment catalog
// (see docs/formats.md).
UtilityPtr parse_utility_text(const std::string& text, const std::string& origin = "<string>");
UtilityPtr load_utility_file(const std::string& path);

struct DiscountConfig {
    Rational gamma;        // in (0,1), exclusive
    std::size_t horizon;   // number of steps evaluated, >= 1

    DiscountConfig(Rational gamma, std::size_t horizon);
};

// Sum_{k=0}^{H-1} gamma^k u(prefix of length t+k-1); the start index t is
// 1-based, so t = 1 reproduces the total return from the empty history.
Rational discounted_return(const UtilityFunction& u, const WorldHistory& stream, std::size_t t,
                           const DiscountConfig& cfg);

// gamma^H / (1-gamma): how far an H-term value can drift from its
// infinite-horizon counterpart.
Rational truncation_bound(const DiscountConfig& cfg);

// (1 - gamma^H) / (1-gamma): the largest value an H-term sum can reach.
Rational value_ceiling(const DiscountConfig& cfg);

// Tolerance used by the certificate checks: twice the truncation bound plus
// a small absolute slack.
Rational theorem_tolerance(const DiscountConfig& cfg);

}  // namespace selfmod
