#pragma once

#include "selfmod/environment.hpp"
#include "selfmod/histories.hpp"
#include "selfmod/names.hpp"
#include "selfmod/policy.hpp"
#include "selfmod/rational.hpp"
#include "selfmod/utility.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace selfmod {

// The three value-function families. They differ in which utility function
// scores a future step and in which policy picks future actions:
//   Hedonistic: each step scored by the utility its own action installed;
//               future actions picked by the evaluated policy.
//   Ignorant:   fixed current utility; future actions picked by the
//               evaluated policy, modifications ignored.
//   Realistic:  fixed current utility; future actions picked by whatever
//               policy the previous action installed.
enum class ValueKind { Hedonistic, Ignorant, Realistic };

std::string_view to_string(ValueKind kind);
ValueKind parse_value_kind(std::string_view name);

enum class TieBreakMode { Lexicographic, Seeded };

struct TieBreak {
    TieBreakMode mode = TieBreakMode::Lexicographic;
    std::uint64_t seed = 0;

    std::string describe() const;
};

struct ValueReport {
    Rational value;
    ValueKind kind;
    std::size_t horizon;          // absolute horizon of the experiment
    Rational bound;               // truncation error bound for this value
    History at;
    std::optional<Action> action; // present for Q-values, absent for V-values
};

namespace detail {
class EngineCore;
}

// Exact finite-horizon evaluator for one experiment: an environment (also
// used as the agent's belief), a namespace, an initial utility u1, a
// discount configuration and a tie-break rule. All values are truncated at
// the absolute horizon H: a value at a history of length d sums H-d
// discounted utility terms, and carries the bound gamma^(H-d)/(1-gamma) on
// the distance to its infinite-horizon counterpart.
//
// Evaluation is pure; the engine only mutates internal memo tables, which
// are safe for concurrent use. Memoization keys on world projections
// whenever every policy involved is modification-independent, and on full
// histories otherwise; `use_projection_memo=false` forces full-history
// keys, which the decoration-invariance tests use to exercise both paths.
class ValueEngine {
public:
    ValueEngine(EnvironmentPtr env, NameSpacePtr ns, UtilityPtr u1, DiscountConfig cfg,
                TieBreak tie_break = {}, ValueKind resolve_kind = ValueKind::Realistic,
                bool use_projection_memo = true);

    const EnvironmentPtr& environment() const;
    const NameSpacePtr& name_space() const;
    const UtilityPtr& initial_utility() const;
    const DiscountConfig& config() const;
    const TieBreak& tie_break() const;

    // All candidate actions, sorted by (world action id, binding name).
    // This is the deterministic tie-break order.
    std::vector<Action> action_space() const;

    // The interpreter: what a binding name makes the agent do next. In
    // policy mode a plain lookup; in utility mode the optimal policy for
    // the named utility (realistic pairing by default, hedonistic pairing
    // for hedonistic experiments). Resolution bottoms out at the horizon.
    PolicyPtr resolve(const ModTarget& mod) const;

    // Q-values of the three families. `pi` picks the future actions for
    // the hedonistic and ignorant families; the realistic family needs no
    // policy argument because the action itself installs the next one.
    // A null `u` means the engine's initial utility.
    ValueReport q_hedonistic(const History& h, const Action& a, const PolicyPtr& pi) const;
    ValueReport q_ignorant(const History& h, const Action& a, const PolicyPtr& pi,
                           const UtilityPtr& u = nullptr) const;
    ValueReport q_realistic(const History& h, const Action& a, const UtilityPtr& u = nullptr) const;

    ValueReport q_value(ValueKind kind, const History& h, const Action& a, const PolicyPtr& pi,
                        const UtilityPtr& u = nullptr) const;

    // V = Q at the action the policy picks.
    ValueReport v_value(ValueKind kind, const History& h, const PolicyPtr& pi,
                        const UtilityPtr& u = nullptr) const;

    // Optimal values: V with the maximizing continuation of the same kind.
    ValueReport v_optimal(ValueKind kind, const History& h, const UtilityPtr& u = nullptr) const;
    ValueReport q_optimal(ValueKind kind, const History& h, const Action& a,
                          const UtilityPtr& u = nullptr) const;

    // Brute-force oracle: evaluates the same quantity as q_value by
    // exhaustively enumerating all weighted continuations up to the
    // horizon, with no recursion sharing and no memo. Kept independent so
    // the recursive implementation can be checked against it.
    ValueReport q_iterative(ValueKind kind, const History& h, const Action& a, const PolicyPtr& pi,
                            const UtilityPtr& u = nullptr, std::size_t cap = 1000000) const;

    // Argmax of the kind's Q over the action space, ties broken by the
    // engine's tie-break rule.
    Action optimal_action(ValueKind kind, const History& h, const UtilityPtr& u = nullptr) const;

    // Lazily materialized table assigning optimal_action everywhere.
    PolicyPtr build_optimal_policy(ValueKind kind, const UtilityPtr& u = nullptr) const;

    // The modification-free shadow of `pi`: plays the world actions that
    // `pi` and its successors would produce along the unique positive
    // extension of each world history; lexicographically-first action
    // where no positive extension exists.
    WorldPolicyPtr associated_world_policy(const PolicyPtr& pi) const;

    // Standard (modification-free) value functions over world histories,
    // used as the independent reference model.
    Rational standard_q(const WorldHistory& h, const WorldAction& a, const WorldPolicyPtr& pi,
                        const UtilityPtr& u = nullptr) const;
    Rational standard_v(const WorldHistory& h, const WorldPolicyPtr& pi,
                        const UtilityPtr& u = nullptr) const;
    Rational standard_optimal_v(const WorldHistory& h, const UtilityPtr& u = nullptr) const;
    WorldAction standard_optimal_action(const WorldHistory& h, const UtilityPtr& u = nullptr) const;
    WorldPolicyPtr build_optimal_world_policy(const UtilityPtr& u = nullptr) const;

private:
    std::shared_ptr<detail::EngineCore> core_;
};

}  // namespace selfmod
