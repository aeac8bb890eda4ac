#pragma once

#include "selfmod/histories.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace selfmod {

// Deterministic policy over full histories. Implementations must be
// immutable after construction (internal caches excepted) so instances can
// be shared freely across threads.
class Policy {
public:
    virtual ~Policy() = default;

    virtual Action decide(const History& h) const = 0;

    // True when decisions depend only on the world projection of the input.
    virtual bool mod_independent() const = 0;

    // Binding names this policy can emit, when statically known. Lazily
    // computed policies return nullopt and are validated dynamically.
    virtual std::optional<std::vector<std::string>> referenced_names() const { return std::nullopt; }

    virtual std::string describe() const = 0;
};

using PolicyPtr = std::shared_ptr<const Policy>;

// Policy over world histories, for the modification-free standard model.
class WorldPolicy {
public:
    virtual ~WorldPolicy() = default;
    virtual WorldAction decide(const WorldHistory& h) const = 0;
    virtual std::string describe() const = 0;
};

using WorldPolicyPtr = std::shared_ptr<const WorldPolicy>;

PolicyPtr make_constant_policy(Action a);

// Depth-2 table read as a suffix rule: the root entry decides at the empty
// history, the step entries decide everywhere else based on the last step.
// The table must be total over the instance's steps.
PolicyPtr make_suffix_policy(Action root, std::map<Step, Action> by_step, std::string label);

// Same, keyed on world steps only; modification-independent by construction.
PolicyPtr make_world_suffix_policy(Action root, std::map<WorldStep, Action> by_step, std::string label);

// `base` with finitely many decisions replaced, keyed on world projections.
// Preserves the base policy's modification-independence.
PolicyPtr make_override_policy(PolicyPtr base, std::map<WorldHistory, Action> overrides, std::string label);

// Lifts a world policy into the self-modification model: always emits the
// fixed binding name, i.e. never modifies.
PolicyPtr make_non_modifying_policy(WorldPolicyPtr world, std::string name, ModMode mode);

WorldPolicyPtr make_constant_world_policy(WorldAction a);
WorldPolicyPtr make_explicit_world_policy(std::map<WorldHistory, WorldAction> table, WorldAction fallback,
                                          std::string label);
// `base` with one decision replaced; negative-control helper.
WorldPolicyPtr make_perturbed_world_policy(WorldPolicyPtr base, WorldHistory at, WorldAction action);

}  // namespace selfmod
