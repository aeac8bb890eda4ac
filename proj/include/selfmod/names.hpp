#pragma once

#include "selfmod/environment.hpp"
#include "selfmod/histories.hpp"
#include "selfmod/policy.hpp"
#include "selfmod/utility.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace selfmod {

class NameSpace;
using NameSpacePtr = std::shared_ptr<const NameSpace>;

// Finite interpreter from binding names to policies (policy-modification
// mode) or to utility functions (utility-modification mode). Name sets are
// always finite and proper: a name resolves to one explicit object, never
// to "all policies". Immutable; extension returns a new namespace.
class NameSpace {
public:
    static NameSpacePtr policy_mode(std::map<std::string, PolicyPtr> bindings);
    static NameSpacePtr utility_mode(std::map<std::string, UtilityPtr> bindings);

    ModMode mode() const { return mode_; }
    std::size_t size() const;
    bool contains(const std::string& name) const;
    // Sorted; this is the deterministic tie-break order over names.
    const std::vector<std::string>& names() const { return sorted_names_; }

    PolicyPtr policy(const std::string& name) const;
    UtilityPtr utility(const std::string& name) const;

    // The name the next extension will assign: a mode prefix plus a
    // monotone counter, skipping collisions with existing names.
    std::string fresh_name() const;

    // Adds a fresh binding; existing bindings are untouched and resolve as
    // before. The new policy may reference its own fresh name. Rejects
    // policies whose statically known referenced names are not all bound
    // in the extended namespace.
    std::pair<NameSpacePtr, std::string> extended(PolicyPtr p) const;
    std::pair<NameSpacePtr, std::string> extended(UtilityPtr u) const;

private:
    NameSpace() = default;

    ModMode mode_ = ModMode::UtilityMod;
    std::map<std::string, PolicyPtr> policies_;
    std::map<std::string, UtilityPtr> utilities_;
    std::vector<std::string> sorted_names_;
    std::size_t next_counter_ = 1;

    void rebuild_index();
};

// Default experiment namespaces.
//   utility mode: {delude -> constant one, keep -> u1}
//   policy mode:  one non-modifying lift per world action,
//                 named p_<action id>
NameSpacePtr default_utility_namespace(const UtilityPtr& u1);
NameSpacePtr default_policy_namespace(const EnvironmentPtr& env);

struct ValidationIssue {
    std::size_t step;  // 0-based index of the first offending step
    std::string message;
};

// Checks every step of `h` against the environment's alphabets and the
// namespace's bound names. Returns the first problem found, if any.
std::optional<ValidationIssue> validate_history(const History& h, const NameSpace& ns,
                                                const Environment& env);

}  // namespace selfmod
