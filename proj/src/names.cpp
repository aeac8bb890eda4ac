#include "selfmod/names.hpp"

#include "selfmod/errors.hpp"

namespace selfmod {

void NameSpace::rebuild_index() {
    sorted_names_.clear();
    for (const auto& [name, p] : policies_) sorted_names_.push_back(name);
    for (const auto& [name, u] : utilities_) sorted_names_.push_back(name);
    // std::map iteration is already sorted.
}

NameSpacePtr NameSpace::policy_mode(std::map<std::string, PolicyPtr> bindings) {
    if (bindings.empty()) throw ConfigError("a namespace must bind at least one name");
    auto ns = std::shared_ptr<NameSpace>(new NameSpace());
    ns->mode_ = ModMode::PolicyMod;
    ns->policies_ = std::move(bindings);
    for (const auto& [name, p] : ns->policies_) {
        require_valid_symbol(name, "binding name");
        if (!p) throw ConfigError("name '" + name + "' bound to null policy");
    }
    ns->rebuild_index();
    return ns;
}

NameSpacePtr NameSpace::utility_mode(std::map<std::string, UtilityPtr> bindings) {
    if (bindings.empty()) throw ConfigError("a namespace must bind at least one name");
    auto ns = std::shared_ptr<NameSpace>(new NameSpace());
    ns->mode_ = ModMode::UtilityMod;
    ns->utilities_ = std::move(bindings);
    for (const auto& [name, u] : ns->utilities_) {
        require_valid_symbol(name, "binding name");
        if (!u) throw ConfigError("name '" + name + "' bound to null utility");
    }
    ns->rebuild_index();
    return ns;
}

std::size_t NameSpace::size() const { return policies_.size() + utilities_.size(); }

bool NameSpace::contains(const std::string& name) const {
    return policies_.count(name) > 0 || utilities_.count(name) > 0;
}

PolicyPtr NameSpace::policy(const std::string& name) const {
    if (mode_ != ModMode::PolicyMod) {
        throw Error("namespace is in utility mode; '" + name + "' does not name a policy");
    }
    auto it = policies_.find(name);
    if (it == policies_.end()) throw Error("unbound policy name '" + name + "'");
    return it->second;
}

UtilityPtr NameSpace::utility(const std::string& name) const {
    if (mode_ != ModMode::UtilityMod) {
        throw Error("namespace is in policy mode; '" + name + "' does not name a utility");
    }
    auto it = utilities_.find(name);
    if (it == utilities_.end()) throw Error("unbound utility name '" + name + "'");
    return it->second;
}

std::string NameSpace::fresh_name() const {
    const char* prefix = mode_ == ModMode::PolicyMod ? "p" : "u";
    std::size_t counter = next_counter_;
    while (contains(prefix + std::to_string(counter))) ++counter;
    return prefix + std::to_string(counter);
}

std::pair<NameSpacePtr, std::string> NameSpace::extended(PolicyPtr p) const {
    if (mode_ != ModMode::PolicyMod) throw Error("cannot bind a policy in a utility-mode namespace");
    if (!p) throw ConfigError("cannot bind a null policy");
    std::string name = fresh_name();
    auto ns = std::shared_ptr<NameSpace>(new NameSpace(*this));
    ns->policies_[name] = p;
    ns->next_counter_ = next_counter_ + 1;
    ns->rebuild_index();
    if (auto refs = p->referenced_names()) {
        for (const std::string& ref : *refs) {
            if (!ns->contains(ref)) {
                throw ConfigError("policy '" + p->describe() + "' references unbound name '" + ref + "'");
            }
        }
    }
    return {ns, name};
}

std::pair<NameSpacePtr, std::string> NameSpace::extended(UtilityPtr u) const {
    if (mode_ != ModMode::UtilityMod) throw Error("cannot bind a utility in a policy-mode namespace");
    if (!u) throw ConfigError("cannot bind a null utility");
    std::string name = fresh_name();
    auto ns = std::shared_ptr<NameSpace>(new NameSpace(*this));
    ns->utilities_[name] = std::move(u);
    ns->next_counter_ = next_counter_ + 1;
    ns->rebuild_index();
    return {ns, name};
}

NameSpacePtr default_utility_namespace(const UtilityPtr& u1) {
    return NameSpace::utility_mode({{"delude", constant_one_utility()}, {"keep", u1}});
}

NameSpacePtr default_policy_namespace(const EnvironmentPtr& env) {
    std::map<std::string, PolicyPtr> bindings;
    for (const std::string& a : env->actions().symbols()) {
        std::string name = "p_" + a;
        bindings[name] = make_non_modifying_policy(make_constant_world_policy(WorldAction{a}), name,
                                                   ModMode::PolicyMod);
    }
    return NameSpace::policy_mode(std::move(bindings));
}

std::optional<ValidationIssue> validate_history(const History& h, const NameSpace& ns,
                                                const Environment& env) {
    for (std::size_t i = 0; i < h.steps().size(); ++i) {
        const Step& s = h.steps()[i];
        if (!env.actions().contains(s.action.world.id)) {
            return ValidationIssue{i, "world action '" + s.action.world.id + "' not in the action alphabet"};
        }
        if (!env.percepts().contains(s.percept.id)) {
            return ValidationIssue{i, "percept '" + s.percept.id + "' not in the percept alphabet"};
        }
        if (s.action.mod.mode != ns.mode()) {
            return ValidationIssue{i, "modification mode mismatch at '" + format_action(s.action) + "'"};
        }
        if (!ns.contains(s.action.mod.name)) {
            return ValidationIssue{i, "name '" + s.action.mod.name + "' is not bound in the namespace"};
        }
    }
    return std::nullopt;
}

}  // namespace selfmod
