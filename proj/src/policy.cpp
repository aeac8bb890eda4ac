#include "selfmod/policy.hpp"

#include "selfmod/errors.hpp"

#include <algorithm>
#include <set>

namespace selfmod {

namespace {

class ConstantPolicy final : public Policy {
public:
    explicit ConstantPolicy(Action a) : action_(std::move(a)) {}

    Action decide(const History&) const override { return action_; }
    bool mod_independent() const override { return true; }
    std::optional<std::vector<std::string>> referenced_names() const override {
        return std::vector<std::string>{action_.mod.name};
    }
    std::string describe() const override { return "always " + format_action(action_); }

private:
    Action action_;
};

class SuffixPolicy final : public Policy {
public:
    SuffixPolicy(Action root, std::map<Step, Action> by_step, std::string label)
        : root_(std::move(root)), by_step_(std::move(by_step)), label_(std::move(label)) {}

    Action decide(const History& h) const override {
        if (h.empty()) return root_;
        auto it = by_step_.find(h.steps().back());
        if (it == by_step_.end()) {
            throw Error("suffix policy '" + label_ + "' undefined at step '" +
                        format_step(h.steps().back()) + "'");
        }
        return it->second;
    }
    bool mod_independent() const override { return false; }
    std::optional<std::vector<std::string>> referenced_names() const override {
        std::set<std::string> names{root_.mod.name};
        for (const auto& [step, a] : by_step_) names.insert(a.mod.name);
        return std::vector<std::string>(names.begin(), names.end());
    }
    std::string describe() const override { return label_; }

private:
    Action root_;
    std::map<Step, Action> by_step_;
    std::string label_;
};

class WorldSuffixPolicy final : public Policy {
public:
    WorldSuffixPolicy(Action root, std::map<WorldStep, Action> by_step, std::string label)
        : root_(std::move(root)), by_step_(std::move(by_step)), label_(std::move(label)) {}

    Action decide(const History& h) const override {
        if (h.empty()) return root_;
        const Step& last = h.steps().back();
        auto it = by_step_.find(WorldStep{last.action.world, last.percept});
        if (it == by_step_.end()) {
            throw Error("world suffix policy '" + label_ + "' undefined at step '" +
                        format_step(last) + "'");
        }
        return it->second;
    }
    bool mod_independent() const override { return true; }
    std::optional<std::vector<std::string>> referenced_names() const override {
        std::set<std::string> names{root_.mod.name};
        for (const auto& [step, a] : by_step_) names.insert(a.mod.name);
        return std::vector<std::string>(names.begin(), names.end());
    }
    std::string describe() const override { return label_; }

private:
    Action root_;
    std::map<WorldStep, Action> by_step_;
    std::string label_;
};

class OverridePolicy final : public Policy {
public:
    OverridePolicy(PolicyPtr base, std::map<WorldHistory, Action> overrides, std::string label)
        : base_(std::move(base)), overrides_(std::move(overrides)), label_(std::move(label)) {}

    Action decide(const History& h) const override {
        auto it = overrides_.find(world_projection(h));
        if (it != overrides_.end()) return it->second;
        return base_->decide(h);
    }
    bool mod_independent() const override { return base_->mod_independent(); }
    std::optional<std::vector<std::string>> referenced_names() const override {
        auto base_names = base_->referenced_names();
        if (!base_names) return std::nullopt;
        std::set<std::string> names(base_names->begin(), base_names->end());
        for (const auto& [h, a] : overrides_) names.insert(a.mod.name);
        return std::vector<std::string>(names.begin(), names.end());
    }
    std::string describe() const override { return label_; }

private:
    PolicyPtr base_;
    std::map<WorldHistory, Action> overrides_;
    std::string label_;
};

class NonModifyingPolicy final : public Policy {
public:
    NonModifyingPolicy(WorldPolicyPtr world, std::string name, ModMode mode)
        : world_(std::move(world)), name_(std::move(name)), mode_(mode) {}

    Action decide(const History& h) const override {
        return Action{world_->decide(world_projection(h)), ModTarget{name_, mode_}};
    }
    bool mod_independent() const override { return true; }
    std::optional<std::vector<std::string>> referenced_names() const override {
        return std::vector<std::string>{name_};
    }
    std::string describe() const override { return "lift(" + world_->describe() + ", " + name_ + ")"; }

private:
    WorldPolicyPtr world_;
    std::string name_;
    ModMode mode_;
};

class ConstantWorldPolicy final : public WorldPolicy {
public:
    explicit ConstantWorldPolicy(WorldAction a) : action_(std::move(a)) {}
    WorldAction decide(const WorldHistory&) const override { return action_; }
    std::string describe() const override { return "always " + action_.id; }

private:
    WorldAction action_;
};

class ExplicitWorldPolicy final : public WorldPolicy {
public:
    ExplicitWorldPolicy(std::map<WorldHistory, WorldAction> table, WorldAction fallback, std::string label)
        : table_(std::move(table)), fallback_(std::move(fallback)), label_(std::move(label)) {}

    WorldAction decide(const WorldHistory& h) const override {
        auto it = table_.find(h);
        return it == table_.end() ? fallback_ : it->second;
    }
    std::string describe() const override { return label_; }

private:
    std::map<WorldHistory, WorldAction> table_;
    WorldAction fallback_;
    std::string label_;
};

class PerturbedWorldPolicy final : public WorldPolicy {
public:
    PerturbedWorldPolicy(WorldPolicyPtr base, WorldHistory at, WorldAction action)
        : base_(std::move(base)), at_(std::move(at)), action_(std::move(action)) {}

    WorldAction decide(const WorldHistory& h) const override {
        return h == at_ ? action_ : base_->decide(h);
    }
    std::string describe() const override {
        return "perturb(" + base_->describe() + " @ '" + format_world_history(at_) + "')";
    }

private:
    WorldPolicyPtr base_;
    WorldHistory at_;
    WorldAction action_;
};

}  // namespace

PolicyPtr make_constant_policy(Action a) { return std::make_shared<ConstantPolicy>(std::move(a)); }

PolicyPtr make_suffix_policy(Action root, std::map<Step, Action> by_step, std::string label) {
    return std::make_shared<SuffixPolicy>(std::move(root), std::move(by_step), std::move(label));
}

PolicyPtr make_world_suffix_policy(Action root, std::map<WorldStep, Action> by_step, std::string label) {
    return std::make_shared<WorldSuffixPolicy>(std::move(root), std::move(by_step), std::move(label));
}

PolicyPtr make_override_policy(PolicyPtr base, std::map<WorldHistory, Action> overrides, std::string label) {
    return std::make_shared<OverridePolicy>(std::move(base), std::move(overrides), std::move(label));
}

PolicyPtr make_non_modifying_policy(WorldPolicyPtr world, std::string name, ModMode mode) {
    return std::make_shared<NonModifyingPolicy>(std::move(world), std::move(name), mode);
}

WorldPolicyPtr make_constant_world_policy(WorldAction a) {
    return std::make_shared<ConstantWorldPolicy>(std::move(a));
}

WorldPolicyPtr make_explicit_world_policy(std::map<WorldHistory, WorldAction> table, WorldAction fallback,
                                          std::string label) {
    return std::make_shared<ExplicitWorldPolicy>(std::move(table), std::move(fallback), std::move(label));
}

WorldPolicyPtr make_perturbed_world_policy(WorldPolicyPtr base, WorldHistory at, WorldAction action) {
    return std::make_shared<PerturbedWorldPolicy>(std::move(base), std::move(at), std::move(action));
}

}  // namespace selfmod
