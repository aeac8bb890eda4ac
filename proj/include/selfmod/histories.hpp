#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace selfmod {

// Whether the second action component names a replacement policy or a
// replacement utility function. One experiment runs in one mode.
enum class ModMode { PolicyMod, UtilityMod };

std::string_view to_string(ModMode mode);

// Symbols (action ids, percept ids, binding names) are opaque strings over
// [A-Za-z0-9_-]. The other characters are reserved by the textual history
// and catalog formats.
bool is_valid_symbol(std::string_view s);
void require_valid_symbol(std::string_view s, std::string_view what);

struct WorldAction {
    std::string id;
    auto operator<=>(const WorldAction&) const = default;
};

struct Percept {
    std::string id;
    auto operator<=>(const Percept&) const = default;
};

// The self-modification half of an action: the name of the policy or
// utility function that takes over at the next step. Keeping the current
// one is expressed by naming it again; there is no "no-op" marker.
struct ModTarget {
    std::string name;
    ModMode mode = ModMode::UtilityMod;
    auto operator<=>(const ModTarget&) const = default;
};

struct Action {
    WorldAction world;
    ModTarget mod;
    auto operator<=>(const Action&) const = default;
};

struct Step {
    Action action;
    Percept percept;
    auto operator<=>(const Step&) const = default;
};

struct WorldStep {
    WorldAction action;
    Percept percept;
    auto operator<=>(const WorldStep&) const = default;
};

// A history with the modification components stripped.
class WorldHistory {
public:
    WorldHistory() = default;
    explicit WorldHistory(std::vector<WorldStep> steps) : steps_(std::move(steps)) {}

    const std::vector<WorldStep>& steps() const { return steps_; }
    std::size_t length() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }

    WorldHistory extended(const WorldAction& a, const Percept& e) const;
    WorldHistory prefix(std::size_t length) const;
    // Last `count` steps (fewer if the history is shorter).
    WorldHistory suffix(std::size_t count) const;

    auto operator<=>(const WorldHistory&) const = default;

private:
    std::vector<WorldStep> steps_;
};

// Alternating action-percept sequence. The empty history is the state
// before anything has happened.
class History {
public:
    History() = default;
    explicit History(std::vector<Step> steps) : steps_(std::move(steps)) {}

    const std::vector<Step>& steps() const { return steps_; }
    std::size_t length() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }

    History extended(const Action& a, const Percept& e) const;
    History prefix(std::size_t length) const;

    auto operator<=>(const History&) const = default;

private:
    std::vector<Step> steps_;
};

// Drops every modification component; length preserving.
WorldHistory world_projection(const History& h);

// Canonical text form, round-trip exact.
//   history:       a1[p2] e1 | a2[p3] e2      (empty history -> "")
//   world history: a1 e1 | a2 e2
std::string format_history(const History& h);
std::string format_world_history(const WorldHistory& h);
std::string format_action(const Action& a);
std::string format_step(const Step& s);

History parse_history(std::string_view text, ModMode mode);
WorldHistory parse_world_history(std::string_view text);
Action parse_action(std::string_view text, ModMode mode);

// Compact world-history suffix token used by the catalog formats:
// action.percept|action.percept (oldest step first).
WorldHistory parse_suffix_token(std::string_view token, const std::string& origin);

// Sorted, duplicate-free set of symbols. Iteration order is the
// lexicographic order used for deterministic tie-breaking.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    const std::vector<std::string>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    bool contains(std::string_view s) const;

    auto operator<=>(const Alphabet&) const = default;

private:
    std::vector<std::string> symbols_;
};

}  // namespace selfmod
