#include "selfmod/histories.hpp"

#include "selfmod/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace selfmod {

std::string_view to_string(ModMode mode) {
    return mode == ModMode::PolicyMod ? "policy" : "utility";
}

bool is_valid_symbol(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    });
}

void require_valid_symbol(std::string_view s, std::string_view what) {
    if (!is_valid_symbol(s)) {
        throw ConfigError("invalid " + std::string(what) + " symbol: '" + std::string(s) + "'");
    }
}

WorldHistory WorldHistory::extended(const WorldAction& a, const Percept& e) const {
    std::vector<WorldStep> steps = steps_;
    steps.push_back(WorldStep{a, e});
    return WorldHistory(std::move(steps));
}

WorldHistory WorldHistory::prefix(std::size_t length) const {
    if (length >= steps_.size()) return *this;
    return WorldHistory(std::vector<WorldStep>(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(length)));
}

WorldHistory WorldHistory::suffix(std::size_t count) const {
    if (count >= steps_.size()) return *this;
    return WorldHistory(std::vector<WorldStep>(steps_.end() - static_cast<std::ptrdiff_t>(count), steps_.end()));
}

History History::extended(const Action& a, const Percept& e) const {
    std::vector<Step> steps = steps_;
    steps.push_back(Step{a, e});
    return History(std::move(steps));
}

History History::prefix(std::size_t length) const {
    if (length >= steps_.size()) return *this;
    return History(std::vector<Step>(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(length)));
}

WorldHistory world_projection(const History& h) {
    std::vector<WorldStep> steps;
    steps.reserve(h.length());
    for (const Step& s : h.steps()) {
        steps.push_back(WorldStep{s.action.world, s.percept});
    }
    return WorldHistory(std::move(steps));
}

std::string format_action(const Action& a) {
    return a.world.id + "[" + a.mod.name + "]";
}

std::string format_step(const Step& s) {
    return format_action(s.action) + " " + s.percept.id;
}

std::string format_history(const History& h) {
    std::string out;
    for (std::size_t i = 0; i < h.steps().size(); ++i) {
        if (i > 0) out += " | ";
        out += format_step(h.steps()[i]);
    }
    return out;
}

std::string format_world_history(const WorldHistory& h) {
    std::string out;
    for (std::size_t i = 0; i < h.steps().size(); ++i) {
        if (i > 0) out += " | ";
        out += h.steps()[i].action.id + " " + h.steps()[i].percept.id;
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, std::string_view sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            parts.push_back(s.substr(pos));
            return parts;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
}

}  // namespace

Action parse_action(std::string_view text, ModMode mode) {
    std::string_view s = trim(text);
    auto open = s.find('[');
    if (open == std::string_view::npos || s.back() != ']') {
        throw ConfigError("malformed action: '" + std::string(text) + "' (expected id[name])");
    }
    std::string_view world = s.substr(0, open);
    std::string_view name = s.substr(open + 1, s.size() - open - 2);
    require_valid_symbol(world, "world action");
    require_valid_symbol(name, "binding name");
    return Action{WorldAction{std::string(world)}, ModTarget{std::string(name), mode}};
}

History parse_history(std::string_view text, ModMode mode) {
    std::string_view s = trim(text);
    if (s.empty()) return History{};
    std::vector<Step> steps;
    for (std::string_view part : split(s, "|")) {
        part = trim(part);
        auto space = part.rfind(' ');
        if (space == std::string_view::npos) {
            throw ConfigError("malformed history step: '" + std::string(part) + "'");
        }
        Action a = parse_action(part.substr(0, space), mode);
        std::string_view percept = trim(part.substr(space + 1));
        require_valid_symbol(percept, "percept");
        steps.push_back(Step{a, Percept{std::string(percept)}});
    }
    return History(std::move(steps));
}

WorldHistory parse_world_history(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) return WorldHistory{};
    std::vector<WorldStep> steps;
    for (std::string_view part : split(s, "|")) {
        part = trim(part);
        auto space = part.find(' ');
        if (space == std::string_view::npos) {
            throw ConfigError("malformed world history step: '" + std::string(part) + "'");
        }
        std::string_view action = trim(part.substr(0, space));
        std::string_view percept = trim(part.substr(space + 1));
        require_valid_symbol(action, "world action");
        require_valid_symbol(percept, "percept");
        steps.push_back(WorldStep{WorldAction{std::string(action)}, Percept{std::string(percept)}});
    }
    return WorldHistory(std::move(steps));
}

WorldHistory parse_suffix_token(std::string_view token, const std::string& origin) {
    std::vector<WorldStep> steps;
    std::size_t pos = 0;
    while (pos <= token.size()) {
        std::size_t bar = token.find('|', pos);
        std::string_view step = token.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
        std::size_t dot = step.find('.');
        if (dot == std::string_view::npos) {
            throw ConfigError(origin + ": malformed suffix step '" + std::string(step) +
                              "' (expected action.percept)");
        }
        std::string_view a = step.substr(0, dot);
        std::string_view e = step.substr(dot + 1);
        require_valid_symbol(a, "world action");
        require_valid_symbol(e, "percept");
        steps.push_back(WorldStep{WorldAction{std::string(a)}, Percept{std::string(e)}});
        if (bar == std::string_view::npos) break;
        pos = bar + 1;
    }
    return WorldHistory(std::move(steps));
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw ConfigError("alphabet must be non-empty");
    for (const std::string& s : symbols_) require_valid_symbol(s, "alphabet");
    std::sort(symbols_.begin(), symbols_.end());
    auto dup = std::adjacent_find(symbols_.begin(), symbols_.end());
    if (dup != symbols_.end()) {
        throw ConfigError("duplicate alphabet symbol: '" + *dup + "'");
    }
}

bool Alphabet::contains(std::string_view s) const {
    return std::binary_search(symbols_.begin(), symbols_.end(), s);
}

}  // namespace selfmod
