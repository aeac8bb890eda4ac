#include "selfmod/rational.hpp"

#include "selfmod/errors.hpp"

#include <cctype>

namespace selfmod {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ConfigError("empty rational literal: '" + std::string(text) + "'");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw ConfigError("malformed rational literal: '" + std::string(text) + "'");
        }
        BigInt d{std::string(den)};
        if (d == 0) throw ConfigError("zero denominator in rational literal: '" + std::string(text) + "'");
        value = Rational(BigInt{std::string(num)}, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
            throw ConfigError("malformed decimal literal: '" + std::string(text) + "'");
        }
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt w = whole.empty() ? BigInt(0) : BigInt{std::string(whole)};
        value = Rational(w * scale + BigInt{std::string(frac)}, scale);
    } else {
        if (!all_digits(s)) throw ConfigError("malformed rational literal: '" + std::string(text) + "'");
        value = Rational(BigInt{std::string(s)});
    }
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_pow(const Rational& r, unsigned n) {
    Rational acc = 1;
    Rational base = r;
    while (n > 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

}  // namespace selfmod
