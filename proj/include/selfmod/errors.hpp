#pragma once

#include <stdexcept>
#include <string>

namespace selfmod {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed experiment configuration (bad gamma, unknown symbol, bad file).
// The CLI maps this to exit code 2.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// An exhaustive enumeration grew past the configured cap.
// The CLI maps this to exit code 3.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

}  // namespace selfmod
