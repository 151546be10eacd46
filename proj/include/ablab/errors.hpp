#pragma once

#include <stdexcept>
#include <string>

namespace ablab {

// Probe point where a model is singular (on a wire, on top of the charge, ...).
struct SingularityError : std::domain_error {
    explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

// Structurally invalid physics setup: non-positive radius, empty grid, zero box, ...
struct ConfigurationError : std::invalid_argument {
    explicit ConfigurationError(const std::string& what) : std::invalid_argument(what) {}
};

// An integrand produced a non-finite sample.
struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// Scenario/config file violates the schema. `location` is a JSON-pointer-ish
// path to the offending key so the CLI can print actionable messages.
struct SchemaError : std::runtime_error {
    std::string location;
    SchemaError(const std::string& loc, const std::string& what)
        : std::runtime_error(loc + ": " + what), location(loc) {}
};

}  // namespace ablab
