#pragma once

#include <numbers>
#include <string>

namespace ablab {

inline constexpr double pi = std::numbers::pi;

enum class UnitSystem { si, natural };

// Physical constants bundle. Every formula in the library takes one of these
// explicitly so the same code runs in SI and in natural units.
struct Constants {
    double hbar;
    double mu0;
    double eps0;
    double c;
    UnitSystem unit_system;

    static Constants si();
    static Constants natural();
    static Constants from_name(const std::string& name);
};

}  // namespace ablab
