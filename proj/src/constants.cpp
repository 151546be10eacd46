#include "ablab/constants.hpp"

#include <stdexcept>

namespace ablab {

Constants Constants::si() {
    Constants k{};
    k.hbar = 1.054571817e-34;
    k.mu0 = 1.25663706212e-6;
    k.c = 299792458.0;
    k.eps0 = 1.0 / (k.mu0 * k.c * k.c);
    k.unit_system = UnitSystem::si;
    return k;
}

Constants Constants::natural() {
    Constants k{};
    k.hbar = 1.0;
    k.mu0 = 1.0;
    k.c = 1.0;
    k.eps0 = 1.0;
    k.unit_system = UnitSystem::natural;
    return k;
}

Constants Constants::from_name(const std::string& name) {
    if (name == "si") return si();
    if (name == "natural") return natural();
    throw std::invalid_argument("unknown unit system '" + name + "' (expected 'si' or 'natural')");
}

}  // namespace ablab
