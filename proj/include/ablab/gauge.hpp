#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ablab/charge.hpp"
#include "ablab/constants.hpp"
#include "ablab/solenoid.hpp"
#include "ablab/vec3.hpp"

namespace ablab {

// Scalar gauge function chi with an analytic gradient. `multivalued` marks
// functions (like the azimuthal angle) whose value jumps across a branch cut
// even though the gradient is smooth away from the axis.
struct ChiFunction {
    std::function<double(const Vec3&)> value;
    std::function<Vec3(const Vec3&)> gradient;
    std::string label;
    bool multivalued = false;
    double period = 0.0;  // size of the branch jump for multivalued chi
};

ChiFunction chi_zero();
// c * dot(axis, r)
ChiFunction chi_linear(double c, const Vec3& axis);
// c * x^2
ChiFunction chi_quadratic(double c);
// c * atan2(y - x0.y, x - x0.x); gradient singular on the axis through x0.
ChiFunction chi_azimuthal(double c, const Vec3& axis_point = {});
// amp * exp(-|r - center|^2 / (2 width^2)), compactly concentrated bump.
ChiFunction chi_gaussian_bump(double amp, const Vec3& center, double width);

// Named lookup for scenario files: "zero", "linear:<c>:<ax>,<ay>,<az>",
// "quadratic:<c>", "azimuthal:<c>[:<px>,<py>,<pz>]", "bump:<amp>:<cx>,<cy>,<cz>:<w>".
ChiFunction chi_from_label(const std::string& label);

// A vector potential sampler tagged with how it was produced. Gauge
// transformations stack: apply_gauge records the chi it added.
struct GaugeField {
    std::function<Vec3(const Vec3&)> sampler;
    std::string gauge_tag;
    std::optional<ChiFunction> chi_applied;

    Vec3 operator()(const Vec3& r) const { return sampler(r); }
};

GaugeField coulomb_solenoid_field(const Solenoid& s);
GaugeField charge_coulomb_field(const ChargeState& ch, const Constants& k);
// Owns a copy of the element list.
GaugeField element_sum_field(std::vector<CurrentElement> elements, const Constants& k);
// A -> A + grad(chi)
GaugeField apply_gauge(const GaugeField& base, const ChiFunction& chi);

}  // namespace ablab
