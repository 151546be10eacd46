#pragma once

#include "ablab/constants.hpp"
#include "ablab/vec3.hpp"

namespace ablab {

// Point charge in uniform motion (the nonrelativistic, low-velocity picture:
// retardation ignored, fields carried rigidly with the charge).
struct ChargeState {
    double q = 1.0;
    double mass = 1.0;
    Vec3 position{0.5, 0.0, 0.0};
    Vec3 velocity{0.0, 1.0, 0.0};

    Vec3 momentum() const { return velocity * mass; }
    void validate() const;
};

// A_c(r) = mu0 q v / (4 pi |r - r_c|)
Vec3 charge_vector_potential(const Vec3& r, const ChargeState& ch, const Constants& k);

// B_c(r) = mu0 q v x (r - r_c) / (4 pi |r - r_c|^3)
Vec3 charge_b_field(const Vec3& r, const ChargeState& ch, const Constants& k);

}  // namespace ablab
