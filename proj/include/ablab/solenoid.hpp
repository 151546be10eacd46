#pragma once

#include <span>
#include <vector>

#include "ablab/constants.hpp"
#include "ablab/vec3.hpp"

namespace ablab {

// Discretisation of an ideal solenoid as a stack of current rings, each ring a
// polygon of straight segments. Used for the element-sum energy route and the
// photon-mode couplings of the source current.
struct FiniteSolenoidModel {
    double length = 0.0;  // full axial extent, rings span [-length/2, +length/2]
    int n_rings = 0;
    int n_segments = 0;
};

// Ideal infinite solenoid, axis along z through `center`, uniform interior
// field (0,0,b0). The finite model rides along for routines that need an
// explicit current distribution.
struct Solenoid {
    double radius = 0.1;
    double b0 = 1.0;
    Vec3 center{0.0, 0.0, 0.0};
    FiniteSolenoidModel finite_model{8.0, 400, 64};

    double flux() const { return b0 * pi * radius * radius; }
    // Sheet current density K = B0/mu0 (azimuthal, per unit length of axis).
    double sheet_current(const Constants& k) const { return b0 / k.mu0; }

    void validate() const;
};

// Coulomb-gauge vector potential of the ideal solenoid: azimuthal, equal to
// Phi/(2 pi rho) outside and B0 rho/2 inside; the two agree at rho = radius.
Vec3 solenoid_vector_potential(const Vec3& r, const Solenoid& s);

// Exterior closed form only; throws SingularityError for rho < radius.
Vec3 solenoid_vector_potential_exterior(const Vec3& r, const Solenoid& s);

// (0,0,b0) for rho <= radius (boundary counts as inside), zero outside.
Vec3 solenoid_b_field(const Vec3& r, const Solenoid& s);

// One straight piece of wire: position of its midpoint and its I*dl vector.
struct CurrentElement {
    Vec3 position;
    Vec3 idl;
};

// Element layout factorised as (one ring's worth of segments) x (ring planes).
// Segment positions/idl are stored for the ring plane through the solenoid
// center; the full stack translates that ring to each entry of ring_z.
struct RingStack {
    std::vector<Vec3> segment_positions;  // z component already at center.z
    std::vector<Vec3> segment_idl;
    std::vector<double> ring_z;  // absolute z of each ring plane
    double ring_current = 0.0;   // current carried by each ring

    std::size_t total_elements() const { return segment_positions.size() * ring_z.size(); }
    std::vector<CurrentElement> flatten() const;
};

RingStack solenoid_ring_stack(const Solenoid& s, const Constants& k);
std::vector<CurrentElement> solenoid_current_elements(const Solenoid& s, const Constants& k);

// A(r) = mu0/(4 pi) * sum idl_i / |r - x_i|. Throws SingularityError when r
// sits on top of an element.
Vec3 biot_savart_vector_potential(const Vec3& r, std::span<const CurrentElement> elements,
                                  const Constants& k);

}  // namespace ablab
