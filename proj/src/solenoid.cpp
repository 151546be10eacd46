#include "ablab/solenoid.hpp"

#include <cmath>
#include <sstream>

#include "ablab/errors.hpp"

namespace ablab {

void Solenoid::validate() const {
    if (!(radius > 0.0)) throw ConfigurationError("solenoid radius must be positive");
    if (finite_model.length < 0.0) throw ConfigurationError("solenoid model length must be >= 0");
    if (finite_model.n_rings < 0 || finite_model.n_segments < 0)
        throw ConfigurationError("solenoid model counts must be >= 0");
    if (finite_model.n_rings > 0 && finite_model.n_segments < 3)
        throw ConfigurationError("solenoid model needs at least 3 segments per ring");
}

Vec3 solenoid_vector_potential(const Vec3& r, const Solenoid& s) {
    const double dx = r.x - s.center.x;
    const double dy = r.y - s.center.y;
    const double rho2 = dx * dx + dy * dy;
    if (rho2 <= s.radius * s.radius) {
        const double half_b = 0.5 * s.b0;
        return {-half_b * dy, half_b * dx, 0.0};
    }
    const double pref = s.flux() / (2.0 * pi * rho2);
    return {-pref * dy, pref * dx, 0.0};
}

Vec3 solenoid_vector_potential_exterior(const Vec3& r, const Solenoid& s) {
    const double dx = r.x - s.center.x;
    const double dy = r.y - s.center.y;
    const double rho2 = dx * dx + dy * dy;
    if (rho2 < s.radius * s.radius) {
        std::ostringstream msg;
        msg << "exterior potential requested at rho = " << std::sqrt(rho2)
            << " inside solenoid of radius " << s.radius;
        throw SingularityError(msg.str());
    }
    const double pref = s.flux() / (2.0 * pi * rho2);
    return {-pref * dy, pref * dx, 0.0};
}

Vec3 solenoid_b_field(const Vec3& r, const Solenoid& s) {
    const double rho = rho_about(r, s.center);
    if (rho <= s.radius) return {0.0, 0.0, s.b0};
    return {0.0, 0.0, 0.0};
}

std::vector<CurrentElement> RingStack::flatten() const {
    std::vector<CurrentElement> out;
    out.reserve(total_elements());
    for (double z : ring_z) {
        for (std::size_t i = 0; i < segment_positions.size(); ++i) {
            Vec3 p = segment_positions[i];
            p.z = z;
            out.push_back({p, segment_idl[i]});
        }
    }
    return out;
}

RingStack solenoid_ring_stack(const Solenoid& s, const Constants& k) {
    s.validate();
    const auto& fm = s.finite_model;
    if (fm.n_rings <= 0 || fm.n_segments <= 0 || fm.length <= 0.0)
        throw ConfigurationError("finite solenoid model is not set (length/rings/segments)");

    RingStack stack;
    const double dz = fm.length / fm.n_rings;
    stack.ring_current = s.sheet_current(k) * dz;  // I = K * dz per ring

    // Midpoint rule around the circle: segment i covers the arc centered on
    // theta_i; idl is the chord of that arc, tangent at the midpoint.
    const double dtheta = 2.0 * pi / double(fm.n_segments);
    stack.segment_positions.reserve(fm.n_segments);
    stack.segment_idl.reserve(fm.n_segments);
    const double chord = 2.0 * s.radius * std::sin(0.5 * dtheta);
    for (int i = 0; i < fm.n_segments; ++i) {
        const double theta = (i + 0.5) * dtheta;
        const double ct = std::cos(theta);
        const double st = std::sin(theta);
        stack.segment_positions.push_back(
            {s.center.x + s.radius * ct, s.center.y + s.radius * st, s.center.z});
        // Tangent direction (-sin, cos, 0), length = chord, scaled by ring current.
        stack.segment_idl.push_back({-stack.ring_current * chord * st,
                                     stack.ring_current * chord * ct, 0.0});
    }

    stack.ring_z.reserve(fm.n_rings);
    for (int j = 0; j < fm.n_rings; ++j) {
        stack.ring_z.push_back(s.center.z - 0.5 * fm.length + (j + 0.5) * dz);
    }
    return stack;
}

std::vector<CurrentElement> solenoid_current_elements(const Solenoid& s, const Constants& k) {
    return solenoid_ring_stack(s, k).flatten();
}

Vec3 biot_savart_vector_potential(const Vec3& r, std::span<const CurrentElement> elements,
                                  const Constants& k) {
    Vec3 acc{};
    for (const auto& e : elements) {
        const Vec3 d = r - e.position;
        const double dist = norm(d);
        if (dist < 1e-12) {
            std::ostringstream msg;
            msg << "field point (" << r.x << ", " << r.y << ", " << r.z
                << ") coincides with a current element";
            throw SingularityError(msg.str());
        }
        acc += e.idl / dist;
    }
    return acc * (k.mu0 / (4.0 * pi));
}

}  // namespace ablab
