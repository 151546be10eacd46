#include "ablab/charge.hpp"

#include <cmath>
#include <sstream>

#include "ablab/errors.hpp"

namespace ablab {

namespace {

void throw_at_charge(const Vec3& r) {
    std::ostringstream msg;
    msg << "field point (" << r.x << ", " << r.y << ", " << r.z
        << ") coincides with the charge position";
    throw SingularityError(msg.str());
}

}  // namespace

void ChargeState::validate() const {
    if (!(mass > 0.0)) throw ConfigurationError("charge mass must be positive");
}

Vec3 charge_vector_potential(const Vec3& r, const ChargeState& ch, const Constants& k) {
    const Vec3 d = r - ch.position;
    const double dist = norm(d);
    if (dist < 1e-12) throw_at_charge(r);
    return ch.velocity * (k.mu0 * ch.q / (4.0 * pi * dist));
}

Vec3 charge_b_field(const Vec3& r, const ChargeState& ch, const Constants& k) {
    const Vec3 d = r - ch.position;
    const double dist = norm(d);
    if (dist < 1e-12) throw_at_charge(r);
    return cross(ch.velocity, d) * (k.mu0 * ch.q / (4.0 * pi * dist * dist * dist));
}

}  // namespace ablab
