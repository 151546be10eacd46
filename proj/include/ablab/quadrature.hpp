#pragma once

#include <functional>
#include <string>

#include "ablab/vec3.hpp"

namespace ablab {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 4000;  // panel budget per 1-D integral
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Parametric curve on s in [0,1] with an analytic derivative. Reversal flips
// the parameter direction; a reversed path integrates to exactly minus the
// original (the adaptive subdivision tree mirrors and IEEE addition commutes).
struct PathSpec {
    std::function<Vec3(double)> curve;
    std::function<Vec3(double)> derivative;  // d curve / d s
    bool closed = false;
    int winding = 0;  // net turns about the z axis, if meaningful
    std::string label;

    PathSpec reversed() const;

    // Circle of given radius about a z-parallel axis through `center`,
    // traversed `winding` times (sign = orientation), starting at angle
    // `theta0` in the xy plane.
    static PathSpec circle(const Vec3& center, double radius, int winding,
                           const std::string& label, double theta0 = 0.0);
    static PathSpec segment(const Vec3& a, const Vec3& b, const std::string& label);
    // Planar arc at fixed z, from angle th0 to th1.
    static PathSpec arc(const Vec3& center, double radius, double th0, double th1,
                        const std::string& label);
};

// Cylinder aligned with z: axis through axis_point, given radius, z in
// [z_min, z_max] in absolute coordinates.
struct CylinderRegion {
    Vec3 axis_point{0, 0, 0};
    double radius = 1.0;
    double z_min = -1.0;
    double z_max = 1.0;
};

IntegralResult integrate_scalar(const std::function<double(double)>& f, double a, double b,
                                const QuadratureSpec& spec);

// Line integral of a vector field along the path.
IntegralResult integrate_line(const std::function<Vec3(const Vec3&)>& field, const PathSpec& path,
                              const QuadratureSpec& spec);

// Volume integral over the cylinder in cylindrical coordinates, nested
// adaptive 1-D passes (theta innermost, then rho, then z).
IntegralResult integrate_volume(const std::function<double(const Vec3&)>& f,
                                const CylinderRegion& region, const QuadratureSpec& spec);

}  // namespace ablab
