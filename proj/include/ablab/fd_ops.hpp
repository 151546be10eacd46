#pragma once

#include <functional>

#include "ablab/vec3.hpp"

namespace ablab {

// Central-difference step: 1e-4 times the larger of the reference length and
// the distance of the probe point from the origin.
double fd_step(const Vec3& r, double reference_length);

double fd_divergence(const std::function<Vec3(const Vec3&)>& field, const Vec3& r, double h);
Vec3 fd_curl(const std::function<Vec3(const Vec3&)>& field, const Vec3& r, double h);
Vec3 fd_gradient(const std::function<double(const Vec3&)>& f, const Vec3& r, double h);

}  // namespace ablab
