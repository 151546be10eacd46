#include "ablab/fd_ops.hpp"

#include <algorithm>
#include <cmath>

namespace ablab {

double fd_step(const Vec3& r, double reference_length) {
    return 1e-4 * std::max(reference_length, norm(r));
}

namespace {

const Vec3 kAxes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

}

double fd_divergence(const std::function<Vec3(const Vec3&)>& field, const Vec3& r, double h) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Vec3 plus = field(r + kAxes[i] * h);
        const Vec3 minus = field(r - kAxes[i] * h);
        const Vec3 diff = (plus - minus) / (2.0 * h);
        acc += (i == 0) ? diff.x : (i == 1) ? diff.y : diff.z;
    }
    return acc;
}

Vec3 fd_curl(const std::function<Vec3(const Vec3&)>& field, const Vec3& r, double h) {
    Vec3 d[3];
    for (int i = 0; i < 3; ++i) {
        const Vec3 plus = field(r + kAxes[i] * h);
        const Vec3 minus = field(r - kAxes[i] * h);
        d[i] = (plus - minus) / (2.0 * h);  // d[i] = dA/dx_i
    }
    return {d[1].z - d[2].y, d[2].x - d[0].z, d[0].y - d[1].x};
}

Vec3 fd_gradient(const std::function<double(const Vec3&)>& f, const Vec3& r, double h) {
    Vec3 g;
    g.x = (f(r + kAxes[0] * h) - f(r - kAxes[0] * h)) / (2.0 * h);
    g.y = (f(r + kAxes[1] * h) - f(r - kAxes[1] * h)) / (2.0 * h);
    g.z = (f(r + kAxes[2] * h) - f(r - kAxes[2] * h)) / (2.0 * h);
    return g;
}

}  // namespace ablab
