#include "ablab/mode_grid.hpp"

#include <algorithm>
#include <cmath>

#include "ablab/errors.hpp"

namespace ablab {

namespace {

// Lexicographically positive representative of the {n, -n} pair.
bool is_canonical(const std::array<int, 3>& n) {
    if (n[0] != 0) return n[0] > 0;
    if (n[1] != 0) return n[1] > 0;
    return n[2] > 0;
}

std::array<Vec3, 2> pair_polarisation(const Vec3& k_canonical) {
    const Vec3 khat = normalized(k_canonical);
    // k along z: fall back to the Cartesian transverse pair.
    if (std::abs(khat.x) < 1e-14 && std::abs(khat.y) < 1e-14) {
        return {Vec3{1, 0, 0}, Vec3{0, 1, 0}};
    }
    const Vec3 e1 = normalized(cross(khat, Vec3{0, 0, 1}));
    const Vec3 e2 = cross(khat, e1);  // unit by construction
    return {e1, e2};
}

}  // namespace

ModeGrid build_mode_grid(double box_length, int index_range, std::optional<double> cutoff_omega,
                         const Constants& k, double coupling_scale) {
    if (!(box_length > 0.0)) throw ConfigurationError("mode grid box_length must be positive");
    if (index_range < 1) throw ConfigurationError("mode grid index_range must be >= 1");
    if (cutoff_omega && !(*cutoff_omega > 0.0))
        throw ConfigurationError("mode grid cutoff_omega must be positive");
    if (!(coupling_scale >= 0.0)) throw ConfigurationError("coupling_scale must be >= 0");

    ModeGrid grid;
    grid.box_length = box_length;
    grid.index_range = index_range;
    grid.cutoff_omega = cutoff_omega;
    grid.coupling_scale = coupling_scale;

    const double dk = 2.0 * pi / box_length;
    const double volume = box_length * box_length * box_length;

    for (int nx = -index_range; nx <= index_range; ++nx) {
        for (int ny = -index_range; ny <= index_range; ++ny) {
            for (int nz = -index_range; nz <= index_range; ++nz) {
                if (nx == 0 && ny == 0 && nz == 0) continue;
                PhotonMode m;
                m.n = {nx, ny, nz};
                m.k = Vec3{nx * dk, ny * dk, nz * dk};
                m.omega = k.c * norm(m.k);
                if (cutoff_omega && m.omega > *cutoff_omega) continue;
                m.g = coupling_scale * std::sqrt(k.hbar / (2.0 * k.eps0 * m.omega * volume));
                const std::array<int, 3> rep =
                    is_canonical(m.n) ? m.n
                                      : std::array<int, 3>{-m.n[0], -m.n[1], -m.n[2]};
                m.pol = pair_polarisation(Vec3{rep[0] * dk, rep[1] * dk, rep[2] * dk});
                grid.modes.push_back(m);
            }
        }
    }
    if (grid.modes.empty()) throw ConfigurationError("mode grid is empty after cutoff");

    std::sort(grid.modes.begin(), grid.modes.end(), [](const PhotonMode& a, const PhotonMode& b) {
        const int na = a.n[0] * a.n[0] + a.n[1] * a.n[1] + a.n[2] * a.n[2];
        const int nb = b.n[0] * b.n[0] + b.n[1] * b.n[1] + b.n[2] * b.n[2];
        if (na != nb) return na < nb;
        return a.n < b.n;
    });
    return grid;
}

}  // namespace ablab
