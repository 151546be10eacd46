#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ablab/constants.hpp"
#include "ablab/vec3.hpp"

namespace ablab {

// One plane-wave mode of the quantised field in a periodic box. Modes come in
// +-k pairs that share the same (real) polarisation basis, chosen from the
// lexicographically positive representative of the pair, so mode functions
// satisfy u(-k) = u(k) and couplings to real currents obey M(-k) = conj(M(k)).
struct PhotonMode {
    std::array<int, 3> n{0, 0, 0};
    Vec3 k;
    double omega = 0.0;
    double g = 0.0;  // sqrt(hbar / (2 eps0 omega V)), times any coupling_scale
    std::array<Vec3, 2> pol;
};

struct ModeGrid {
    double box_length = 0.0;
    int index_range = 0;
    std::optional<double> cutoff_omega;
    double coupling_scale = 1.0;
    std::vector<PhotonMode> modes;

    std::size_t pair_count() const { return 2 * modes.size(); }  // (mode, polarisation) pairs
};

// All integer triples 0 < |n_i| <= index_range excluding n = 0, k = 2 pi n / L,
// omega = c |k|, optionally dropping modes with omega > cutoff_omega. Modes are
// ordered by (|n|^2, nx, ny, nz) so truncating to the first few keeps the
// softest shells.
ModeGrid build_mode_grid(double box_length, int index_range, std::optional<double> cutoff_omega,
                         const Constants& k, double coupling_scale = 1.0);

}  // namespace ablab
