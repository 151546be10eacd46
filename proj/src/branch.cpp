#include "ablab/branch.hpp"

#include <cmath>

#include "ablab/errors.hpp"
#include "ablab/perturbation.hpp"

namespace ablab {

namespace {

using cplx = std::complex<double>;

cplx cis(double phase) { return {std::cos(phase), std::sin(phase)}; }

// ln<alpha|beta> = -|alpha|^2/2 - |beta|^2/2 + conj(alpha) beta, summed.
cplx coherent_overlap(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx log_ov{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        log_ov += -0.5 * std::norm(a[i]) - 0.5 * std::norm(b[i]) + std::conj(a[i]) * b[i];
    }
    return std::exp(log_ov);
}

std::vector<cplx> static_displacements(const ModeGrid& grid, const ModeCouplings& c, double tau,
                                       const Constants& k) {
    std::vector<cplx> alpha(grid.pair_count());
    for (std::size_t mi = 0; mi < grid.modes.size(); ++mi) {
        const double w = grid.modes[mi].omega;
        const cplx factor = (1.0 - cis(w * tau)) / (k.hbar * w);
        alpha[2 * mi + 0] = c.charge[2 * mi + 0] * factor;
        alpha[2 * mi + 1] = c.charge[2 * mi + 1] * factor;
    }
    return alpha;
}

}  // namespace

BranchStates branch_evolution(const ModeGrid& grid, const ChargeState& ch_left,
                              const ChargeState& ch_right,
                              std::span<const CurrentElement> elements, double tau,
                              const Constants& k) {
    if (!(tau > 0.0)) throw ConfigurationError("branch evolution needs tau > 0");
    if (ch_left.q != ch_right.q || ch_left.mass != ch_right.mass ||
        std::abs(norm(ch_left.velocity) - norm(ch_right.velocity)) >
            1e-12 * (norm(ch_left.velocity) + 1.0))
        throw ConfigurationError("branches must share q, mass and speed");
    BranchStates b;
    b.tau = tau;
    ModeCouplings c_left, c_right;
    c_left.charge = charge_coupling_amplitudes(grid, ch_left);
    c_right.charge = charge_coupling_amplitudes(grid, ch_right);
    b.alpha_left = static_displacements(grid, c_left, tau, k);
    b.alpha_right = static_displacements(grid, c_right, tau, k);
    b.phi_left = analytic_phase(ch_left, elements, tau, k);
    b.phi_right = analytic_phase(ch_right, elements, tau, k);
    b.overlap = coherent_overlap(b.alpha_left, b.alpha_right);
    return b;
}

BranchStates branch_trajectory_evolution(const ModeGrid& grid, double q, double mass,
                                         const PathSpec& path_left, const PathSpec& path_right,
                                         std::span<const CurrentElement> elements, int n_steps,
                                         double total_time, const Constants& k) {
    if (n_steps < 1) throw ConfigurationError("trajectory evolution needs n_steps >= 1");
    if (!(total_time > 0.0)) throw ConfigurationError("trajectory evolution needs total_time > 0");

    BranchStates b;
    b.tau = total_time;
    b.alpha_left.assign(grid.pair_count(), cplx{});
    b.alpha_right.assign(grid.pair_count(), cplx{});

    const double dt = total_time / n_steps;
    for (int step = 0; step < n_steps; ++step) {
        const double s_mid = (step + 0.5) / n_steps;
        const double t0 = step * dt;
        for (int arm = 0; arm < 2; ++arm) {
            const PathSpec& path = arm == 0 ? path_left : path_right;
            ChargeState ch;
            ch.q = q;
            ch.mass = mass;
            ch.position = path.curve(s_mid);
            ch.velocity = path.derivative(s_mid) / total_time;  // ds/dt = 1/T
            const std::vector<cplx> mc = charge_coupling_amplitudes(grid, ch);
            auto& alpha = arm == 0 ? b.alpha_left : b.alpha_right;
            for (std::size_t mi = 0; mi < grid.modes.size(); ++mi) {
                const double w = grid.modes[mi].omega;
                const cplx factor = cis(w * t0) * (1.0 - cis(w * dt)) / (k.hbar * w);
                alpha[2 * mi + 0] += mc[2 * mi + 0] * factor;
                alpha[2 * mi + 1] += mc[2 * mi + 1] * factor;
            }
            const double dphi = analytic_phase(ch, elements, dt, k);
            (arm == 0 ? b.phi_left : b.phi_right) += dphi;
        }
    }
    b.overlap = coherent_overlap(b.alpha_left, b.alpha_right);
    return b;
}

BranchStates scale_branch(const BranchStates& b, double scale) {
    BranchStates out = b;
    for (auto& a : out.alpha_left) a *= scale;
    for (auto& a : out.alpha_right) a *= scale;
    out.overlap = coherent_overlap(out.alpha_left, out.alpha_right);
    return out;
}

EntanglementReport reduced_density_matrix(const BranchStates& b) {
    EntanglementReport rep;
    rep.delta_phi = b.phi_right - b.phi_left;
    rep.overlap_magnitude = std::abs(b.overlap);
    rep.overlap_phase = std::arg(b.overlap);

    const cplx offdiag = 0.5 * cis(rep.delta_phi) * b.overlap;
    rep.rho[0][0] = 0.5;
    rep.rho[1][1] = 0.5;
    rep.rho[0][1] = offdiag;
    rep.rho[1][0] = std::conj(offdiag);
    rep.offdiag_magnitude = std::abs(offdiag);
    rep.offdiag_phase = std::arg(offdiag);

    // Eigenvalues of [[1/2, z], [conj z, 1/2]] are (1 +- 2|z|)/2.
    const double lam_plus = 0.5 * (1.0 + 2.0 * rep.offdiag_magnitude);
    const double lam_minus = 0.5 * (1.0 - 2.0 * rep.offdiag_magnitude);
    auto xlnx = [](double x) { return x > 1e-300 ? x * std::log(x) : 0.0; };
    rep.entropy = -xlnx(lam_plus) - xlnx(lam_minus);
    return rep;
}

}  // namespace ablab
