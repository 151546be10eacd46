#pragma once

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "ablab/charge.hpp"
#include "ablab/constants.hpp"
#include "ablab/mode_grid.hpp"
#include "ablab/quadrature.hpp"
#include "ablab/solenoid.hpp"

namespace ablab {

// Coherent-state model of one interferometer run: on each arm the charge
// displaces every photon mode into a coherent state alpha_{P,k} and picks up
// the c-number phase phi_P from the second-order interaction energy with the
// source current.
struct BranchStates {
    std::vector<std::complex<double>> alpha_left;   // per (mode, polarisation) pair
    std::vector<std::complex<double>> alpha_right;
    double phi_left = 0.0;
    double phi_right = 0.0;
    std::complex<double> overlap;  // <chi_L | chi_R>
    double tau = 0.0;
};

// Static arms: the charge sits at ch_left.position / ch_right.position for
// time tau. alpha_{P,k} = Mc_k(r_P) (1 - e^{i w tau}) / (hbar w); phases from
// the analytic interaction energy with the explicit source current.
BranchStates branch_evolution(const ModeGrid& grid, const ChargeState& ch_left,
                              const ChargeState& ch_right,
                              std::span<const CurrentElement> elements, double tau,
                              const Constants& k);

// Moving arms: the charge traverses path_P in total_time, discretised into
// n_steps constant-velocity legs; displacements and phases accumulate per leg.
BranchStates branch_trajectory_evolution(const ModeGrid& grid, double q, double mass,
                                         const PathSpec& path_left, const PathSpec& path_right,
                                         std::span<const CurrentElement> elements, int n_steps,
                                         double total_time, const Constants& k);

// Same branches with every displacement multiplied by `scale` (the coupling
// knob): overlap is recomputed, the c-number phases are untouched.
BranchStates scale_branch(const BranchStates& b, double scale);

struct EntanglementReport {
    std::array<std::array<std::complex<double>, 2>, 2> rho{};
    double offdiag_magnitude = 0.0;
    double offdiag_phase = 0.0;      // arg of the |L><R| entry
    double delta_phi = 0.0;          // phi_right - phi_left fed into rho
    double overlap_magnitude = 0.0;  // |<chi_L|chi_R>|
    double overlap_phase = 0.0;
    double entropy = 0.0;            // von Neumann, natural log
};

// rho = 1/2 [[1, e^{i dphi} <chiL|chiR>], [h.c., 1]] for an equal-amplitude
// split; entropy from the exact eigenvalues (1 +- |2 rho_LR|)/2.
EntanglementReport reduced_density_matrix(const BranchStates& b);

}  // namespace ablab
