#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ablab/charge.hpp"
#include "ablab/constants.hpp"
#include "ablab/mode_grid.hpp"
#include "ablab/solenoid.hpp"

namespace ablab {

// Emission amplitudes into each (mode, polarisation) pair, flattened as
// index = 2 * mode_index + polarisation.
//   charge: g * (q/m) * (p . u) * exp(i k . r_c)
//   source: g * sum_i (Idl_i . u) * exp(i k . x_i)
struct ModeCouplings {
    std::vector<std::complex<double>> charge;
    std::vector<std::complex<double>> source;
};

ModeCouplings coupling_amplitudes(const ModeGrid& grid, const ChargeState& ch,
                                  std::span<const CurrentElement> elements);

// Same amplitudes, but exploiting the ring-stack layout: the z sum is a
// 1-D transform shared across modes with equal k_z, the in-plane sum is
// shared across modes with equal (k_x, k_y).
ModeCouplings coupling_amplitudes(const ModeGrid& grid, const ChargeState& ch,
                                  const RingStack& stack);

// Charge side only; O(modes), no element sum.
std::vector<std::complex<double>> charge_coupling_amplitudes(const ModeGrid& grid,
                                                             const ChargeState& ch);

struct SecondOrderEnergies {
    double cross = 0.0;        // -sum 2 Re(Mc Ms*) / (hbar omega)
    double self_charge = 0.0;  // -sum |Mc|^2 / (hbar omega)
    double self_source = 0.0;  // -sum |Ms|^2 / (hbar omega)
};

SecondOrderEnergies second_order_energies(const ModeGrid& grid, const ModeCouplings& c,
                                          const Constants& k);

double cross_interaction_energy(const ModeGrid& grid, const ModeCouplings& c, const Constants& k);

// Secular phase accumulated over time tau: -E_cross * tau / hbar.
double second_order_phase(const ModeGrid& grid, const ModeCouplings& c, double tau,
                          const Constants& k);
double second_order_phase(const ModeGrid& grid, const ChargeState& ch, const RingStack& stack,
                          double tau, const Constants& k);

// Secular plus switch-on transient:
// sum 2 Re(Mc Ms*) [tau/(hbar^2 omega) - sin(omega tau)/(hbar omega)^2].
double cross_phase_finite_time(const ModeGrid& grid, const ModeCouplings& c, double tau,
                               const Constants& k);

// Continuum reference: -q v . A(r_c) with A summed over the explicit current
// elements (what the mode sum converges to as the box and grid grow).
double analytic_interaction_energy(const ChargeState& ch, std::span<const CurrentElement> elements,
                                   const Constants& k);
double analytic_phase(const ChargeState& ch, std::span<const CurrentElement> elements, double tau,
                      const Constants& k);

}  // namespace ablab
