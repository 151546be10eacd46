#pragma once

#include <string>
#include <vector>

#include "ablab/charge.hpp"
#include "ablab/constants.hpp"
#include "ablab/gauge.hpp"
#include "ablab/quadrature.hpp"
#include "ablab/solenoid.hpp"

namespace ablab {

enum class Prefactor { half, full };

// (prefactor/mu0) * int_cylinder B_sol . B_charge dV, the overlap piece of the
// total field energy. The domain is the solenoid interior truncated to
// |z - z_c| <= z_cut (the ideal solenoid's B fills an infinite cylinder; the
// far tail is cut off and bounded separately).
IntegralResult overlap_energy(const Solenoid& s, const ChargeState& ch, Prefactor pref,
                              double z_cut, const Constants& k, const QuadratureSpec& spec);

// +q v . A_sol(r_c): interaction energy in the Coulomb gauge.
double canonical_energy(const Solenoid& s, const ChargeState& ch, const Constants& k);

// -q v . A_sol(r_c): the sign the truncated-mode calculation produces.
double qed_interaction_energy(const Solenoid& s, const ChargeState& ch, const Constants& k);

// sum_i A_charge(x_i) . Idl_i over the discretised solenoid current. Equals
// q v . A_biot_savart(r_c) by symmetry of the 1/|r| kernel.
double element_overlap_energy(const Solenoid& s, const ChargeState& ch, const Constants& k);

// Upper bound on the |z - z_c| > z_cut tail of the full-prefactor overlap
// integral (charge outside the cylinder).
double overlap_truncation_bound(const Solenoid& s, const ChargeState& ch, double z_cut,
                                const Constants& k);

struct EnergyReport {
    double e_overlap_half = 0.0;
    double e_overlap_full = 0.0;
    double e_canonical = 0.0;   // +q v.A
    double e_qed = 0.0;         // -q v.A
    double e_element_sum = 0.0;
    double ratio_half = 0.0;    // e_overlap_half / e_canonical
    double ratio_full = 0.0;
    bool sign_mismatch = false;  // overlap(full) and qed energies disagree in sign
    double truncation_bound = 0.0;
    double z_cut = 0.0;
    IntegralResult quadrature;  // overlap integral metadata (full prefactor)
    bool converged = false;
    std::string notes;
};

EnergyReport energy_comparison_report(const Solenoid& s, const ChargeState& ch, double z_cut,
                                      const Constants& k, const QuadratureSpec& spec);

// One gauge row: recompute q v.A with A -> A + grad(chi) and compare the
// shift against the analytic q v.grad(chi)(r_c).
struct GaugeVarianceRow {
    std::string chi_label;
    double e_base = 0.0;
    double e_gauged = 0.0;
    double shift_numeric = 0.0;
    double shift_analytic = 0.0;
    double mismatch = 0.0;
};

std::vector<GaugeVarianceRow> gauge_variance_probe(const Solenoid& s, const ChargeState& ch,
                                                   const Constants& k,
                                                   const std::vector<ChiFunction>& chis);

}  // namespace ablab
