#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ablab/charge.hpp"
#include "ablab/constants.hpp"
#include "ablab/gauge.hpp"
#include "ablab/quadrature.hpp"

namespace ablab {

struct PhaseReport {
    double phase = 0.0;          // -(q/hbar) * integral A . dl
    double line_integral = 0.0;  // integral A . dl itself
    std::string path_label;
    std::string gauge_tag;
    int winding = 0;
    bool closed = false;
    IntegralResult quadrature;
};

// Phase acquired along `path` in field `field`: -(q/hbar) * int A.dl.
PhaseReport path_phase(const GaugeField& field, const PathSpec& path, double q,
                       const Constants& k, const QuadratureSpec& spec);

// Predicted phase for a closed loop around the ideal solenoid:
// -(q/hbar) * winding * flux.
double flux_phase(const Solenoid& s, double q, int winding, const Constants& k);

// Analytic change of the open-path phase under A -> A + grad(chi):
// -(q/hbar) (chi(end) - chi(start)), with the multivalued azimuthal case
// continued along the path (entire turns counted, no branch-cut jumps).
double gauge_phase_shift(const ChiFunction& chi, const PathSpec& path, double q,
                         const Constants& k);

struct GaugeScanRow {
    std::string chi_label;
    double phase_base = 0.0;
    double phase_gauged = 0.0;
    double shift_numeric = 0.0;
    double shift_analytic = 0.0;
    double mismatch = 0.0;  // |numeric - analytic|
    bool closed = false;
    bool converged = false;
};

// Runs path_phase under every chi in the list, against the base field.
std::vector<GaugeScanRow> gauge_scan(const GaugeField& base, const PathSpec& path, double q,
                                     const Constants& k, const std::vector<ChiFunction>& chis,
                                     const QuadratureSpec& spec);

}  // namespace ablab
