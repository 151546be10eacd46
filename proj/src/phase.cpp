#include "ablab/phase.hpp"

#include <cmath>

#include "ablab/errors.hpp"

namespace ablab {

PhaseReport path_phase(const GaugeField& field, const PathSpec& path, double q,
                       const Constants& k, const QuadratureSpec& spec) {
    PhaseReport rep;
    rep.quadrature = integrate_line(field.sampler, path, spec);
    rep.line_integral = rep.quadrature.value;
    rep.phase = -(q / k.hbar) * rep.line_integral;
    rep.path_label = path.label;
    rep.gauge_tag = field.gauge_tag;
    rep.winding = path.winding;
    rep.closed = path.closed;
    return rep;
}

double flux_phase(const Solenoid& s, double q, int winding, const Constants& k) {
    return -(q / k.hbar) * winding * s.flux();
}

namespace {

// Change of chi along the path with branch jumps unwrapped: consecutive
// samples are assumed closer than half the branch period.
double continued_delta(const ChiFunction& chi, const PathSpec& path) {
    if (!chi.multivalued || chi.period == 0.0) {
        return chi.value(path.curve(1.0)) - chi.value(path.curve(0.0));
    }
    const int n = 4096;
    double total = 0.0;
    double prev = chi.value(path.curve(0.0));
    for (int i = 1; i <= n; ++i) {
        const double cur = chi.value(path.curve(double(i) / n));
        double step = cur - prev;
        step -= chi.period * std::round(step / chi.period);
        total += step;
        prev = cur;
    }
    return total;
}

}  // namespace

double gauge_phase_shift(const ChiFunction& chi, const PathSpec& path, double q,
                         const Constants& k) {
    if (!chi.value) throw ConfigurationError("chi has no value function");
    return -(q / k.hbar) * continued_delta(chi, path);
}

std::vector<GaugeScanRow> gauge_scan(const GaugeField& base, const PathSpec& path, double q,
                                     const Constants& k, const std::vector<ChiFunction>& chis,
                                     const QuadratureSpec& spec) {
    std::vector<GaugeScanRow> rows;
    rows.reserve(chis.size());
    const PhaseReport base_rep = path_phase(base, path, q, k, spec);
    for (const auto& chi : chis) {
        const GaugeField gauged = apply_gauge(base, chi);
        const PhaseReport rep = path_phase(gauged, path, q, k, spec);
        GaugeScanRow row;
        row.chi_label = chi.label;
        row.phase_base = base_rep.phase;
        row.phase_gauged = rep.phase;
        row.shift_numeric = rep.phase - base_rep.phase;
        row.shift_analytic = gauge_phase_shift(chi, path, q, k);
        row.mismatch = std::abs(row.shift_numeric - row.shift_analytic);
        row.closed = path.closed;
        row.converged = base_rep.quadrature.converged && rep.quadrature.converged;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ablab
