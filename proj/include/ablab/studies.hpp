#pragma once

#include <string>
#include <vector>

#include "ablab/report_io.hpp"
#include "ablab/scenario.hpp"

namespace ablab {

// Closed-loop phases: scenario path, reversed, doubled winding, opposite
// winding, each against the enclosed-flux prediction.
StudyOutput run_phase_study(const Scenario& sc);

// Gauge transformations applied to every scenario path; numeric phase shifts
// against the analytic endpoint rule.
StudyOutput run_gauge_study(const Scenario& sc);

// Field-overlap energy vs canonical and truncated-mode values, both
// prefactors, element-sum route, truncation bound, gauge probe of q v.A.
StudyOutput run_energy_study(const Scenario& sc);

// Second-order mode-sum phase against the continuum reference over the
// refinement ladder.
StudyOutput run_qed_convergence_study(const Scenario& sc);

// Exact truncated-space evolution vs the second-order prediction, swept over
// coupling scales to expose the order of the residual.
StudyOutput run_qed_exact_study(const Scenario& sc);

// Reduced density matrix of the two-path charge: off-diagonal phase and
// entanglement entropy as the coupling scale sweeps.
StudyOutput run_entanglement_study(const Scenario& sc);

const std::vector<std::string>& study_names();
StudyOutput run_study(const Scenario& sc, const std::string& study);
std::vector<StudyOutput> run_all_studies(const Scenario& sc);

}  // namespace ablab
