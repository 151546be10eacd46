#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ablab/charge.hpp"
#include "ablab/constants.hpp"
#include "ablab/gauge.hpp"
#include "ablab/quadrature.hpp"
#include "ablab/solenoid.hpp"

namespace ablab {

struct PathConfig {
    std::string label = "loop";
    std::string kind = "circle";  // circle | segment | arc
    Vec3 center{0, 0, 0};
    double radius = 0.5;
    int winding = 1;
    double theta0 = 0.0;
    Vec3 from{0.5, -0.5, 0.0};
    Vec3 to{0.5, 0.5, 0.0};
    double theta1 = pi;

    PathSpec build() const;
};

struct EnergyConfig {
    double z_cut = 4.0;
    // Optional refinement ladder for the overlap quadrature: entries are
    // rel_tol multipliers applied on top of the base quadrature spec.
    std::vector<double> tolerance_ladder;
};

struct QedRefinementStep {
    double box_length = 0.0;
    int index_range = 0;
};

struct QedConfig {
    double box_length = 12.0;
    int index_range = 26;
    std::optional<double> cutoff_omega;
    double coupling_scale = 1.0;
    double tau = 1.0;
    int n_pairs_active = 8;
    int photon_cutoff = 2;
    int dimension_cap = 4096;
    double e_charge = 0.0;  // free two-level splittings; affect only the global phase
    double e_source = 0.0;
    std::vector<QedRefinementStep> refinements;
    std::vector<double> exact_coupling_scales{1.0, 0.5, 0.25, 0.125};
};

struct BranchConfig {
    Vec3 left_position{0.5, 0.0, 0.0};
    Vec3 right_position{-0.5, 0.0, 0.0};
    double tau = 12.0;
    std::vector<double> coupling_scales{1.0, 0.316227766016838, 0.1, 0.0316227766016838, 0.01};
};

struct Scenario {
    std::string name = "default";
    Constants constants = Constants::natural();
    std::string units = "natural";
    Solenoid solenoid;
    ChargeState charge;
    QuadratureSpec quadrature;
    std::vector<PathConfig> paths{PathConfig{}};
    std::vector<std::string> gauge_labels{"linear:0.3:1,0,0", "quadratic:0.2",
                                          "azimuthal:0.15:1,0,0",
                                          "bump:0.5:0.3,0.2,0:0.2"};
    EnergyConfig energy;
    QedConfig qed;
    BranchConfig branch;

    std::vector<ChiFunction> gauges() const;
};

// Parse + strictly validate a scenario JSON document. Unknown keys, wrong
// types, and out-of-range values raise SchemaError with a /json/pointer
// location. `overrides` are dotted key=value pairs applied before validation
// (e.g. "charge.position=0.4,0,0", "qed.index_range=12").
Scenario load_scenario(const std::string& json_text,
                       const std::vector<std::string>& overrides = {});
Scenario load_scenario_file(const std::string& path,
                            const std::vector<std::string>& overrides = {});

// Serialise back to canonical JSON (sorted keys, fixed formatting) for the
// run manifest.
std::string scenario_to_json(const Scenario& sc);

}  // namespace ablab
