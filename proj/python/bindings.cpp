#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <vector>

#include "ablab/errors.hpp"
#include "ablab/field_energy.hpp"
#include "ablab/gauge.hpp"
#include "ablab/phase.hpp"
#include "ablab/report_io.hpp"
#include "ablab/scenario.hpp"
#include "ablab/solenoid.hpp"
#include "ablab/studies.hpp"

namespace py = pybind11;
using namespace ablab;

namespace {

using XYZ = std::array<double, 3>;

Vec3 to_vec(const XYZ& a) { return Vec3{a[0], a[1], a[2]}; }
XYZ from_vec(const Vec3& v) { return {v.x, v.y, v.z}; }

Solenoid make_solenoid(double radius, double b0) {
    Solenoid s;
    s.radius = radius;
    s.b0 = b0;
    s.validate();
    return s;
}

ChargeState make_charge(const XYZ& position, const XYZ& velocity, double q) {
    ChargeState ch;
    ch.q = q;
    ch.position = to_vec(position);
    ch.velocity = to_vec(velocity);
    ch.validate();
    return ch;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "vector-potential phases, field-overlap energies and a truncated-mode "
              "radiation model around a shielded solenoid";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const SchemaError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ConfigurationError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const SingularityError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const QuadratureError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def("version", &tool_version);
    m.def("study_names", [] { return study_names(); });
    m.def("config_digest", &config_digest, py::arg("text"));

    m.def(
        "constants",
        [](const std::string& units) {
            const Constants k = Constants::from_name(units);
            py::dict d;
            d["hbar"] = k.hbar;
            d["mu0"] = k.mu0;
            d["eps0"] = k.eps0;
            d["c"] = k.c;
            d["units"] = k.unit_system == UnitSystem::si ? "si" : "natural";
            return d;
        },
        py::arg("units") = "natural");

    m.def(
        "solenoid_flux", [](double radius, double b0) { return make_solenoid(radius, b0).flux(); },
        py::arg("radius") = 0.1, py::arg("b0") = 1.0);

    m.def(
        "vector_potential",
        [](const XYZ& point, double radius, double b0) {
            return from_vec(solenoid_vector_potential(to_vec(point), make_solenoid(radius, b0)));
        },
        py::arg("point"), py::arg("radius") = 0.1, py::arg("b0") = 1.0);

    m.def(
        "flux_phase",
        [](double q, int winding, double radius, double b0, const std::string& units) {
            return flux_phase(make_solenoid(radius, b0), q, winding, Constants::from_name(units));
        },
        py::arg("q") = 1.0, py::arg("winding") = 1, py::arg("radius") = 0.1, py::arg("b0") = 1.0,
        py::arg("units") = "natural");

    m.def(
        "closed_loop_phase",
        [](double loop_radius, int winding, double q, double radius, double b0,
           const std::string& units) {
            const GaugeField field = coulomb_solenoid_field(make_solenoid(radius, b0));
            const PathSpec path = PathSpec::circle(Vec3{0, 0, 0}, loop_radius, winding, "loop");
            return path_phase(field, path, q, Constants::from_name(units), QuadratureSpec{}).phase;
        },
        py::arg("loop_radius") = 0.5, py::arg("winding") = 1, py::arg("q") = 1.0,
        py::arg("radius") = 0.1, py::arg("b0") = 1.0, py::arg("units") = "natural");

    m.def(
        "canonical_energy",
        [](const XYZ& position, const XYZ& velocity, double q, double radius, double b0,
           const std::string& units) {
            return canonical_energy(make_solenoid(radius, b0), make_charge(position, velocity, q),
                                    Constants::from_name(units));
        },
        py::arg("position") = XYZ{0.5, 0.0, 0.0}, py::arg("velocity") = XYZ{0.0, 1.0, 0.0},
        py::arg("q") = 1.0, py::arg("radius") = 0.1, py::arg("b0") = 1.0,
        py::arg("units") = "natural");

    m.def(
        "overlap_energy",
        [](const XYZ& position, const XYZ& velocity, double q, const std::string& prefactor,
           double z_cut, double rel_tol, double radius, double b0, const std::string& units) {
            if (prefactor != "half" && prefactor != "full")
                throw ConfigurationError("prefactor must be 'half' or 'full'");
            QuadratureSpec spec;
            spec.rel_tol = rel_tol;
            const IntegralResult r = overlap_energy(
                make_solenoid(radius, b0), make_charge(position, velocity, q),
                prefactor == "half" ? Prefactor::half : Prefactor::full, z_cut,
                Constants::from_name(units), spec);
            py::dict d;
            d["value"] = r.value;
            d["error_estimate"] = r.error_estimate;
            d["evaluations"] = r.evaluations;
            d["converged"] = r.converged;
            return d;
        },
        py::arg("position") = XYZ{0.5, 0.0, 0.0}, py::arg("velocity") = XYZ{0.0, 1.0, 0.0},
        py::arg("q") = 1.0, py::arg("prefactor") = "full", py::arg("z_cut") = 4.0,
        py::arg("rel_tol") = 1e-8, py::arg("radius") = 0.1, py::arg("b0") = 1.0,
        py::arg("units") = "natural");

    m.def(
        "element_overlap_energy",
        [](const XYZ& position, const XYZ& velocity, double q, double radius, double b0,
           const std::string& units) {
            return element_overlap_energy(make_solenoid(radius, b0),
                                          make_charge(position, velocity, q),
                                          Constants::from_name(units));
        },
        py::arg("position") = XYZ{0.5, 0.0, 0.0}, py::arg("velocity") = XYZ{0.0, 1.0, 0.0},
        py::arg("q") = 1.0, py::arg("radius") = 0.1, py::arg("b0") = 1.0,
        py::arg("units") = "natural");

    m.def(
        "run_study",
        [](const std::string& scenario_json, const std::string& study,
           const std::vector<std::string>& overrides) {
            const Scenario sc = load_scenario(scenario_json, overrides);
            return study_json_text(run_study(sc, study));
        },
        py::arg("scenario_json"), py::arg("study"),
        py::arg("overrides") = std::vector<std::string>{});

    m.def(
        "canonical_scenario",
        [](const std::string& scenario_json, const std::vector<std::string>& overrides) {
            return scenario_to_json(load_scenario(scenario_json, overrides));
        },
        py::arg("scenario_json"), py::arg("overrides") = std::vector<std::string>{});
}
