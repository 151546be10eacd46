#include <cmath>

#include "ablab/constants.hpp"
#include "ablab/errors.hpp"
#include "ablab/fd_ops.hpp"
#include "ablab/gauge.hpp"
#include "ablab/phase.hpp"
#include "doctest.h"

using namespace ablab;

namespace {
const Constants kNat = Constants::natural();
const QuadratureSpec kSpec;
}  // namespace

TEST_CASE("chi functions expose consistent value/gradient pairs") {
    const Vec3 r{0.4, -0.7, 0.2};
    for (const auto& chi :
         {chi_linear(0.3, Vec3{1, 0, 0}), chi_quadratic(0.2),
          chi_gaussian_bump(0.5, Vec3{0.3, 0.2, 0.0}, 0.2), chi_azimuthal(0.15)}) {
        const double h = fd_step(r, 1.0);
        const Vec3 g_fd = fd_gradient(chi.value, r, h);
        CHECK(norm(g_fd - chi.gradient(r)) < 1e-7);
    }
    CHECK(chi_zero().value(r) == 0.0);
    CHECK(chi_azimuthal(0.15).multivalued);
    CHECK(chi_azimuthal(0.15).period == doctest::Approx(0.15 * 2 * pi));
    CHECK_FALSE(chi_linear(1.0, Vec3{0, 1, 0}).multivalued);
}

TEST_CASE("chi_from_label grammar") {
    CHECK(chi_from_label("zero").label == "zero");
    const ChiFunction lin = chi_from_label("linear:0.3:1,0,0");
    CHECK(lin.value(Vec3{2, 0, 0}) == doctest::Approx(0.6));
    const ChiFunction quad = chi_from_label("quadratic:0.2");
    CHECK(quad.value(Vec3{3, 1, 1}) == doctest::Approx(1.8));
    const ChiFunction az = chi_from_label("azimuthal:0.15:1,0,0");
    CHECK(az.multivalued);
    CHECK(az.value(Vec3{1.0, 1.0, 0.0}) == doctest::Approx(0.15 * pi / 2));
    const ChiFunction bump = chi_from_label("bump:0.5:0.3,0.2,0:0.2");
    CHECK(bump.value(Vec3{0.3, 0.2, 0.0}) == doctest::Approx(0.5));

    CHECK_THROWS_AS(chi_from_label("nope"), ConfigurationError);
    CHECK_THROWS_AS(chi_from_label("linear:abc:1,0,0"), ConfigurationError);
    CHECK_THROWS_AS(chi_from_label("bump:0.5:0.3,0.2:0.2"), ConfigurationError);
}

TEST_CASE("flux theorem on closed loops") {
    Solenoid s;
    const GaugeField field = coulomb_solenoid_field(s);
    const double q = 1.0;

    const PathSpec loop = PathSpec::circle(Vec3{0, 0, 0}, 0.5, 1, "loop");
    const PhaseReport rep = path_phase(field, loop, q, kNat, kSpec);
    CHECK(rep.quadrature.converged);
    CHECK(rep.closed);
    const double predicted = flux_phase(s, q, 1, kNat);
    CHECK(predicted == doctest::Approx(-pi * 0.01).epsilon(1e-15));
    CHECK(rep.phase == doctest::Approx(predicted).epsilon(1e-9));

    // winding 2 doubles, opposite orientation flips
    CHECK(path_phase(field, PathSpec::circle(Vec3{0, 0, 0}, 0.5, 2, "w2"), q, kNat, kSpec).phase ==
          doctest::Approx(2 * predicted).epsilon(1e-12));
    CHECK(path_phase(field, PathSpec::circle(Vec3{0, 0, 0}, 0.5, -1, "neg"), q, kNat, kSpec).phase ==
          doctest::Approx(-predicted).epsilon(1e-12));

    // radius independence (any loop enclosing the solenoid once)
    CHECK(path_phase(field, PathSpec::circle(Vec3{0, 0, 0}, 1.7, 1, "big"), q, kNat, kSpec).phase ==
          doctest::Approx(predicted).epsilon(1e-9));
    // off-center loop still enclosing the axis
    CHECK(path_phase(field, PathSpec::circle(Vec3{0.15, -0.1, 0}, 0.6, 1, "off"), q, kNat,
                     kSpec).phase == doctest::Approx(predicted).epsilon(1e-9));
    // loop NOT enclosing the solenoid: zero phase
    CHECK(std::abs(path_phase(field, PathSpec::circle(Vec3{1.0, 0, 0}, 0.3, 1, "out"), q, kNat,
                              kSpec).phase) < 1e-12);

    // reversal is bitwise minus
    CHECK(path_phase(field, loop.reversed(), q, kNat, kSpec).phase == -rep.phase);

    // charge scaling: phase linear in q
    CHECK(path_phase(field, loop, -2.0, kNat, kSpec).phase ==
          doctest::Approx(-2 * rep.phase).epsilon(1e-14));
}

TEST_CASE("gauge shifts: closed loops invariant, open paths follow the endpoints") {
    Solenoid s;
    const GaugeField field = coulomb_solenoid_field(s);
    const double q = 1.0;
    const std::vector<ChiFunction> chis = {
        chi_from_label("linear:0.3:1,0,0"), chi_from_label("quadratic:0.2"),
        chi_from_label("bump:0.5:0.3,0.2,0:0.2")};

    const PathSpec loop = PathSpec::circle(Vec3{0, 0, 0}, 0.5, 1, "loop");
    for (const auto& row : gauge_scan(field, loop, q, kNat, chis, kSpec)) {
        CHECK(row.converged);
        CHECK(row.closed);
        CHECK(std::abs(row.shift_numeric) < 1e-9);
        // endpoint roundoff at the loop seam, not an analytic effect
        CHECK(std::abs(row.shift_analytic) < 1e-12);
    }

    // endpoints differ in x and y so each chi above changes along the chord
    const PathSpec chord = PathSpec::segment(Vec3{0.2, -0.5, 0}, Vec3{0.8, 0.5, 0}, "chord");
    for (const auto& row : gauge_scan(field, chord, q, kNat, chis, kSpec)) {
        CHECK_FALSE(row.closed);
        CHECK(row.mismatch < 1e-9);
        CHECK(std::abs(row.shift_numeric) > 1e-6);
    }

    // shift matches -(q/hbar) (chi(end) - chi(start)) explicitly
    const ChiFunction lin = chis[0];
    const PhaseReport base = path_phase(field, chord, q, kNat, kSpec);
    const PhaseReport gauged = path_phase(apply_gauge(field, lin), chord, q, kNat, kSpec);
    const double expected =
        -(q / kNat.hbar) * (lin.value(chord.curve(1.0)) - lin.value(chord.curve(0.0)));
    CHECK(gauged.phase - base.phase == doctest::Approx(expected).epsilon(1e-10));
    CHECK(expected == doctest::Approx(gauge_phase_shift(lin, chord, q, kNat)).epsilon(1e-12));
}

TEST_CASE("multivalued azimuthal chi: continued along the path, no branch-cut jump") {
    Solenoid s;
    const GaugeField field = coulomb_solenoid_field(s);
    const double q = 1.0;
    const ChiFunction az = chi_azimuthal(0.15);

    // full turn: the continued chi advances by its period, although the naive
    // endpoint difference is zero
    const PathSpec loop = PathSpec::circle(Vec3{0, 0, 0}, 0.5, 1, "loop");
    const double analytic = gauge_phase_shift(az, loop, q, kNat);
    CHECK(analytic == doctest::Approx(-(q / kNat.hbar) * az.period).epsilon(1e-12));

    const PhaseReport base = path_phase(field, loop, q, kNat, kSpec);
    const PhaseReport gauged = path_phase(apply_gauge(field, az), loop, q, kNat, kSpec);
    CHECK(gauged.phase - base.phase == doctest::Approx(analytic).epsilon(1e-9));

    // half-turn arc through the branch cut at theta = pi
    const PathSpec arc = PathSpec::arc(Vec3{0, 0, 0}, 0.5, pi / 2, 3 * pi / 2, "upper");
    const double arc_analytic = gauge_phase_shift(az, arc, q, kNat);
    CHECK(arc_analytic == doctest::Approx(-(q / kNat.hbar) * 0.15 * pi).epsilon(1e-12));
    const PhaseReport arc_base = path_phase(field, arc, q, kNat, kSpec);
    const PhaseReport arc_gauged = path_phase(apply_gauge(field, az), arc, q, kNat, kSpec);
    CHECK(arc_gauged.phase - arc_base.phase == doctest::Approx(arc_analytic).epsilon(1e-9));
}

TEST_CASE("apply_gauge stacks and tags") {
    Solenoid s;
    const GaugeField base = coulomb_solenoid_field(s);
    const ChiFunction lin = chi_from_label("linear:0.3:1,0,0");
    const GaugeField gauged = apply_gauge(base, lin);
    CHECK(gauged.chi_applied.has_value());
    CHECK(gauged.gauge_tag != base.gauge_tag);
    const Vec3 r{0.7, 0.1, 0.0};
    CHECK(norm(gauged(r) - base(r) - lin.gradient(r)) < 1e-15);
}
