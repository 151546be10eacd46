#include <algorithm>
#include <cmath>
#include <complex>

#include "ablab/constants.hpp"
#include "ablab/errors.hpp"
#include "ablab/mode_grid.hpp"
#include "ablab/perturbation.hpp"
#include "ablab/solenoid.hpp"
#include "doctest.h"

using namespace ablab;

namespace {
const Constants kNat = Constants::natural();
}

TEST_CASE("mode grid enumeration, ordering and dispersion") {
    const ModeGrid grid = build_mode_grid(8.0, 2, std::nullopt, kNat);
    CHECK(grid.modes.size() == 5 * 5 * 5 - 1);
    CHECK(grid.pair_count() == 2 * grid.modes.size());

    // sorted by (|n|^2, lex): six softest modes first
    for (std::size_t i = 0; i < 6; ++i) {
        const auto& n = grid.modes[i].n;
        CHECK(n[0] * n[0] + n[1] * n[1] + n[2] * n[2] == 1);
    }
    CHECK(grid.modes[0].n == std::array<int, 3>{-1, 0, 0});
    CHECK(grid.modes[5].n == std::array<int, 3>{1, 0, 0});

    const double dk = 2 * pi / 8.0;
    for (const auto& m : grid.modes) {
        CHECK(m.omega == doctest::Approx(kNat.c * norm(m.k)).epsilon(1e-15));
        CHECK(m.k.x == doctest::Approx(dk * m.n[0]).epsilon(1e-15));
        // g = sqrt(hbar / (2 eps0 omega V))
        CHECK(m.g == doctest::Approx(std::sqrt(1.0 / (2 * m.omega * 512.0))).epsilon(1e-14));
    }

    // +-k pairs share the polarisation basis
    const auto& plus = grid.modes[5];
    const auto& minus = grid.modes[0];
    CHECK(norm(plus.pol[0] - minus.pol[0]) == 0.0);
    CHECK(norm(plus.pol[1] - minus.pol[1]) == 0.0);

    // g scales as omega^{-1/2} between shells
    const auto softer = std::find_if(grid.modes.begin(), grid.modes.end(), [](const PhotonMode& m) {
        return m.n == std::array<int, 3>{1, 1, 0};
    });
    REQUIRE(softer != grid.modes.end());
    CHECK(grid.modes[5].g / softer->g == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));
}

TEST_CASE("polarisations are transverse and orthonormal") {
    const ModeGrid grid = build_mode_grid(9.7, 3, std::nullopt, kNat);
    for (const auto& m : grid.modes) {
        const Vec3 khat = normalized(m.k);
        CHECK(std::abs(dot(khat, m.pol[0])) < 1e-13);
        CHECK(std::abs(dot(khat, m.pol[1])) < 1e-13);
        CHECK(norm(m.pol[0]) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(norm(m.pol[1]) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(dot(m.pol[0], m.pol[1])) < 1e-13);
    }
}

TEST_CASE("spherical cutoff and coupling scale") {
    const ModeGrid cube = build_mode_grid(8.0, 3, std::nullopt, kNat);
    const double w_cut = 2.5 * 2 * pi / 8.0;
    const ModeGrid ball = build_mode_grid(8.0, 3, w_cut, kNat);
    CHECK(ball.modes.size() < cube.modes.size());
    for (const auto& m : ball.modes) CHECK(m.omega <= w_cut + 1e-12);

    const ModeGrid strong = build_mode_grid(8.0, 2, std::nullopt, kNat, 3.0);
    CHECK(strong.modes[0].g == doctest::Approx(3.0 * cube.modes[0].g).epsilon(1e-15));

    CHECK_THROWS_AS(build_mode_grid(0.0, 2, std::nullopt, kNat), ConfigurationError);
    CHECK_THROWS_AS(build_mode_grid(8.0, 0, std::nullopt, kNat), ConfigurationError);
}

TEST_CASE("coupling amplitudes: ring-stack fast path matches the generic element sum") {
    Solenoid s;
    s.finite_model = FiniteSolenoidModel{7.3, 24, 16};  // incommensurate on purpose
    ChargeState ch;
    const RingStack stack = solenoid_ring_stack(s, kNat);
    const auto elements = stack.flatten();
    const ModeGrid grid = build_mode_grid(7.9, 2, std::nullopt, kNat);

    const ModeCouplings fast = coupling_amplitudes(grid, ch, stack);
    const ModeCouplings slow = coupling_amplitudes(grid, ch, elements);
    REQUIRE(fast.source.size() == grid.pair_count());
    REQUIRE(slow.source.size() == grid.pair_count());

    double max_diff = 0.0;
    double max_mag = 0.0;
    for (std::size_t i = 0; i < fast.source.size(); ++i) {
        max_diff = std::max(max_diff, std::abs(fast.source[i] - slow.source[i]));
        max_mag = std::max(max_mag, std::abs(slow.source[i]));
        CHECK(std::abs(fast.charge[i] - slow.charge[i]) == 0.0);
    }
    CHECK(max_diff < 1e-12 * max_mag);

    const auto charge_only = charge_coupling_amplitudes(grid, ch);
    for (std::size_t i = 0; i < charge_only.size(); ++i)
        CHECK(std::abs(charge_only[i] - slow.charge[i]) == 0.0);
}

TEST_CASE("commensurate box: source couples only to k_z = 0 modes") {
    Solenoid s;  // length 8 model inside a box of length 8
    ChargeState ch;
    const RingStack stack = solenoid_ring_stack(s, kNat);
    const ModeGrid grid = build_mode_grid(8.0, 3, std::nullopt, kNat);
    const ModeCouplings c = coupling_amplitudes(grid, ch, stack);

    double max_axial = 0.0;
    double max_planar = 0.0;
    for (std::size_t i = 0; i < grid.modes.size(); ++i) {
        const double mag = std::max(std::abs(c.source[2 * i]), std::abs(c.source[2 * i + 1]));
        if (grid.modes[i].n[2] != 0)
            max_axial = std::max(max_axial, mag);
        else
            max_planar = std::max(max_planar, mag);
    }
    CHECK(max_planar > 0.0);
    CHECK(max_axial < 1e-12 * max_planar);  // geometric z sum cancels exactly
}

TEST_CASE("second-order cross energy: signs, bilinearity, and the continuum limit") {
    Solenoid s;
    ChargeState ch;
    const RingStack stack = solenoid_ring_stack(s, kNat);
    const auto elements = stack.flatten();

    const ModeGrid grid = build_mode_grid(8.0, 12, std::nullopt, kNat);
    const ModeCouplings c = coupling_amplitudes(grid, ch, stack);

    const SecondOrderEnergies e = second_order_energies(grid, c, kNat);
    CHECK(e.self_charge < 0.0);  // second-order level shifts push down
    CHECK(e.self_source < 0.0);
    CHECK(e.cross == doctest::Approx(cross_interaction_energy(grid, c, kNat)));

    // frozen: the 15624-mode commensurate sum lands within 2% of -q v.A
    CHECK(e.cross == doctest::Approx(-0.00972362553494539).epsilon(1e-12));
    const double reference = analytic_interaction_energy(ch, elements, kNat);
    CHECK(reference == doctest::Approx(-0.009918829972487104).epsilon(1e-12));
    CHECK(std::abs(e.cross - reference) / std::abs(reference) < 0.02);

    // secular phase: -E tau / hbar, linear in tau
    CHECK(second_order_phase(grid, c, 3.0, kNat) ==
          doctest::Approx(-3.0 * e.cross).epsilon(1e-14));
    CHECK(second_order_phase(grid, ch, stack, 3.0, kNat) ==
          doctest::Approx(second_order_phase(grid, c, 3.0, kNat)).epsilon(1e-14));
    CHECK(analytic_phase(ch, elements, 3.0, kNat) ==
          doctest::Approx(-3.0 * reference).epsilon(1e-14));

    // exactly quadratic in the coupling scale
    const ModeGrid half = build_mode_grid(8.0, 12, std::nullopt, kNat, 0.5);
    const ModeCouplings ch_half = coupling_amplitudes(half, ch, stack);
    CHECK(cross_interaction_energy(half, ch_half, kNat) * 4.0 ==
          doctest::Approx(e.cross).epsilon(1e-13));

    // finite-time phase approaches the secular one for large tau
    const double tau = 200.0;
    CHECK(cross_phase_finite_time(grid, c, tau, kNat) ==
          doctest::Approx(second_order_phase(grid, c, tau, kNat)).epsilon(2e-2));
}
