#include "ablab/perturbation.hpp"

#include <cmath>
#include <unordered_map>

#include "ablab/errors.hpp"

namespace ablab {

namespace {

using cplx = std::complex<double>;

cplx cis(double phase) { return {std::cos(phase), std::sin(phase)}; }

}  // namespace

ModeCouplings coupling_amplitudes(const ModeGrid& grid, const ChargeState& ch,
                                  std::span<const CurrentElement> elements) {
    ModeCouplings out;
    out.charge = charge_coupling_amplitudes(grid, ch);
    out.source.resize(grid.pair_count());
    for (std::size_t mi = 0; mi < grid.modes.size(); ++mi) {
        const PhotonMode& m = grid.modes[mi];
        for (int p = 0; p < 2; ++p) {
            const Vec3& u = m.pol[p];
            cplx src{};
            for (const auto& e : elements) {
                src += dot(e.idl, u) * cis(dot(m.k, e.position));
            }
            out.source[2 * mi + p] = m.g * src;
        }
    }
    return out;
}

std::vector<std::complex<double>> charge_coupling_amplitudes(const ModeGrid& grid,
                                                             const ChargeState& ch) {
    std::vector<cplx> out(grid.pair_count());
    for (std::size_t mi = 0; mi < grid.modes.size(); ++mi) {
        const PhotonMode& m = grid.modes[mi];
        const cplx charge_phase = cis(dot(m.k, ch.position));
        for (int p = 0; p < 2; ++p) {
            out[2 * mi + p] = m.g * ch.q * dot(ch.velocity, m.pol[p]) * charge_phase;
        }
    }
    return out;
}

ModeCouplings coupling_amplitudes(const ModeGrid& grid, const ChargeState& ch,
                                  const RingStack& stack) {
    ModeCouplings out;
    out.charge.resize(grid.pair_count());
    out.source.resize(grid.pair_count());

    // Cache the axial sum per distinct k_z and the in-plane segment sums per
    // distinct (k_x, k_y), keyed by the integer mode indices; the mode loop
    // then only combines cached pieces.
    std::unordered_map<long long, cplx> z_sums;
    struct PlaneSum {
        cplx sx, sy;
    };
    std::unordered_map<long long, PlaneSum> plane_sums;

    auto z_sum_for = [&](int nz, double kz) {
        auto it = z_sums.find(nz);
        if (it != z_sums.end()) return it->second;
        cplx acc{};
        for (double z : stack.ring_z) acc += cis(kz * z);
        z_sums.emplace(nz, acc);
        return acc;
    };
    auto plane_sum_for = [&](int nx, int ny, double kx, double ky) {
        const long long key = (static_cast<long long>(nx) << 32) ^ (ny & 0xffffffffLL);
        auto it = plane_sums.find(key);
        if (it != plane_sums.end()) return it->second;
        PlaneSum acc{};
        for (std::size_t i = 0; i < stack.segment_positions.size(); ++i) {
            const Vec3& x = stack.segment_positions[i];
            const cplx ph = cis(kx * x.x + ky * x.y);
            acc.sx += stack.segment_idl[i].x * ph;
            acc.sy += stack.segment_idl[i].y * ph;
        }
        plane_sums.emplace(key, acc);
        return acc;
    };

    for (std::size_t mi = 0; mi < grid.modes.size(); ++mi) {
        const PhotonMode& m = grid.modes[mi];
        const cplx charge_phase = cis(dot(m.k, ch.position));
        const cplx zs = z_sum_for(m.n[2], m.k.z);
        const PlaneSum ps = plane_sum_for(m.n[0], m.n[1], m.k.x, m.k.y);
        for (int p = 0; p < 2; ++p) {
            const Vec3& u = m.pol[p];
            out.charge[2 * mi + p] = m.g * ch.q * dot(ch.velocity, u) * charge_phase;
            out.source[2 * mi + p] = m.g * (ps.sx * u.x + ps.sy * u.y) * zs;
        }
    }
    return out;
}

SecondOrderEnergies second_order_energies(const ModeGrid& grid, const ModeCouplings& c,
                                          const Constants& k) {
    if (c.charge.size() != grid.pair_count() || c.source.size() != grid.pair_count())
        throw ConfigurationError("coupling array size does not match the mode grid");
    SecondOrderEnergies e;
    for (std::size_t mi = 0; mi < grid.modes.size(); ++mi) {
        const double hw = k.hbar * grid.modes[mi].omega;
        for (int p = 0; p < 2; ++p) {
            const cplx mc = c.charge[2 * mi + p];
            const cplx ms = c.source[2 * mi + p];
            e.cross -= 2.0 * std::real(mc * std::conj(ms)) / hw;
            e.self_charge -= std::norm(mc) / hw;
            e.self_source -= std::norm(ms) / hw;
        }
    }
    return e;
}

double cross_interaction_energy(const ModeGrid& grid, const ModeCouplings& c, const Constants& k) {
    return second_order_energies(grid, c, k).cross;
}

double second_order_phase(const ModeGrid& grid, const ModeCouplings& c, double tau,
                          const Constants& k) {
    return -cross_interaction_energy(grid, c, k) * tau / k.hbar;
}

double second_order_phase(const ModeGrid& grid, const ChargeState& ch, const RingStack& stack,
                          double tau, const Constants& k) {
    const ModeCouplings c = coupling_amplitudes(grid, ch, stack);
    return second_order_phase(grid, c, tau, k);
}

double cross_phase_finite_time(const ModeGrid& grid, const ModeCouplings& c, double tau,
                               const Constants& k) {
    if (c.charge.size() != grid.pair_count() || c.source.size() != grid.pair_count())
        throw ConfigurationError("coupling array size does not match the mode grid");
    double phase = 0.0;
    for (std::size_t mi = 0; mi < grid.modes.size(); ++mi) {
        const double w = grid.modes[mi].omega;
        const double hw = k.hbar * w;
        const double secular = tau / (k.hbar * hw);
        const double transient = std::sin(w * tau) / (hw * hw);
        for (int p = 0; p < 2; ++p) {
            phase += 2.0 * std::real(c.charge[2 * mi + p] * std::conj(c.source[2 * mi + p])) *
                     (secular - transient);
        }
    }
    return phase;
}

double analytic_interaction_energy(const ChargeState& ch, std::span<const CurrentElement> elements,
                                   const Constants& k) {
    return -ch.q * dot(ch.velocity, biot_savart_vector_potential(ch.position, elements, k));
}

double analytic_phase(const ChargeState& ch, std::span<const CurrentElement> elements, double tau,
                      const Constants& k) {
    return -analytic_interaction_energy(ch, elements, k) * tau / k.hbar;
}

}  // namespace ablab
