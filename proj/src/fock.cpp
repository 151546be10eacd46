#include "ablab/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ablab/errors.hpp"

namespace ablab {

namespace {

using cplx = std::complex<double>;

void enumerate_occupations(int n_pairs, int cutoff, std::vector<int>& scratch, int pair,
                           int used, std::vector<std::vector<int>>& out) {
    if (pair == n_pairs) {
        out.push_back(scratch);
        return;
    }
    for (int n = 0; n + used <= cutoff; ++n) {
        scratch[pair] = n;
        enumerate_occupations(n_pairs, cutoff, scratch, pair + 1, used + n, out);
    }
    scratch[pair] = 0;
}

}  // namespace

int TruncatedSpace::fock_index(const std::vector<int>& occupation) const {
    const auto it = index_.find(occupation);
    if (it == index_.end()) throw ConfigurationError("occupation vector outside truncated space");
    return it->second;
}

TruncatedSpace TruncatedSpace::build(int n_pairs_active, int photon_cutoff, int dimension_cap) {
    if (n_pairs_active < 0) throw ConfigurationError("n_pairs_active must be >= 0");
    if (photon_cutoff < 0) throw ConfigurationError("photon_cutoff must be >= 0");

    TruncatedSpace sp;
    sp.n_pairs_active = n_pairs_active;
    sp.photon_cutoff = photon_cutoff;
    std::vector<int> scratch(n_pairs_active, 0);
    enumerate_occupations(n_pairs_active, photon_cutoff, scratch, 0, 0, sp.fock_states);

    // (total occupation, lexicographic) order: the vacuum is fock state 0.
    std::sort(sp.fock_states.begin(), sp.fock_states.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  int ta = 0, tb = 0;
                  for (int v : a) ta += v;
                  for (int v : b) tb += v;
                  if (ta != tb) return ta < tb;
                  return a < b;
              });

    if (sp.dimension() > dimension_cap) {
        std::ostringstream msg;
        msg << "truncated space dimension " << sp.dimension() << " exceeds cap " << dimension_cap
            << " (" << n_pairs_active << " pairs, cutoff " << photon_cutoff << ")";
        throw ConfigurationError(msg.str());
    }
    for (std::size_t i = 0; i < sp.fock_states.size(); ++i) sp.index_[sp.fock_states[i]] = int(i);
    return sp;
}

OperatorMatrix build_hamiltonian(const ModeGrid& grid, const ModeCouplings& couplings,
                                 const TruncatedSpace& space, const Constants& k,
                                 double e_charge, double e_source) {
    const int n_pairs = space.n_pairs_active;
    if (couplings.charge.size() < std::size_t(n_pairs) ||
        couplings.source.size() < std::size_t(n_pairs))
        throw ConfigurationError("not enough coupling amplitudes for the active pairs");
    if (std::size_t(n_pairs) > grid.pair_count())
        throw ConfigurationError("truncated space activates more pairs than the grid has");

    const int fock_dim = space.fock_dimension();
    OperatorMatrix op;
    op.m = Eigen::MatrixXcd::Zero(space.dimension(), space.dimension());

    auto idx = [](int fock, int sector) { return 4 * fock + sector; };

    for (int f = 0; f < fock_dim; ++f) {
        const std::vector<int>& occ = space.fock_states[f];
        double photon_energy = 0.0;
        int total = 0;
        for (int j = 0; j < n_pairs; ++j) {
            photon_energy += k.hbar * grid.modes[j / 2].omega * occ[j];
            total += occ[j];
        }
        for (int sector = 0; sector < 4; ++sector) {
            const double free_part = e_charge * TruncatedSpace::sign_c(sector) +
                                     e_source * TruncatedSpace::sign_s(sector);
            op.m(idx(f, sector), idx(f, sector)) = photon_energy + free_part;
        }

        if (total >= space.photon_cutoff) continue;
        std::vector<int> raised = occ;
        for (int j = 0; j < n_pairs; ++j) {
            raised[j] = occ[j] + 1;
            const int fr = space.fock_index(raised);
            raised[j] = occ[j];
            const double amp = std::sqrt(double(occ[j] + 1));
            for (int sector = 0; sector < 4; ++sector) {
                const cplx m = double(TruncatedSpace::sign_c(sector)) * couplings.charge[j] +
                               double(TruncatedSpace::sign_s(sector)) * couplings.source[j];
                if (m == cplx{}) continue;
                op.m(idx(fr, sector), idx(f, sector)) += m * amp;
                op.m(idx(f, sector), idx(fr, sector)) += std::conj(m) * amp;
            }
        }
    }
    op.hermitian = true;
    return op;
}

OperatorMatrix build_hamiltonian(const ModeGrid& grid, const ChargeState& ch,
                                 std::span<const CurrentElement> elements,
                                 const TruncatedSpace& space, const Constants& k,
                                 double e_charge, double e_source) {
    const ModeCouplings c = coupling_amplitudes(grid, ch, elements);
    return build_hamiltonian(grid, c, space, k, e_charge, e_source);
}

std::array<EvolveResult, 4> evolve_vacuum_amplitudes(const OperatorMatrix& h,
                                                     const TruncatedSpace& space, double tau,
                                                     const Constants& k) {
    const int fock_dim = space.fock_dimension();
    if (h.m.rows() != space.dimension() || h.m.cols() != space.dimension())
        throw ConfigurationError("hamiltonian dimension does not match the truncated space");
    if (!h.hermitian) throw ConfigurationError("evolution requires a hermitian operator");

    std::array<EvolveResult, 4> out;
    Eigen::MatrixXcd block(fock_dim, fock_dim);
    for (int sector = 0; sector < 4; ++sector) {
        for (int a = 0; a < fock_dim; ++a) {
            for (int b = 0; b < fock_dim; ++b) {
                block(a, b) = h.m(4 * a + sector, 4 * b + sector);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("eigen decomposition failed in vacuum evolution");
        const auto& evals = solver.eigenvalues();
        const auto& evecs = solver.eigenvectors();
        cplx amp{};
        for (int j = 0; j < fock_dim; ++j) {
            const double weight = std::norm(evecs(0, j));  // vacuum is fock state 0
            const double angle = -evals(j) * tau / k.hbar;
            amp += weight * cplx{std::cos(angle), std::sin(angle)};
        }
        out[sector].amplitude = amp;
        out[sector].modulus = std::abs(amp);
        out[sector].phase = std::arg(amp);
    }
    return out;
}

EvolveResult evolve_amplitude(const OperatorMatrix& h, const TruncatedSpace& space, double tau,
                              const Constants& k) {
    return evolve_vacuum_amplitudes(h, space, tau, k)[0];
}

double exact_cross_phase(const OperatorMatrix& h, const TruncatedSpace& space, double tau,
                         const Constants& k) {
    const auto amps = evolve_vacuum_amplitudes(h, space, tau, k);
    double combo = amps[0].phase - amps[1].phase - amps[2].phase + amps[3].phase;
    while (combo > pi) combo -= 2.0 * pi;
    while (combo < -pi) combo += 2.0 * pi;
    return combo / 4.0;
}

}  // namespace ablab
