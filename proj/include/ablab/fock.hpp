#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <map>
#include <span>
#include <vector>

#include "ablab/charge.hpp"
#include "ablab/constants.hpp"
#include "ablab/mode_grid.hpp"
#include "ablab/perturbation.hpp"
#include "ablab/solenoid.hpp"

namespace ablab {

// Joint basis of two "interaction sign" qubits (one per subsystem, q_z
// eigenvalues +-1) and a photon Fock space truncated at a total-occupation
// cutoff. Sector index s in 0..3 maps to (s_C, s_S) = (+,+), (+,-), (-,+),
// (-,-); the physical sector of the transition amplitude is s = 0.
// State index = 4 * fock_index + sector.
struct TruncatedSpace {
    int n_pairs_active = 0;  // leading (mode, polarisation) pairs that carry photons
    int photon_cutoff = 0;   // max total photon number per basis state
    std::vector<std::vector<int>> fock_states;

    int fock_dimension() const { return int(fock_states.size()); }
    int dimension() const { return 4 * fock_dimension(); }
    int fock_index(const std::vector<int>& occupation) const;

    static int sign_c(int sector) { return sector < 2 ? 1 : -1; }
    static int sign_s(int sector) { return (sector % 2) == 0 ? 1 : -1; }

    static TruncatedSpace build(int n_pairs_active, int photon_cutoff,
                                int dimension_cap = 4096);

  private:
    std::map<std::vector<int>, int> index_;
};

struct OperatorMatrix {
    Eigen::MatrixXcd m;
    bool hermitian = false;
};

// H = E_C q_z^C + E_S q_z^S + sum_k hbar w_k a_k^dag a_k
//   + sum_k (s_C Mc_k + s_S Ms_k) a_k^dag + h.c.
// block diagonal over the four (s_C, s_S) sectors.
OperatorMatrix build_hamiltonian(const ModeGrid& grid, const ModeCouplings& couplings,
                                 const TruncatedSpace& space, const Constants& k,
                                 double e_charge = 0.0, double e_source = 0.0);
OperatorMatrix build_hamiltonian(const ModeGrid& grid, const ChargeState& ch,
                                 std::span<const CurrentElement> elements,
                                 const TruncatedSpace& space, const Constants& k,
                                 double e_charge = 0.0, double e_source = 0.0);

struct EvolveResult {
    std::complex<double> amplitude;
    double modulus = 0.0;
    double phase = 0.0;  // arg(amplitude)
};

// <sector, vac| e^{-iH tau/hbar} |sector, vac> for all four sectors.
std::array<EvolveResult, 4> evolve_vacuum_amplitudes(const OperatorMatrix& h,
                                                     const TruncatedSpace& space, double tau,
                                                     const Constants& k);

// The physical-sector (s_C = s_S = +1) vacuum persistence amplitude.
EvolveResult evolve_amplitude(const OperatorMatrix& h, const TruncatedSpace& space, double tau,
                              const Constants& k);

// Cross-coupling part of the evolution phase, isolated by the four-sector
// combination [arg(++) - arg(+-) - arg(-+) + arg(--)]/4: free energies and
// same-system self terms cancel sector-wise.
double exact_cross_phase(const OperatorMatrix& h, const TruncatedSpace& space, double tau,
                         const Constants& k);

}  // namespace ablab
