#ifndef QDECOH_WAVEFUNCTION_HPP
#define QDECOH_WAVEFUNCTION_HPP

#include <vector>

#include "qdecoh/grid.hpp"

namespace qdecoh {

/// Complex amplitudes on a Grid, unit L2 norm: sum |psi_k|^2 dq = 1.
/// Treated as immutable by every operation (input in, new output out).
struct WaveFunction {
    GridPtr grid;
    std::vector<cplx> amp;

    int size() const { return static_cast<int>(amp.size()); }
};

/// sum |psi_k|^2 dq
double norm_sq(const WaveFunction& psi);

/// Rescales to unit norm. Throws guard_error on a zero state.
WaveFunction normalized(WaveFunction psi);

/// Largest |amplitude| within 5 grid points of either edge.
double edge_amplitude(const WaveFunction& psi);

/// Wrap-around guard: warns (once) above 1e-12, throws guard_error above 1e-6.
void require_fits(const WaveFunction& psi, const char* what);

/// Forward spectral transform with the hbar-scaled Fourier kernel,
///   psit(p) = (2 pi hbar)^{-1/2} integral dq e^{-i q p/hbar} psi(q),
/// returned on the monotonic momentum lattice. Unitary: Parseval holds
/// between position and momentum norms.
std::vector<cplx> to_momentum(const WaveFunction& psi);

/// Inverse of to_momentum; phi indexed on the monotonic momentum lattice.
WaveFunction to_position(GridPtr grid, const std::vector<cplx>& phi);

} // namespace qdecoh

#endif
