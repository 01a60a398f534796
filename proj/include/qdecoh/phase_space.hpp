#ifndef QDECOH_PHASE_SPACE_HPP
#define QDECOH_PHASE_SPACE_HPP

#include <iosfwd>

#include "qdecoh/overlap.hpp"

namespace qdecoh {

enum class Kernel { Wigner, Husimi };

/// Real distribution F(q_k, p_j) on the grid's (q, p) lattice, row-major in
/// q. The kernel tag records which chi-kernel produced it (Wigner: chi = 1;
/// Husimi: Gaussian chi with squeezing lambda).
struct PhaseSpaceDistribution {
    GridPtr grid;
    std::vector<double> values; // values[k*n + j], q row k, p column j
    Kernel kernel = Kernel::Wigner;
    double lambda = 0; // Husimi only

    double at(int k, int j) const { return values[static_cast<size_t>(k) * grid->size() + j]; }
};

/// W(q,p) = (2 pi hbar)^{-1} integral dq' e^{i q' p/hbar}
///          psi(q - q'/2) psi*(q + q'/2),
/// computed per q row from the correlation on a doubled-resolution
/// auxiliary lattice (spectral upsampling), one transform per row.
/// Marginals reproduce |psi(q)|^2 and |psit(p)|^2.
PhaseSpaceDistribution wigner(const WaveFunction& psi);

/// Wigner function convolved with the minimum-uncertainty Gaussian kernel
/// sigma_q^2 = hbar/(2 lambda^2), sigma_p^2 = hbar lambda^2/2 (spectral
/// convolution). Nonnegative.
PhaseSpaceDistribution husimi(const WaveFunction& psi, double lambda);

/// |C|^2 = (2 pi hbar) integral F(q,p) F(q+dq, p+dp) dq dp, the shifted
/// factor obtained by periodic bilinear interpolation. Valid only for
/// |chi| = 1 kernels (Wigner).
double moyal_overlap(const PhaseSpaceDistribution& f, const Displacement& d);

/// Representation-independent overlap,
///   C = chi(dp/hbar, dq/hbar)^{-1} integral F(q,p) e^{i(q dp + p dq)/hbar},
/// which reduces to the plain Fourier transform of W for the Wigner kernel.
/// Refuses kernels with |chi| < 1e-8 at the requested displacement.
cplx overlap_from_distribution(const PhaseSpaceDistribution& f, const Displacement& d);

/// Kernel value chi(dp/hbar, dq/hbar) for the distribution's kernel tag.
double kernel_chi(const PhaseSpaceDistribution& f, const Displacement& d);

/// CSV matrix export: header row = p grid, first column = q grid.
void write_distribution_csv(std::ostream& os, const PhaseSpaceDistribution& f);

} // namespace qdecoh

#endif
