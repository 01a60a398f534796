#ifndef QDECOH_OVERLAP_HPP
#define QDECOH_OVERLAP_HPP

#include <array>
#include <vector>

#include "qdecoh/state.hpp"

namespace qdecoh {

/// Rigid phase-space shift applied by the displacement operator
/// D(dq, dp) = exp{i (p dq + q dp)/hbar}.
struct Displacement {
    double dq = 0;
    double dp = 0;
};

/// Von Neumann coupling strengths and interaction time; maps onto a
/// displacement through dq = -2 c_p dt, dp = -2 c_q dt.
struct CouplingSpec {
    double c_q = 0;
    double c_p = 0;
    double dt = 0;
};

/// State of the two-level system prior to the interaction,
/// |chi> = alpha|+> + beta|->.
struct TwoLevelAmplitudes {
    cplx alpha;
    cplx beta;
};

/// One ray scan of the overlap, ordered by increasing displacement.
struct OverlapCurve {
    double ratio = 0; // dq per unit dp along the ray
    struct Row {
        double dq, dp, ds, dz, overlap_sq, arg_c;
    };
    std::vector<Row> rows;
};

/// D(dq, dp)|psi>, realized as the momentum-space phase e^{i p dq/hbar},
/// the position-space phase e^{i q dp/hbar}, and the symmetric-ordering
/// scalar phase e^{i dq dp/(2 hbar)}. Exactly unitary on the grid.
/// Shifts <q> by -dq and <p> by +dp; widths unchanged.
WaveFunction apply_displacement(const WaveFunction& psi, const Displacement& d);

/// C_psi(dq, dp) = <psi|D(dq, dp)|psi>, evaluated as the phased
/// autocorrelation integral with the shifted factor obtained spectrally.
cplx overlap_c(const WaveFunction& psi, const Displacement& d);

/// Exact Gaussian overlap: |C|^2 = exp(-dS^2/hbar^2) with
///   dS^2 = (sigma_p dq)^2 + (sigma_q dp)^2
///          + dq dp sqrt(4 sigma_q^2 sigma_p^2 - hbar^2).
/// The cross term carries the sign of dq*dp, matching the state's built-in
/// positive q-p correlation; for dq*dp >= 0 this is the familiar
/// sqrt((2 dp dq sigma_p sigma_q/hbar)^2 - (dp dq)^2) form.
struct GaussianOverlap {
    double overlap_sq;
    double ds;
};
GaussianOverlap gaussian_overlap_closed_form(const GaussianSpec& spec,
                                             const Displacement& d);

Displacement coupling_to_displacement(const CouplingSpec& c);

/// Reduced density matrix of the two-level system after the coupling,
/// rho = [[|alpha|^2, alpha conj(beta) c], [conj(...), |beta|^2]],
/// where c = <psi_-|psi_+> is the overlap of the displaced environment
/// branches (the caller keeps the sign bookkeeping).
using Matrix2 = std::array<std::array<cplx, 2>, 2>;
Matrix2 reduced_density(const TwoLevelAmplitudes& chi, cplx c);

/// Samples the overlap along the ray dq = ratio*dp at
/// dp_j = j*dp_max/n_samples, j = 0..n_samples. Rows that would wrap
/// around the grid truncate the scan with a warning.
OverlapCurve overlap_scan(const WaveFunction& psi, double ratio, int n_samples,
                          double dp_max);

/// First crossing of |C|^2 = target along the ray from zero displacement,
/// bracketed and bisected to relative 1e-6 in the ray parameter.
/// Returns the characteristic actions of the crossing displacement,
/// dS via the exact state moments and dZ = |dq dp|.
struct Threshold {
    double ds0;
    double dz0;
    Displacement at;
};
Threshold threshold_search(const WaveFunction& psi, double ratio, double target);

} // namespace qdecoh

#endif
