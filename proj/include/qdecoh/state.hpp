#ifndef QDECOH_STATE_HPP
#define QDECOH_STATE_HPP

#include "qdecoh/wavefunction.hpp"

namespace qdecoh {

/// First and second moments of a state. cov_qp is the symmetrized cross
/// term, 0.5*<qp + pq> - <q><p>.
struct Moments {
    double mean_q = 0;
    double mean_p = 0;
    double var_q = 0;
    double var_p = 0;
    double cov_qp = 0;
};

/// General one-dimensional Gaussian,
///   psi(q) = (2 z_R / (pi |z|^2))^{1/4} e^{i p0 q/hbar} e^{-(q-q0)^2/z},
/// z = z_R + i z_I, z_R = (hbar/sigma_p)^2,
/// z_I = z_R sqrt(4 sigma_q^2 sigma_p^2 - hbar^2)/hbar.
/// Requires 2 sigma_q sigma_p >= hbar so that z_I is real. For
/// 2 sigma_q sigma_p > hbar the state carries a positive q-p correlation,
/// cov_qp = sqrt(4 sigma_q^2 sigma_p^2 - hbar^2)/2.
struct GaussianSpec {
    double q0 = 0;
    double p0 = 0;
    double sigma_q = 0;
    double sigma_p = 0;
    double hbar = 0;
};

WaveFunction gaussian_state(GridPtr grid, const GaussianSpec& spec);

/// Coherent state of the oscillator H = p^2/(2m) + m omega^2 q^2/2:
/// minimum-uncertainty Gaussian with sigma_q = sqrt(hbar/(2 m omega)),
/// sigma_p = sqrt(m omega hbar/2), centered at
/// <q> = sqrt(2 hbar/(m omega)) Re(alpha), <p> = sqrt(2 hbar m omega) Im(alpha).
/// (Phase convention fixed project-wide; the global phase is dropped.)
WaveFunction coherent_state(GridPtr grid, cplx alpha, double m, double omega);

/// Position moments by position-space quadrature, momentum moments in
/// momentum space, cov_qp = Re<psi|q p psi> - <q><p> applied spectrally.
Moments moments(const WaveFunction& psi);

/// Characteristic action of the displacement (dq, dp) in a state with the
/// given moments:
///   dS^2 = var_q dp^2 + var_p dq^2 + 2 cov_qp dq dp.
double delta_s(const Moments& mom, double dq, double dp);

/// |dq * dp|
double delta_z(double dq, double dp);

/// Phase-space rotation diagonalizing the covariance matrix.
/// In the rotated frame dS^2 = (sigma_qt * dpt)^2 + (sigma_pt * dqt)^2
/// where the pair (dp, dq) rotates by the same angle as (q, p):
///   dpt = cos(theta) dp + sin(theta) dq,
///   dqt = -sin(theta) dp + cos(theta) dq.
/// sigma_qt * sigma_pt is the classical action of the state support.
struct RotatedFrame {
    double theta = 0;
    double sigma_qt = 0;
    double sigma_pt = 0;
};
RotatedFrame principal_rotation(const Moments& mom);

/// hbar^2/(sigma_q sigma_p): the scale of the smallest interference
/// structures of a well-developed chaotic state.
double patch_action(const Moments& mom, double hbar);

} // namespace qdecoh

#endif
