#ifndef QDECOH_BERRY_VOROS_HPP
#define QDECOH_BERRY_VOROS_HPP

#include <cstdint>
#include <vector>

#include "qdecoh/common.hpp"

namespace qdecoh {

/// Microcanonical (Berry-Voros) model of an f-dimensional isotropic
/// harmonic environment: reference mass M and frequency omega, the
/// per-axis (m_i, omega_i) of the physical oscillator for the rescaling
/// map, and the eigenstate expansion of the environmental state through
/// its energies E_n and weights |c_n|^2 (degeneracy absorbed into the
/// weights; the spectrum is treated as non-degenerate).
struct BVModel {
    int f = 1;
    double M = 1.0;
    double omega = 0.1;
    double hbar = 0.16;
    std::vector<double> omegas; // length f
    std::vector<double> masses; // length f
    std::vector<double> energies;
    std::vector<double> weights;
};

/// f-dimensional displacement in the rescaled coordinates.
struct DisplacementF {
    std::vector<double> dq;
    std::vector<double> dp;
};

/// Isotropic model with E_n = hbar*omega*(n + f/2) and the Poisson weights
/// of the coherent state |alpha>. n_max = 0 picks
/// ceil(|alpha|^2 + 12 sqrt(|alpha|^2)) so the tail mass stays below 1e-10.
BVModel bv_model_isotropic_poisson(int f, double M, double omega, double hbar,
                                   cplx alpha, int n_max = 0);

/// rho(E) = E^{f-1} / (Gamma(f) (hbar omega)^f)
double density_of_states(double E, const BVModel& model);

/// w_n = e^{-|alpha|^2} |alpha|^{2n} / n!; throws if the truncated sum
/// falls below 1 - 1e-10.
std::vector<double> poisson_weights(cplx alpha, int n_max);

/// Microcanonical widths of the eigenstate at energy E:
/// sigma_p = sqrt(M E), sigma_q = sqrt(E/(M omega^2)).
struct BVSigma {
    double sigma_q;
    double sigma_p;
};
BVSigma bv_sigma(double E, const BVModel& model);

/// dS_n = sqrt((|dp| sigma_q)^2 + (|dq| sigma_p)^2), Euclidean norms of the
/// rescaled displacement vectors.
double bv_action_n(const DisplacementF& d, double sigma_q, double sigma_p);

/// Physical -> rescaled displacement:
/// dq_i = sqrt(m_i/M) dq~_i, dp_i = sqrt(M omega^2/(m_i omega_i^2)) dp~_i.
DisplacementF rescale_displacement(const DisplacementF& physical, const BVModel& model);

/// Per-eigenstate characteristic value
///   2^{(f-1)/2} Gamma(f) J_{f-1}(sqrt(2) dS_n/hbar) / (dS_n/hbar)^{f-1},
/// continued to 1 at dS_n = 0 through the small-argument series.
double bv_eigen_char(int f, double ds_n, double hbar);

/// Widths and actions of the whole expansion; ds_bar^2 = sum w_n ds_n^2.
struct BVActionSet {
    std::vector<double> sigma_qn, sigma_pn, ds_n;
    double ds_bar;
};
BVActionSet bv_action_set(const BVModel& model, const DisplacementF& d);

/// Time-averaged overlap under the Berry-Voros conjecture,
/// c_bar = sum_n w_n * bv_eigen_char(f, dS_n), with the averaged action
/// ds_bar for the Fig. 3 abscissa.
struct BVOverlap {
    double c_bar;
    double ds_bar;
};
BVOverlap bv_overlap(const BVModel& model, const DisplacementF& d);

/// Monte-Carlo microcanonical average of e^{i(p.dq + q.dp)/hbar} on the
/// shell H = E, sampled exactly by radial projection of 2f-dimensional
/// Gaussian draws. The sample budget is split over 8 independent
/// (seed, stream-index) seeded streams and merged in stream order, so the
/// estimate is deterministic for a fixed seed.
struct McEstimate {
    cplx mean;
    double stderr_re;
    double stderr_im;
    std::int64_t n;
};
McEstimate mc_microcanonical_oracle(const BVModel& model, double E,
                                    const DisplacementF& d, std::int64_t n_samples,
                                    std::uint64_t seed);

} // namespace qdecoh

#endif
