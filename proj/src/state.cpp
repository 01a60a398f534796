#include "qdecoh/state.hpp"

#include <cmath>
#include <numbers>

namespace qdecoh {

WaveFunction gaussian_state(GridPtr grid, const GaussianSpec& spec) {
    const Grid& g = *grid;
    if (!(spec.sigma_q > 0) || !(spec.sigma_p > 0))
        throw std::invalid_argument("gaussian_state: widths must be positive");
    if (spec.hbar != g.hbar())
        throw std::invalid_argument("gaussian_state: spec.hbar differs from grid hbar");
    const double h = spec.hbar;
    const double disc = 4.0 * spec.sigma_q * spec.sigma_q * spec.sigma_p * spec.sigma_p - h * h;
    if (disc < 0)
        throw std::invalid_argument(
            "gaussian_state: 2 sigma_q sigma_p < hbar, no such pure Gaussian");
    const double z_r = (h / spec.sigma_p) * (h / spec.sigma_p);
    const double z_i = z_r * std::sqrt(disc) / h;
    const cplx z(z_r, z_i);

    std::vector<cplx> amp(g.size());
    const double pref = std::pow(2.0 * z_r / (std::numbers::pi * std::norm(z)), 0.25);
    for (int k = 0; k < g.size(); ++k) {
        const double u = g.q(k) - spec.q0;
        amp[k] = pref * std::polar(1.0, spec.p0 * g.q(k) / h) * std::exp(-u * u / z);
    }
    WaveFunction psi = normalized(WaveFunction{std::move(grid), std::move(amp)});
    require_fits(psi, "gaussian_state");
    return psi;
}

WaveFunction coherent_state(GridPtr grid, cplx alpha, double m, double omega) {
    if (!(m > 0) || !(omega > 0))
        throw std::invalid_argument("coherent_state: m and omega must be positive");
    const double h = grid->hbar();
    GaussianSpec spec;
    spec.sigma_q = std::sqrt(h / (2.0 * m * omega));
    spec.sigma_p = std::sqrt(m * omega * h / 2.0);
    spec.q0 = std::sqrt(2.0 * h / (m * omega)) * alpha.real();
    spec.p0 = std::sqrt(2.0 * h * m * omega) * alpha.imag();
    spec.hbar = h;
    return gaussian_state(std::move(grid), spec);
}

Moments moments(const WaveFunction& psi) {
    const Grid& g = *psi.grid;
    const int n = g.size();
    const double dq = g.dq(), dp = g.dp();

    double mq = 0, mq2 = 0;
    for (int k = 0; k < n; ++k) {
        const double w = std::norm(psi.amp[k]);
        mq += w * g.q(k);
        mq2 += w * g.q(k) * g.q(k);
    }
    mq *= dq;
    mq2 *= dq;

    std::vector<cplx> phi = to_momentum(psi);
    double mp = 0, mp2 = 0;
    for (int j = 0; j < n; ++j) {
        const double w = std::norm(phi[j]);
        mp += w * g.p(j);
        mp2 += w * g.p(j) * g.p(j);
    }
    mp *= dp;
    mp2 *= dp;

    // Re<psi| q (p psi)> with p applied in momentum space.
    for (int j = 0; j < n; ++j) phi[j] *= g.p(j);
    WaveFunction ppsi = to_position(psi.grid, phi);
    double qp = 0;
    for (int k = 0; k < n; ++k)
        qp += (std::conj(psi.amp[k]) * g.q(k) * ppsi.amp[k]).real();
    qp *= dq;

    Moments mom;
    mom.mean_q = mq;
    mom.mean_p = mp;
    mom.var_q = mq2 - mq * mq;
    mom.var_p = mp2 - mp * mp;
    mom.cov_qp = qp - mq * mp;
    return mom;
}

double delta_s(const Moments& mom, double dq, double dp) {
    const double s2 = mom.var_q * dp * dp + mom.var_p * dq * dq +
                      2.0 * mom.cov_qp * dq * dp;
    const double scale = mom.var_q * dp * dp + mom.var_p * dq * dq;
    if (s2 < -1e-12 * std::max(scale, 1e-300))
        throw std::invalid_argument("delta_s: negative variance, Moments are not a "
                                    "covariance matrix");
    return std::sqrt(std::max(s2, 0.0));
}

double delta_z(double dq, double dp) { return std::abs(dq * dp); }

RotatedFrame principal_rotation(const Moments& mom) {
    RotatedFrame out;
    const double scale = std::sqrt(mom.var_q * mom.var_p);
    if (std::abs(mom.cov_qp) < 1e-14 * scale) {
        out.theta = 0;
        out.sigma_qt = std::sqrt(mom.var_q);
        out.sigma_pt = std::sqrt(mom.var_p);
        return out;
    }
    out.theta = 0.5 * std::atan2(2.0 * mom.cov_qp, mom.var_q - mom.var_p);
    const double c = std::cos(out.theta), s = std::sin(out.theta);
    out.sigma_qt = std::sqrt(c * c * mom.var_q + s * s * mom.var_p +
                             2.0 * s * c * mom.cov_qp);
    out.sigma_pt = std::sqrt(s * s * mom.var_q + c * c * mom.var_p -
                             2.0 * s * c * mom.cov_qp);
    return out;
}

double patch_action(const Moments& mom, double hbar) {
    if (!(mom.var_q > 0) || !(mom.var_p > 0))
        throw std::invalid_argument("patch_action: widths must be positive");
    return hbar * hbar / (std::sqrt(mom.var_q) * std::sqrt(mom.var_p));
}

} // namespace qdecoh
