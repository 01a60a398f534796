#include "qdecoh/overlap.hpp"

#include <algorithm>
#include <cmath>

namespace qdecoh {

WaveFunction apply_displacement(const WaveFunction& psi, const Displacement& d) {
    const Grid& g = *psi.grid;
    const double h = g.hbar();
    std::vector<cplx> phi = to_momentum(psi);
    for (int j = 0; j < g.size(); ++j)
        phi[j] *= std::polar(1.0, g.p(j) * d.dq / h);
    WaveFunction out = to_position(psi.grid, phi);
    const double scalar = d.dq * d.dp / (2.0 * h);
    for (int k = 0; k < g.size(); ++k)
        out.amp[k] *= std::polar(1.0, g.q(k) * d.dp / h + scalar);
    require_fits(out, "apply_displacement");
    return out;
}

cplx overlap_c(const WaveFunction& psi, const Displacement& d) {
    WaveFunction shifted = apply_displacement(psi, d);
    cplx acc = 0;
    for (int k = 0; k < psi.size(); ++k)
        acc += std::conj(psi.amp[k]) * shifted.amp[k];
    return acc * psi.grid->dq();
}

GaussianOverlap gaussian_overlap_closed_form(const GaussianSpec& spec,
                                             const Displacement& d) {
    const double h = spec.hbar;
    const double disc =
        4.0 * spec.sigma_q * spec.sigma_q * spec.sigma_p * spec.sigma_p - h * h;
    if (disc < 0)
        throw std::invalid_argument(
            "gaussian_overlap_closed_form: 2 sigma_q sigma_p < hbar");
    const double ds2 = spec.sigma_p * spec.sigma_p * d.dq * d.dq +
                       spec.sigma_q * spec.sigma_q * d.dp * d.dp +
                       d.dq * d.dp * std::sqrt(disc);
    return GaussianOverlap{std::exp(-ds2 / (h * h)), std::sqrt(std::max(ds2, 0.0))};
}

Displacement coupling_to_displacement(const CouplingSpec& c) {
    if (c.dt < 0)
        throw std::invalid_argument("coupling_to_displacement: dt must be >= 0");
    return Displacement{-2.0 * c.c_p * c.dt, -2.0 * c.c_q * c.dt};
}

Matrix2 reduced_density(const TwoLevelAmplitudes& chi, cplx c) {
    if (std::abs(c) > 1.0 + 1e-12)
        throw std::invalid_argument("reduced_density: |c| > 1 is not an overlap");
    const double na = std::norm(chi.alpha), nb = std::norm(chi.beta);
    if (std::abs(na + nb - 1.0) > 1e-12)
        throw std::invalid_argument("reduced_density: |alpha|^2 + |beta|^2 != 1");
    const cplx off = chi.alpha * std::conj(chi.beta) * c;
    return Matrix2{{{cplx(na), off}, {std::conj(off), cplx(nb)}}};
}

OverlapCurve overlap_scan(const WaveFunction& psi, double ratio, int n_samples,
                          double dp_max) {
    if (n_samples < 1)
        throw std::invalid_argument("overlap_scan: n_samples must be >= 1");
    if (!(dp_max > 0))
        throw std::invalid_argument("overlap_scan: dp_max must be positive");
    const Moments mom = moments(psi);
    OverlapCurve curve;
    curve.ratio = ratio;
    curve.rows.reserve(n_samples + 1);
    for (int j = 0; j <= n_samples; ++j) {
        const double dp = j * dp_max / n_samples;
        const Displacement d{ratio * dp, dp};
        cplx c;
        try {
            c = overlap_c(psi, d);
        } catch (const guard_error&) {
            warn("overlap_scan: truncated at dp = " + std::to_string(dp) +
                 " (displaced state would wrap around the grid)");
            break;
        }
        curve.rows.push_back({d.dq, d.dp, delta_s(mom, d.dq, d.dp),
                              delta_z(d.dq, d.dp), std::norm(c), std::arg(c)});
    }
    return curve;
}

Threshold threshold_search(const WaveFunction& psi, double ratio, double target) {
    if (!(target > 0) || !(target < 1))
        throw std::invalid_argument("threshold_search: target must lie in (0, 1)");
    const Moments mom = moments(psi);
    const double h = psi.grid->hbar();
    // dS grows linearly along the ray; step fine enough that the first
    // crossing is bracketed during the initial monotone decay.
    const double form = std::sqrt(mom.var_q + mom.var_p * ratio * ratio +
                                  2.0 * mom.cov_qp * ratio);
    const double step = 0.02 * h / form; // ~dS steps of 0.02*hbar
    auto value = [&](double dp) {
        return std::norm(overlap_c(psi, Displacement{ratio * dp, dp}));
    };
    double lo = 0, hi = 0;
    bool bracketed = false;
    for (int j = 1; j <= 100000; ++j) {
        const double dp = j * step;
        double v;
        try {
            v = value(dp);
        } catch (const guard_error&) {
            throw guard_error("threshold_search: no |C|^2 = " + std::to_string(target) +
                              " crossing before the scan reached the grid-fit bound at dp = " +
                              std::to_string(dp));
        }
        if (v < target) {
            lo = (j - 1) * step;
            hi = dp;
            bracketed = true;
            break;
        }
    }
    if (!bracketed)
        throw guard_error("threshold_search: no crossing found within the scan range");
    while ((hi - lo) > 1e-6 * hi) {
        const double mid = 0.5 * (lo + hi);
        (value(mid) < target ? hi : lo) = mid;
    }
    const double dp0 = 0.5 * (lo + hi);
    const Displacement d0{ratio * dp0, dp0};
    return Threshold{delta_s(mom, d0.dq, d0.dp), delta_z(d0.dq, d0.dp), d0};
}

} // namespace qdecoh
