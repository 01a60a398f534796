#include "qdecoh/grid.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include "qdecoh/fft.hpp"
#include "qdecoh/wavefunction.hpp"

namespace qdecoh {

void warn(const std::string& msg) {
    std::cerr << "[qdecoh] warning: " << msg << "\n";
}

Grid::Grid(int n_points, double q_min, double q_max, double hbar)
    : n_(n_points), q_min_(q_min), q_max_(q_max), hbar_(hbar) {
    if (n_points < 2 || (n_points & (n_points - 1)) != 0)
        throw std::invalid_argument("n_points must be a power of two >= 2, got " +
                                    std::to_string(n_points));
    if (!(q_max > q_min))
        throw std::invalid_argument("q_max must exceed q_min");
    if (!(hbar > 0))
        throw std::invalid_argument("hbar must be positive");
    dq_ = (q_max_ - q_min_) / n_;
    dp_ = 2.0 * std::numbers::pi * hbar_ / (n_ * dq_);
    qv_.resize(n_);
    pv_.resize(n_);
    for (int k = 0; k < n_; ++k) {
        qv_[k] = q(k);
        pv_[k] = p(k);
    }
}

GridPtr make_grid(int n_points, double q_min, double q_max, double hbar) {
    return std::make_shared<const Grid>(n_points, q_min, q_max, hbar);
}

double norm_sq(const WaveFunction& psi) {
    double s = 0;
    for (const cplx& a : psi.amp) s += std::norm(a);
    return s * psi.grid->dq();
}

WaveFunction normalized(WaveFunction psi) {
    double n2 = norm_sq(psi);
    if (!(n2 > 0)) throw guard_error("cannot normalize a zero state");
    double inv = 1.0 / std::sqrt(n2);
    for (cplx& a : psi.amp) a *= inv;
    return psi;
}

double edge_amplitude(const WaveFunction& psi) {
    const int n = psi.size();
    const int band = std::min(5, n / 2);
    double m = 0;
    for (int k = 0; k < band; ++k) {
        m = std::max(m, std::abs(psi.amp[k]));
        m = std::max(m, std::abs(psi.amp[n - 1 - k]));
    }
    return m;
}

void require_fits(const WaveFunction& psi, const char* what) {
    const double edge = edge_amplitude(psi);
    if (edge > 1e-6)
        throw guard_error(std::string(what) +
                          ": amplitude reaches the grid edge (|psi|_edge = " +
                          std::to_string(edge) + "), wrap-around would corrupt results");
    if (edge > 1e-12)
        warn(std::string(what) + ": edge amplitude " + std::to_string(edge) +
             " exceeds 1e-12; consider a wider q-domain");
}

// psit(p_j) = dq/sqrt(2 pi hbar) * exp(-i q_min p_j / hbar) * DFT_j[psi],
// j = -n/2 .. n/2-1 mapped to monotonic storage index j + n/2.
std::vector<cplx> to_momentum(const WaveFunction& psi) {
    const Grid& g = *psi.grid;
    const int n = g.size();
    std::vector<cplx> work = psi.amp;
    fft_forward(work);
    const double scale = g.dq() / std::sqrt(2.0 * std::numbers::pi * g.hbar());
    std::vector<cplx> out(n);
    for (int i = 0; i < n; ++i) {
        const int j = i - n / 2; // signed frequency
        const double pj = j * g.dp();
        const cplx phase = std::polar(scale, -g.q_min() * pj / g.hbar());
        out[i] = phase * work[(j + n) & (n - 1)];
    }
    return out;
}

WaveFunction to_position(GridPtr grid, const std::vector<cplx>& phi) {
    const Grid& g = *grid;
    const int n = g.size();
    if (static_cast<int>(phi.size()) != n)
        throw std::invalid_argument("momentum amplitude length does not match grid");
    std::vector<cplx> work(n);
    for (int i = 0; i < n; ++i) {
        const int j = i - n / 2;
        const double pj = j * g.dp();
        work[(j + n) & (n - 1)] = std::polar(1.0, g.q_min() * pj / g.hbar()) * phi[i];
    }
    fft_backward(work);
    const double scale = g.dp() / std::sqrt(2.0 * std::numbers::pi * g.hbar());
    for (cplx& a : work) a *= scale;
    return WaveFunction{std::move(grid), std::move(work)};
}

} // namespace qdecoh
