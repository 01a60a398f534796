#include "qdecoh/phase_space.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "qdecoh/fft.hpp"

namespace qdecoh {

namespace {

// Band-limited interpolation onto the doubled lattice (spacing dq/2) by
// zero-padding the spectrum. Values at the original points are preserved
// exactly.
std::vector<cplx> upsample2(const WaveFunction& psi) {
    const int n = psi.size();
    std::vector<cplx> spec = psi.amp;
    fft_forward(spec);
    std::vector<cplx> fine(2 * n, cplx(0));
    for (int i = 0; i < n; ++i) {
        const int j = i - n / 2;              // signed frequency
        fine[(j + 2 * n) % (2 * n)] = spec[(j + n) & (n - 1)];
    }
    fft_backward(fine);
    const double scale = 1.0 / n; // synthesis normalization of the n-point DFT
    for (cplx& a : fine) a *= scale;
    return fine;
}

} // namespace

PhaseSpaceDistribution wigner(const WaveFunction& psi) {
    const Grid& g = *psi.grid;
    const int n = g.size();
    const std::vector<cplx> fine = upsample2(psi);
    const double pref = g.dq() / (2.0 * std::numbers::pi * g.hbar());

    PhaseSpaceDistribution out;
    out.grid = psi.grid;
    out.kernel = Kernel::Wigner;
    out.values.assign(static_cast<size_t>(n) * n, 0.0);

    std::vector<cplx> corr(n);
    const int mask = 2 * n - 1;
    for (int k = 0; k < n; ++k) {
        // corr(m) = psi(q_k - m dq/2... ) pairs on the fine lattice:
        // q' = m*dq, psi(q_k - q'/2) at fine index 2k - m (periodic).
        for (int i = 0; i < n; ++i) {
            const int m = (i < n / 2) ? i : i - n; // natural DFT order
            const cplx a = fine[(2 * k - m + 4 * n) & mask];
            const cplx b = fine[(2 * k + m + 4 * n) & mask];
            corr[i] = a * std::conj(b);
        }
        // W(q_k, p_j) = pref * sum_m corr(m) e^{+2 pi i m j / n}
        fft_backward(corr);
        double* row = &out.values[static_cast<size_t>(k) * n];
        for (int jj = 0; jj < n; ++jj) {
            const int j = jj - n / 2;
            row[jj] = pref * corr[(j + n) & (n - 1)].real();
        }
    }
    return out;
}

PhaseSpaceDistribution husimi(const WaveFunction& psi, double lambda) {
    if (!(lambda > 0)) throw std::invalid_argument("husimi: lambda must be positive");
    PhaseSpaceDistribution f = wigner(psi);
    const Grid& g = *f.grid;
    const int n = g.size();
    const double h = g.hbar();
    const double var_q = h / (2.0 * lambda * lambda);
    const double var_p = h * lambda * lambda / 2.0;
    const double len_q = n * g.dq();
    const double len_p = n * g.dp();

    // 2-D spectral convolution with the Gaussian kernel; the transfer
    // function is real, so the result stays real.
    std::vector<cplx> work(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < work.size(); ++i) work[i] = f.values[i];

    std::vector<cplx> line(n);
    for (int k = 0; k < n; ++k) { // transform p rows
        for (int j = 0; j < n; ++j) line[j] = work[static_cast<size_t>(k) * n + j];
        fft_forward(line);
        for (int j = 0; j < n; ++j) work[static_cast<size_t>(k) * n + j] = line[j];
    }
    for (int j = 0; j < n; ++j) { // transform q columns
        for (int k = 0; k < n; ++k) line[k] = work[static_cast<size_t>(k) * n + j];
        fft_forward(line);
        for (int k = 0; k < n; ++k) work[static_cast<size_t>(k) * n + j] = line[k];
    }
    const double two_pi = 2.0 * std::numbers::pi;
    for (int k = 0; k < n; ++k) {
        const int fk = (k <= n / 2) ? k : k - n;
        const double wq = two_pi * fk / len_q;
        const double gq = std::exp(-0.5 * var_q * wq * wq);
        for (int j = 0; j < n; ++j) {
            const int fj = (j <= n / 2) ? j : j - n;
            const double wp = two_pi * fj / len_p;
            work[static_cast<size_t>(k) * n + j] *= gq * std::exp(-0.5 * var_p * wp * wp);
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) line[j] = work[static_cast<size_t>(k) * n + j];
        fft_backward(line);
        for (int j = 0; j < n; ++j) work[static_cast<size_t>(k) * n + j] = line[j];
    }
    const double inv_n2 = 1.0 / (static_cast<double>(n) * n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) line[k] = work[static_cast<size_t>(k) * n + j];
        fft_backward(line);
        for (int k = 0; k < n; ++k)
            f.values[static_cast<size_t>(k) * n + j] = line[k].real() * inv_n2;
    }
    f.kernel = Kernel::Husimi;
    f.lambda = lambda;
    return f;
}

double moyal_overlap(const PhaseSpaceDistribution& f, const Displacement& d) {
    if (f.kernel != Kernel::Wigner)
        throw std::invalid_argument(
            "moyal_overlap requires a |chi| = 1 kernel (Wigner); the Husimi kernel "
            "does not satisfy the autocorrelation identity");
    const Grid& g = *f.grid;
    const int n = g.size();
    // Fractional lattice offset of the shifted factor, periodic.
    const double sq = d.dq / g.dq();
    const double sp = d.dp / g.dp();
    const int kq = static_cast<int>(std::floor(sq));
    const int kp = static_cast<int>(std::floor(sp));
    const double fq = sq - kq, fp = sp - kp;
    const double w00 = (1 - fq) * (1 - fp), w01 = (1 - fq) * fp;
    const double w10 = fq * (1 - fp), w11 = fq * fp;

    double acc = 0;
    for (int k = 0; k < n; ++k) {
        const int k0 = (k + kq % n + n) % n;
        const int k1 = (k0 + 1) % n;
        const double* r0 = &f.values[static_cast<size_t>(k0) * n];
        const double* r1 = &f.values[static_cast<size_t>(k1) * n];
        const double* base = &f.values[static_cast<size_t>(k) * n];
        for (int j = 0; j < n; ++j) {
            const int j0 = (j + kp % n + n) % n;
            const int j1 = (j0 + 1) % n;
            const double shifted =
                w00 * r0[j0] + w01 * r0[j1] + w10 * r1[j0] + w11 * r1[j1];
            acc += base[j] * shifted;
        }
    }
    return 2.0 * std::numbers::pi * g.hbar() * acc * g.dq() * g.dp();
}

double kernel_chi(const PhaseSpaceDistribution& f, const Displacement& d) {
    if (f.kernel == Kernel::Wigner) return 1.0;
    const double h = f.grid->hbar();
    const double l2 = f.lambda * f.lambda;
    return std::exp(-(l2 * d.dq * d.dq + d.dp * d.dp / l2) / (4.0 * h));
}

cplx overlap_from_distribution(const PhaseSpaceDistribution& f, const Displacement& d) {
    const double chi = kernel_chi(f, d);
    if (chi < 1e-8)
        throw std::invalid_argument(
            "overlap_from_distribution: kernel value chi < 1e-8 at this displacement, "
            "the division is not admissible");
    const Grid& g = *f.grid;
    const int n = g.size();
    const double h = g.hbar();
    // Separable phase factors keep this at one pass over the array.
    std::vector<cplx> eq(n), ep(n);
    for (int k = 0; k < n; ++k) eq[k] = std::polar(1.0, g.q(k) * d.dp / h);
    for (int j = 0; j < n; ++j) ep[j] = std::polar(1.0, g.p(j) * d.dq / h);
    cplx acc = 0;
    for (int k = 0; k < n; ++k) {
        const double* row = &f.values[static_cast<size_t>(k) * n];
        cplx rowacc = 0;
        for (int j = 0; j < n; ++j) rowacc += row[j] * ep[j];
        acc += eq[k] * rowacc;
    }
    return acc * (g.dq() * g.dp() / chi);
}

void write_distribution_csv(std::ostream& os, const PhaseSpaceDistribution& f) {
    const Grid& g = *f.grid;
    const int n = g.size();
    char buf[32];
    auto num = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return std::string(buf);
    };
    os << "q\\p";
    for (int j = 0; j < n; ++j) os << ',' << num(g.p(j));
    os << '\n';
    for (int k = 0; k < n; ++k) {
        os << num(g.q(k));
        const double* row = &f.values[static_cast<size_t>(k) * n];
        for (int j = 0; j < n; ++j) os << ',' << num(row[j]);
        os << '\n';
    }
}

} // namespace qdecoh
