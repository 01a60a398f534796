#include "qdecoh/berry_voros.hpp"

#include <cmath>
#include <future>
#include <random>

#include "qdecoh/bessel.hpp"

namespace qdecoh {

namespace {

void validate(const BVModel& m) {
    if (m.f < 1) throw std::invalid_argument("BVModel: f must be >= 1");
    if (!(m.M > 0) || !(m.omega > 0) || !(m.hbar > 0))
        throw std::invalid_argument("BVModel: M, omega, hbar must be positive");
    if (m.energies.size() != m.weights.size())
        throw std::invalid_argument("BVModel: energies/weights length mismatch");
    double sum = 0;
    for (double w : m.weights) {
        if (w < 0) throw std::invalid_argument("BVModel: negative weight");
        sum += w;
    }
    if (sum < 1.0 - 1e-10 || sum > 1.0 + 1e-10)
        throw std::invalid_argument("BVModel: truncation tail above 1e-10 (sum w = " +
                                    std::to_string(sum) + ")");
}

double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

} // namespace

std::vector<double> poisson_weights(cplx alpha, int n_max) {
    const double lam = std::norm(alpha);
    if (n_max < 0) throw std::invalid_argument("poisson_weights: n_max must be >= 0");
    std::vector<double> w(n_max + 1);
    w[0] = std::exp(-lam);
    for (int n = 1; n <= n_max; ++n) w[n] = w[n - 1] * lam / n;
    double sum = 0;
    for (double x : w) sum += x;
    if (sum < 1.0 - 1e-10)
        throw std::invalid_argument("poisson_weights: n_max = " + std::to_string(n_max) +
                                    " leaves tail mass above 1e-10");
    return w;
}

BVModel bv_model_isotropic_poisson(int f, double M, double omega, double hbar,
                                   cplx alpha, int n_max) {
    if (n_max <= 0) {
        const double lam = std::norm(alpha);
        n_max = static_cast<int>(std::ceil(lam + 12.0 * std::sqrt(std::max(lam, 1.0))));
    }
    BVModel m;
    m.f = f;
    m.M = M;
    m.omega = omega;
    m.hbar = hbar;
    m.omegas.assign(f, omega);
    m.masses.assign(f, M);
    m.weights = poisson_weights(alpha, n_max);
    m.energies.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        m.energies[n] = hbar * omega * (n + 0.5 * f);
    validate(m);
    return m;
}

double density_of_states(double E, const BVModel& model) {
    if (!(E > 0)) throw std::invalid_argument("density_of_states: E must be positive");
    const double hw = model.hbar * model.omega;
    return std::pow(E, model.f - 1) / (std::tgamma(model.f) * std::pow(hw, model.f));
}

BVSigma bv_sigma(double E, const BVModel& model) {
    if (!(E > 0)) throw std::invalid_argument("bv_sigma: E must be positive");
    return BVSigma{std::sqrt(E / (model.M * model.omega * model.omega)),
                   std::sqrt(model.M * E)};
}

double bv_action_n(const DisplacementF& d, double sigma_q, double sigma_p) {
    if (!(sigma_q > 0) || !(sigma_p > 0))
        throw std::invalid_argument("bv_action_n: widths must be positive");
    return std::hypot(norm2(d.dp) * sigma_q, norm2(d.dq) * sigma_p);
}

DisplacementF rescale_displacement(const DisplacementF& physical, const BVModel& model) {
    const size_t f = static_cast<size_t>(model.f);
    if (physical.dq.size() != f || physical.dp.size() != f ||
        model.masses.size() != f || model.omegas.size() != f)
        throw std::invalid_argument("rescale_displacement: length mismatch with f");
    DisplacementF out;
    out.dq.resize(f);
    out.dp.resize(f);
    for (size_t i = 0; i < f; ++i) {
        out.dq[i] = std::sqrt(model.masses[i] / model.M) * physical.dq[i];
        out.dp[i] = std::sqrt(model.M * model.omega * model.omega /
                              (model.masses[i] * model.omegas[i] * model.omegas[i])) *
                    physical.dp[i];
    }
    return out;
}

double bv_eigen_char(int f, double ds_n, double hbar) {
    if (f < 1) throw std::invalid_argument("bv_eigen_char: f must be >= 1");
    if (ds_n < 0) throw std::invalid_argument("bv_eigen_char: ds_n must be >= 0");
    const double z = std::sqrt(2.0) * ds_n / hbar;
    if (z < 1.0) {
        // Gamma(f) sum_k (-1)^k (z^2/4)^k / (k! Gamma(f+k)); equals 1 at z = 0.
        double term = 1.0, sum = 1.0;
        const double q = 0.25 * z * z;
        for (int k = 0; k < 40; ++k) {
            term *= -q / ((k + 1.0) * (f + k));
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return sum;
    }
    return std::pow(2.0, 0.5 * (f - 1)) * std::tgamma(f) * bessel_j(f - 1, z) /
           std::pow(z / std::sqrt(2.0), f - 1);
}

BVActionSet bv_action_set(const BVModel& model, const DisplacementF& d) {
    validate(model);
    BVActionSet set;
    const size_t n = model.energies.size();
    set.sigma_qn.resize(n);
    set.sigma_pn.resize(n);
    set.ds_n.resize(n);
    double acc = 0;
    for (size_t i = 0; i < n; ++i) {
        const BVSigma s = bv_sigma(model.energies[i], model);
        set.sigma_qn[i] = s.sigma_q;
        set.sigma_pn[i] = s.sigma_p;
        set.ds_n[i] = bv_action_n(d, s.sigma_q, s.sigma_p);
        acc += model.weights[i] * set.ds_n[i] * set.ds_n[i];
    }
    set.ds_bar = std::sqrt(acc);
    return set;
}

BVOverlap bv_overlap(const BVModel& model, const DisplacementF& d) {
    const BVActionSet set = bv_action_set(model, d);
    double c = 0;
    for (size_t i = 0; i < model.weights.size(); ++i)
        c += model.weights[i] * bv_eigen_char(model.f, set.ds_n[i], model.hbar);
    return BVOverlap{c, set.ds_bar};
}

McEstimate mc_microcanonical_oracle(const BVModel& model, double E,
                                    const DisplacementF& d, std::int64_t n_samples,
                                    std::uint64_t seed) {
    validate(model);
    if (!(E > 0)) throw std::invalid_argument("oracle: E must be positive");
    if (n_samples < 10000)
        throw std::invalid_argument("oracle: n_samples must be >= 1e4");
    const size_t f = static_cast<size_t>(model.f);
    if (d.dq.size() != f || d.dp.size() != f)
        throw std::invalid_argument("oracle: displacement length mismatch with f");

    const double rq = std::sqrt(2.0 * E / (model.M * model.omega * model.omega));
    const double rp = std::sqrt(2.0 * model.M * E);
    constexpr int kStreams = 8;

    struct Acc {
        double sr = 0, si = 0, sr2 = 0, si2 = 0;
        std::int64_t n = 0;
    };
    auto run_stream = [&](int stream, std::int64_t count) {
        std::seed_seq sseq{static_cast<std::uint32_t>(seed),
                           static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(stream)};
        std::mt19937_64 rng(sseq);
        std::normal_distribution<double> gauss;
        std::vector<double> u(2 * f);
        Acc a;
        const double inv_h = 1.0 / model.hbar;
        for (std::int64_t s = 0; s < count; ++s) {
            double r2 = 0;
            for (double& x : u) {
                x = gauss(rng);
                r2 += x * x;
            }
            const double inv_r = 1.0 / std::sqrt(r2);
            double phase = 0;
            for (size_t i = 0; i < f; ++i) {
                const double qi = rq * u[i] * inv_r;
                const double pi = rp * u[f + i] * inv_r;
                phase += pi * d.dq[i] + qi * d.dp[i];
            }
            phase *= inv_h;
            const double cr = std::cos(phase), ci = std::sin(phase);
            a.sr += cr;
            a.si += ci;
            a.sr2 += cr * cr;
            a.si2 += ci * ci;
            ++a.n;
        }
        return a;
    };

    std::vector<std::future<Acc>> futures;
    const std::int64_t chunk = n_samples / kStreams;
    for (int s = 0; s < kStreams; ++s) {
        const std::int64_t count = (s == kStreams - 1) ? n_samples - chunk * s : chunk;
        futures.push_back(std::async(std::launch::async, run_stream, s, count));
    }
    Acc total;
    for (auto& fu : futures) {
        const Acc a = fu.get();
        total.sr += a.sr;
        total.si += a.si;
        total.sr2 += a.sr2;
        total.si2 += a.si2;
        total.n += a.n;
    }
    const double n = static_cast<double>(total.n);
    const double mr = total.sr / n, mi = total.si / n;
    const double vr = std::max(total.sr2 / n - mr * mr, 0.0);
    const double vi = std::max(total.si2 / n - mi * mi, 0.0);
    return McEstimate{cplx(mr, mi), std::sqrt(vr / n), std::sqrt(vi / n), total.n};
}

} // namespace qdecoh
