#include "qdecoh/propagator.hpp"

#include <algorithm>
#include <cmath>

#include "qdecoh/fft.hpp"

namespace qdecoh {

double drive_potential(double q, double t, const DriveParams& p) {
    return -p.kappa * std::cos(q - p.l * std::sin(t)) + 0.5 * p.a_harm * q * q;
}

namespace {

// Owns the per-propagation workspace; the kinetic phase is time-independent
// and computed once per dt.
class Stepper {
public:
    Stepper(GridPtr grid, const DriveParams& p, double dt)
        : grid_(std::move(grid)), p_(p), dt_(dt) {
        const Grid& g = *grid_;
        const int n = g.size();
        kin_.resize(n);
        for (int i = 0; i < n; ++i) {
            const double pv = g.dp() * (i < n / 2 ? i : i - n); // natural order
            kin_[i] = std::polar(1.0 / n, -pv * pv * dt_ / (2.0 * p_.m * g.hbar()));
        }
    }

    void step(std::vector<cplx>& amp, double t) {
        const Grid& g = *grid_;
        const int n = g.size();
        const double mid = t + 0.5 * dt_;
        const double shift = p_.l * std::sin(mid);
        const double c = -0.5 * dt_ / g.hbar();
        phase_.resize(n);
        for (int k = 0; k < n; ++k) {
            const double q = g.q(k);
            const double v = -p_.kappa * std::cos(q - shift) + 0.5 * p_.a_harm * q * q;
            phase_[k] = std::polar(1.0, c * v);
            amp[k] *= phase_[k];
        }
        fft_forward(amp);
        for (int i = 0; i < n; ++i) amp[i] *= kin_[i];
        fft_backward(amp);
        for (int k = 0; k < n; ++k) amp[k] *= phase_[k];
    }

    // Edge guard, checked every step during long propagations.
    void check_edges(const std::vector<cplx>& amp, double t) {
        const int n = static_cast<int>(amp.size());
        double m = 0;
        for (int k = 0; k < 5; ++k) {
            m = std::max(m, std::abs(amp[k]));
            m = std::max(m, std::abs(amp[n - 1 - k]));
        }
        if (m > 1e-6)
            throw guard_error("propagation aborted at t = " + std::to_string(t) +
                              ": wave packet reached the grid edge (|psi|_edge = " +
                              std::to_string(m) + ")");
        if (m > 1e-12 && !warned_) {
            warned_ = true;
            warn("propagation at t = " + std::to_string(t) +
                 ": edge amplitude exceeds 1e-12");
        }
    }

private:
    GridPtr grid_;
    DriveParams p_;
    double dt_;
    std::vector<cplx> kin_;
    std::vector<cplx> phase_;
    bool warned_ = false;
};

// dt adjusted downward so the segment divides evenly.
std::pair<int, double> segment_steps(double span, double dt) {
    const int n = std::max(1, static_cast<int>(std::ceil(span / dt - 1e-12)));
    return {n, span / n};
}

} // namespace

WaveFunction split_step(const WaveFunction& psi, double t, double dt,
                        const DriveParams& p) {
    if (dt == 0) throw std::invalid_argument("split_step: dt must be nonzero");
    WaveFunction out = psi;
    Stepper s(psi.grid, p, dt);
    s.step(out.amp, t);
    return out;
}

WaveFunction prepare(const WaveFunction& psi0, double T, double dt,
                     const DriveParams& p) {
    if (T < 0) throw std::invalid_argument("prepare: T must be >= 0");
    if (!(dt > 0)) throw std::invalid_argument("prepare: dt must be positive");
    if (T == 0) return psi0;
    WaveFunction out = psi0;
    auto [n_steps, dt_adj] = segment_steps(T, dt);
    Stepper s(psi0.grid, p, dt_adj);
    for (int i = 0; i < n_steps; ++i) {
        s.step(out.amp, i * dt_adj);
        s.check_edges(out.amp, (i + 1) * dt_adj);
    }
    return out;
}

double energy_expectation(const WaveFunction& psi, double t, const DriveParams& p) {
    const Grid& g = *psi.grid;
    const int n = g.size();
    const std::vector<cplx> phi = to_momentum(psi);
    double kin = 0;
    for (int j = 0; j < n; ++j) kin += std::norm(phi[j]) * g.p(j) * g.p(j);
    kin *= g.dp() / (2.0 * p.m);
    double pot = 0;
    for (int k = 0; k < n; ++k)
        pot += std::norm(psi.amp[k]) * drive_potential(g.q(k), t, p);
    pot *= g.dq();
    return kin + pot;
}

PreparationRecord observables_vs_T(const WaveFunction& psi0,
                                   const std::vector<double>& T_list, double dt,
                                   const DriveParams& p,
                                   const std::vector<double>& checkpoint_at) {
    if (!(dt > 0)) throw std::invalid_argument("observables_vs_T: dt must be positive");
    if (!std::is_sorted(T_list.begin(), T_list.end()))
        throw std::invalid_argument("observables_vs_T: T_list must be ascending");

    // Single forward sweep over the union of record and checkpoint times.
    std::vector<double> events = T_list;
    events.insert(events.end(), checkpoint_at.begin(), checkpoint_at.end());
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    if (!events.empty() && events.front() < 0)
        throw std::invalid_argument("observables_vs_T: negative time requested");

    PreparationRecord rec;
    WaveFunction cur = psi0;
    double t = 0;
    auto listed = [](const std::vector<double>& v, double x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    for (double target : events) {
        if (target > t) {
            auto [n_steps, dt_adj] = segment_steps(target - t, dt);
            Stepper s(psi0.grid, p, dt_adj);
            for (int i = 0; i < n_steps; ++i) {
                s.step(cur.amp, t + i * dt_adj);
                s.check_edges(cur.amp, t + (i + 1) * dt_adj);
            }
            t = target;
        }
        if (listed(T_list, target)) {
            const Moments mom = moments(cur);
            rec.times.push_back(target);
            rec.sigma_q.push_back(std::sqrt(mom.var_q));
            rec.sigma_p.push_back(std::sqrt(mom.var_p));
            rec.patch_action.push_back(patch_action(mom, psi0.grid->hbar()));
        }
        if (listed(checkpoint_at, target))
            rec.checkpoints.push_back({target, cur});
    }
    return rec;
}

} // namespace qdecoh
