#ifndef QDECOH_PROPAGATOR_HPP
#define QDECOH_PROPAGATOR_HPP

#include <optional>

#include "qdecoh/state.hpp"

namespace qdecoh {

/// Parameters of the driven-oscillator environment,
///   H = p^2/(2m) - kappa cos(q - l sin t) + a_harm q^2/2.
/// (a_harm is the harmonic stiffness; the patch action keeps the name a.)
struct DriveParams {
    double m = 1.0;
    double kappa = 0.36;
    double a_harm = 0.01;
    double l = 3.8;
    double hbar = 0.16;
};

double drive_potential(double q, double t, const DriveParams& p);

/// One Strang step: half potential phase at the midpoint time t + dt/2,
/// full kinetic step in momentum space, half potential phase (same
/// midpoint). Norm-preserving.
WaveFunction split_step(const WaveFunction& psi, double t, double dt,
                        const DriveParams& p);

/// Evolves psi0 from t = 0 to T. dt is adjusted downward so that T/dt is
/// an integer. Aborts (guard_error) with the violating time if the packet
/// reaches the grid edge.
WaveFunction prepare(const WaveFunction& psi0, double T, double dt,
                     const DriveParams& p);

/// Width and patch-action series over one forward sweep.
struct PreparationRecord {
    std::vector<double> times;
    std::vector<double> sigma_q;
    std::vector<double> sigma_p;
    std::vector<double> patch_action;
    struct Checkpoint {
        double T;
        WaveFunction psi;
    };
    std::vector<Checkpoint> checkpoints;
};

/// Records sigma_q, sigma_p and the patch action at each listed T
/// (ascending) in a single propagation pass, saving states at the
/// requested checkpoint times.
PreparationRecord observables_vs_T(const WaveFunction& psi0,
                                   const std::vector<double>& T_list, double dt,
                                   const DriveParams& p,
                                   const std::vector<double>& checkpoint_at = {});

/// <H(t)> = <p^2>/(2m) + <V(q, t)>, kinetic part in momentum space.
double energy_expectation(const WaveFunction& psi, double t, const DriveParams& p);

} // namespace qdecoh

#endif
