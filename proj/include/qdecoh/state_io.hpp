#ifndef QDECOH_STATE_IO_HPP
#define QDECOH_STATE_IO_HPP

#include <string>

#include "qdecoh/wavefunction.hpp"

namespace qdecoh {

/// Binary checkpoint: magic "QPS1", then little-endian
/// u32 n_points, f64 q_min, f64 q_max, f64 hbar, f64 T,
/// followed by n_points (f64 re, f64 im) pairs. Bit-exact round trip.
void save_state(const std::string& path, const WaveFunction& psi, double T);

struct LoadedState {
    WaveFunction psi;
    double T;
};

/// Rejects bad magic, size mismatch, and norm deviation above 1e-8.
/// If expected_hbar > 0 and differs from the file value, warns and keeps
/// the file value.
LoadedState load_state(const std::string& path, double expected_hbar = 0);

} // namespace qdecoh

#endif
