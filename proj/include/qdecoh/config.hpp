#ifndef QDECOH_CONFIG_HPP
#define QDECOH_CONFIG_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qdecoh/common.hpp"

namespace qdecoh {

/// Full experiment parameter set. Defaults are the canonical values of the
/// driven-oscillator runs: m = 1, kappa = 0.36, a_harm = 0.01, l = 3.8,
/// hbar = 0.16, alpha = 5i, ratio = 6.8, target = 0.5,
/// T_list = {0, 10, 20, 500}.
struct ExperimentConfig {
    // drive
    double m = 1.0;
    double kappa = 0.36;
    double a_harm = 0.01;
    double l = 3.8;
    double hbar = 0.16;
    // grid
    int n_points = 2048;
    double q_min = -60.0;
    double q_max = 60.0;
    // propagation
    double dt = 0.005;
    std::vector<double> T_list = {0.0, 10.0, 20.0, 500.0};
    std::vector<double> checkpoint_T; // empty = T_list
    // overlap scan
    double ratio = 6.8;
    int n_samples = 200;
    double dp_max = 0.0; // 0 = auto-scale so the scan reaches dS = 5*hbar
    double target = 0.5;
    // Berry-Voros
    int f = 1;
    double M = 1.0;
    double omega = 0.1;
    cplx alpha = cplx(0.0, 5.0);
    int n_max = 0; // 0 = auto from the Poisson tail bound
    // bookkeeping
    std::string out_dir = "out";
    std::uint64_t seed = 12345;

    std::vector<double> checkpoints() const {
        return checkpoint_T.empty() ? T_list : checkpoint_T;
    }
};

/// Line-oriented `key = value` file, '#' comments. Unknown keys, malformed
/// values and violated invariants raise config_error with the line number.
/// Missing keys keep their defaults; an empty file is the canonical run.
ExperimentConfig parse_config(const std::string& path);

/// Same parser on an already-loaded text (used for the echo round trip).
ExperimentConfig parse_config_text(const std::string& text);

/// Echo of the fully-resolved configuration; parseable by parse_config.
void write_config(std::ostream& os, const ExperimentConfig& cfg);

/// Complex literal of the form "a", "bi", "a+bi", "a-bi" (also "i", "-i").
cplx parse_complex(const std::string& text);
std::string format_complex(cplx z);

} // namespace qdecoh

#endif
