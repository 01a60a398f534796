#ifndef QDECOH_PIPELINES_HPP
#define QDECOH_PIPELINES_HPP

#include <string>

#include "qdecoh/berry_voros.hpp"
#include "qdecoh/config.hpp"
#include "qdecoh/overlap.hpp"
#include "qdecoh/propagator.hpp"

namespace qdecoh {

/// Coherent initial state |alpha> of the unperturbed oscillator on the
/// configured grid.
WaveFunction initial_state(const ExperimentConfig& cfg);

DriveParams drive_params(const ExperimentConfig& cfg);

/// BVModel of the configured f-dimensional isotropic oscillator with the
/// Poisson weights of |alpha>.
BVModel bv_model(const ExperimentConfig& cfg);

/// Ray parameter bound: dp_max from the config, or (when dp_max = 0) the
/// value at which dS along the ratio-ray reaches 5*hbar for this state.
double resolve_dp_max(const ExperimentConfig& cfg, const Moments& mom);

/// All pipelines create out_dir, write resolved_config.cfg, and emit CSVs
/// with full double precision. Propagation guard failures raise
/// guard_error with the violating time.

/// prepare.csv (T, sigma_q, sigma_p, patch_action) + state_T*.qps checkpoints.
void run_prepare(const ExperimentConfig& cfg, const std::string& out_dir);

/// fig1.csv (T, sigma_q, sigma_p, patch_action, dz0): widths and patch
/// action plus the |C|^2 = target threshold action dZ_0, sampled on the
/// union of T_list and a 25-point log-spaced T grid.
void run_fig1(const ExperimentConfig& cfg, const std::string& out_dir);

/// fig2_T*.csv overlap scans along the ratio-ray per prepared T, and
/// fig2_inset.csv (T, ds0, dz0). Reuses state_T*.qps checkpoints when
/// present, otherwise propagates and saves them.
void run_fig2(const ExperimentConfig& cfg, const std::string& out_dir);

/// fig3_bv.csv (ds_bar, c_bar, c_bar_sq) from the Berry-Voros closed form,
/// next to re-emitted numerical curves for the first and last T_list entry.
void run_fig3(const ExperimentConfig& cfg, const std::string& out_dir);

/// bv_scan.csv (ds_bar, c_bar, c_bar_sq).
void run_bv_scan(const ExperimentConfig& cfg, const std::string& out_dir);

/// overlap_scan.csv for a checkpoint state (or the T = 0 initial state when
/// state_path is empty).
void run_overlap_scan(const ExperimentConfig& cfg, const std::string& out_dir,
                      const std::string& state_path = "");

/// oracle.csv: Monte-Carlo microcanonical estimates against the closed
/// form for n_displacements random displacements at the dominant energy.
void run_oracle(const ExperimentConfig& cfg, const std::string& out_dir,
                std::int64_t n_samples = 1000000, int n_displacements = 20);

/// Writes self-contained plot_fig{1,2,3}.py scripts next to the CSVs.
/// Fails if the CSVs they read are missing. Idempotent.
void emit_plots(const std::string& out_dir);

} // namespace qdecoh

#endif
