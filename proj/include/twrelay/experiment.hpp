// SPDX-License-Identifier: Apache-2.0
//
// twrelay - two-way relay channel estimation simulator

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twrelay/config.hpp"

namespace twrelay {

// Which training is varied by the experiment. For figure 1 the scheme picks
// the stage-1 relay pilot (full power vs 0.8x budget); for figures 2 and 3 it
// picks the stage-2 source training (bound-optimal allocation vs a random
// feasible one on the same DFT directions).
enum class TrainingScheme { optimal, nonoptimal };

// One CSV row: the Monte Carlo mean and standard error of the normalized
// squared estimation error for a (snr, scheme, estimator, target) cell.
struct MseRecord {
    double snr_db = 0.0;
    std::string scheme;
    std::string estimator;
    std::string target;  // backward | composite | forward
    double mse_mean = 0.0;
    double mse_stderr = 0.0;
    long trials = 0;
};

// Full experiment description; `config` powers are overridden by the SNR
// grid unless decouple_powers keeps the relay budget fixed.
struct ExperimentSpec {
    int figure = 1;  // 1: backward, 2: composite, 3: forward
    std::vector<double> snr_grid_db = {0, 5, 10, 15, 20, 25, 30};
    int trials = 1000;
    SystemConfig config;
    int threads = 1;
    std::string output_path = "mse.csv";
    bool decouple_powers = false;
    bool emit_gnuplot = false;

    // Relay power offset (dB) above the source power for figures 2/3, so the
    // stage-1 estimate operates in its high-power regime.
    double stage1_boost_db = 20.0;
    // Power fraction of the non-optimal stage-1 pilot (figure 1 comparison).
    double nonoptimal_stage1_fraction = 0.8;

    void validate() const;  // throws std::invalid_argument
};

// Normalized squared errors of one full pipeline pass (draw channels,
// stage-1 estimate, stage-2 training, stage-2 receive, composite and forward
// estimates at S_1). Each error is divided by the estimand's expected
// squared norm. Trials that throw are reported failed, never dropped.
struct TrialResult {
    double backward = 0.0;
    double composite_svd_ml = 0.0;
    double composite_entry_ls = 0.0;
    double forward_svd_ml = 0.0;
    double forward_entry_ls = 0.0;
    bool failed = false;
    std::string error;
};

// Runs one trial. All randomness comes from substreams keyed on
// (config.seed, trial_index, purpose), so a trial's draws are identical
// across SNR points, schemes, thread counts and call sites.
TrialResult run_trial(std::uint64_t trial_index, double snr_db, TrainingScheme scheme,
                      const ExperimentSpec& spec);

// Runs every (snr, scheme) cell of the figure over `spec.trials` trials and
// aggregates in trial-index order (bit-reproducible for any thread count).
// Aborts with solver_error if more than 1% of trials fail in any cell.
std::vector<MseRecord> run_experiment(const ExperimentSpec& spec);

// CSV with header snr_db,scheme,estimator,target,mse_mean,mse_stderr,trials,
// rows sorted by (target, scheme, estimator, snr_db), floats at 9 significant
// digits.
std::string csv_string(std::vector<MseRecord> records);
void write_csv(const std::vector<MseRecord>& records, const std::string& path);

// Companion gnuplot script plotting every (scheme, estimator) curve of the CSV.
void write_gnuplot(const std::vector<MseRecord>& records, const std::string& csv_path,
                   const std::string& gp_path);

// Parses "a:step:b" into an inclusive grid.
std::vector<double> parse_snr_grid(const std::string& text);

const char* scheme_label(TrainingScheme scheme, int figure);

}  // namespace twrelay
