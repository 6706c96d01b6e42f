// SPDX-License-Identifier: Apache-2.0
//
// twrelay - two-way relay channel estimation simulator

#pragma once

#include <array>
#include <cstdint>

namespace twrelay {

// Experiment-wide system parameters. Single source of truth for antenna
// counts, training lengths, variances, power budgets and the RNG seed.
//
// Index convention: arrays of size 2 hold per-source values for S_1, S_2.
struct SystemConfig {
    int n1 = 4;  // antennas at source S_1
    int n2 = 4;  // antennas at source S_2
    int nr = 1;  // relay antennas (single-antenna relay)
    int lr = 6;  // stage-1 training length
    int l = 8;   // stage-2 training length, >= n1 + n2

    std::array<double, 2> sigma2_h_ir = {1.0, 1.0};  // backward channel variance per entry
    std::array<double, 2> sigma2_h_ri = {1.0, 1.0};  // forward channel variance per entry
    std::array<double, 2> sigma2_i = {1.0, 1.0};     // noise variance at S_i (both stages)
    double sigma2_r = 1.0;                           // noise variance at the relay

    double pr = 100.0;  // relay training power budget (linear)
    double p1 = 100.0;  // S_1 training power budget (linear)
    double p2 = 100.0;  // S_2 training power budget (linear)

    std::uint64_t seed = 1;

    int n_antennas(int source) const { return source == 0 ? n1 : n2; }

    // Throws std::invalid_argument when an invariant is violated.
    void validate() const;
};

}  // namespace twrelay
