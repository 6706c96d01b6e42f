// SPDX-License-Identifier: Apache-2.0
//
// twrelay - two-way relay channel estimation simulator

#pragma once

#include <armadillo>

#include "twrelay/config.hpp"
#include "twrelay/rng.hpp"

namespace twrelay {

// One draw of the backward (relay -> source) and forward (source -> relay)
// channels. Entries are i.i.d. CN(0, per-entry variance from SystemConfig).
struct ChannelRealization {
    arma::cx_vec h_1r;     // N1 x 1, relay -> S_1
    arma::cx_vec h_2r;     // N2 x 1, relay -> S_2
    arma::cx_rowvec h_r1;  // 1 x N1, S_1 -> relay
    arma::cx_rowvec h_r2;  // 1 x N2, S_2 -> relay

    // Stacked forward channel [h_r1, h_r2], 1 x (N1+N2).
    arma::cx_rowvec stacked_forward() const { return arma::join_rows(h_r1, h_r2); }
};

// Stage-1 observation at one source: Ytilde = h_ir * p_R + Vtilde.
// The noise draw is retained for oracle tests.
struct Stage1Observation {
    arma::cx_mat ytilde;  // N_i x Lr
    arma::cx_mat vtilde;  // N_i x Lr
};

// Stage-2 observations: relay receive y_r and the echoed signals Y_i at both
// sources, together with the exact noise draws used. The same v_r enters
// y_r and every Y_i.
struct Stage2Observation {
    arma::cx_rowvec y_r;  // 1 x L
    arma::cx_mat y1;      // N1 x L
    arma::cx_mat y2;      // N2 x L
    arma::cx_rowvec v_r;  // 1 x L
    arma::cx_mat v1;      // N1 x L
    arma::cx_mat v2;      // N2 x L
};

ChannelRealization draw_channels(const SystemConfig& config, Substream& rng);

Stage1Observation stage1_receive(const arma::cx_vec& h_ir, const arma::cx_rowvec& p_r,
                                 double sigma2_i, Substream& rng);

Stage2Observation stage2_receive(const ChannelRealization& channels, const arma::cx_mat& p1,
                                 const arma::cx_mat& p2, const SystemConfig& config,
                                 Substream& rng);

}  // namespace twrelay
