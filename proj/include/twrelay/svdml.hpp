// SPDX-License-Identifier: Apache-2.0
//
// twrelay - two-way relay channel estimation simulator

#pragma once

#include <armadillo>

namespace twrelay {

// Rank-one composite channel estimate H_c_hat = v1^* v1^T Y P^H (P P^H)^-1.
// v1 and sigma1 come from the dominant singular pair of the weighted
// observation; they are empty/zero for the unstructured baseline.
struct CompositeEstimate {
    arma::cx_mat h_c_hat;  // N_i x (N1+N2)
    arma::cx_vec v1;       // unit vector, length N_i (rank-one estimator only)
    double sigma1 = 0.0;   // dominant singular value used
    bool sv_tie = false;   // dominant singular value was (numerically) tied
};

// Forward channel recovered from the composite estimate, split per source.
struct ForwardEstimate {
    arma::cx_rowvec h_c_hat;  // 1 x (N1+N2)
    int n1 = 0;

    arma::cx_rowvec h_r1_hat() const { return h_c_hat.cols(0, n1 - 1); }
    arma::cx_rowvec h_r2_hat() const { return h_c_hat.cols(n1, h_c_hat.n_cols - 1); }
};

// Covariance of the vectorized effective stage-2 noise,
//   sum_k P_k^T P_k^* kron (sigma2_hrk C_dh)
//     + I_L kron (sigma2_r h h^H + sigma2_i I - sigma2_r C_dh).
// Throws model_error when the result is not positive semidefinite.
arma::cx_mat effective_noise_cov(const arma::cx_mat& p1, const arma::cx_mat& p2,
                                 double sigma2_hr1, double sigma2_hr2, const arma::cx_mat& c_dh,
                                 const arma::cx_vec& h_hat, double sigma2_r, double sigma2_i);

// High-relay-power per-column noise covariance B = sigma2_r h h^H + sigma2_i I.
arma::cx_mat noise_cov_b(const arma::cx_vec& h_hat, double sigma2_r, double sigma2_i);

// eta = s ||h||^2 / (1 + s ||h||^2) with s = sigma2_r / sigma2_i; satisfies
// B^-1 = sigma_i^-2 (I - eta h h^H / ||h||^2) (Sherman-Morrison).
double noise_weight_eta(const arma::cx_vec& h_hat, double sigma2_r, double sigma2_i);

// q = h^H B^-1 h = ||h||^2 / (sigma2_i + sigma2_r ||h||^2).
double fisher_weight_q(const arma::cx_vec& h_hat, double sigma2_r, double sigma2_i);

// Orthogonal projector onto the column space of a tall full-column-rank S:
// Omega = S (S^H S)^-1 S^H. Hermitian and idempotent.
arma::cx_mat projector_omega(const arma::cx_mat& s);

// Z = Omega + sqrt(eta) (I - Omega); singular values are 1 and sqrt(eta),
// and Z^H Z = eta I + (1 - eta) Omega.
arma::cx_mat weighting_z(const arma::cx_mat& omega, double eta);

// Rank-one weighted-ML composite estimate. v1 is the dominant right singular
// vector of Z * Y^T (phase-fixed so its first significant entry is real
// positive; a singular-value tie is reported in sv_tie).
CompositeEstimate svd_ml_composite(const arma::cx_mat& y, const arma::cx_mat& p,
                                   const arma::cx_vec& h_hat, double eta);

// Weighted residual Tr[(Y - H_c P)(Y - H_c P)^H B^-1] >= 0; diagnostic and
// oracle objective for candidate composite channels.
double ml_objective(const arma::cx_mat& y, const arma::cx_mat& p, const arma::cx_vec& h_hat,
                    double sigma2_r, double sigma2_i, const arma::cx_mat& h_c_candidate);

// Unstructured per-entry least squares, H_c_hat = Y P^H (P P^H)^-1.
CompositeEstimate entry_ls_baseline(const arma::cx_mat& y, const arma::cx_mat& p);

// h_c_hat = h_hat^H H_c_hat / ||h_hat||^2, split into per-source blocks.
// Throws model_error when ||h_hat|| is numerically zero.
ForwardEstimate forward_from_composite(const arma::cx_mat& h_c_hat, const arma::cx_vec& h_hat,
                                       int n1);

}  // namespace twrelay
