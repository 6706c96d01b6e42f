// SPDX-License-Identifier: Apache-2.0
//
// twrelay - two-way relay channel estimation simulator

#pragma once

#include <armadillo>

namespace twrelay {

// Stage-1 relay training vector with its transmit power.
struct Stage1Training {
    arma::cx_rowvec p_r;  // 1 x Lr
    double power = 0.0;   // ||p_r||_F^2
};

// LMMSE estimate of a backward channel with its error covariance.
// With norm-only-dependent training the covariance is a scaled identity.
struct BackwardEstimate {
    arma::cx_vec h_hat;            // N_i x 1
    arma::cx_mat err_cov;          // N_i x N_i, Hermitian PD
    double per_entry_err_var = 0;  // err_cov = per_entry_err_var * I
};

// LMMSE gain G for the vectorized stage-1 model
//   vec(Ytilde) = (p_r^T kron I_{n_i}) h + vec(Vtilde),
// returned so that h_hat = G^H vec(Ytilde). Size (n_i*Lr) x n_i.
// Throws std::invalid_argument for a zero training vector (the estimator
// would degenerate to the prior mean).
arma::cx_mat lmmse_gain(const arma::cx_rowvec& p_r, double sigma2_h, double sigma2_i, int n_i);

// h_hat = G^H vec(Ytilde); vectorization is column-major.
arma::cx_vec estimate_backward(const arma::cx_mat& ytilde, const arma::cx_mat& gain);

// Error covariance of the LMMSE estimate:
//   (sigma_h^-2 + sigma_i^-2 ||p_r||_F^2)^-1 * I_{n_i}.
arma::cx_mat error_covariance(const arma::cx_rowvec& p_r, double sigma2_h, double sigma2_i,
                              int n_i);

double per_entry_error_variance(double p_r_norm2, double sigma2_h, double sigma2_i);

// MSE-optimal stage-1 training: all power on the first symbol,
// p_r = sqrt(pr) * [1, 0, ..., 0]. The power constraint is active because
// the estimator MSE is monotonically decreasing in ||p_r||^2.
Stage1Training optimal_stage1_training(double pr, int lr);

}  // namespace twrelay
