// SPDX-License-Identifier: Apache-2.0
//
// twrelay - two-way relay channel estimation simulator

#pragma once

#include <armadillo>

namespace twrelay {

// Per-antenna stage-2 training powers for both source groups, with the
// Lagrange multipliers of the water-filling-like solve.
struct PowerAllocation {
    arma::vec varsigma1;  // length N1, >= 0
    arma::vec varsigma2;  // length N2, >= 0
    double mu1 = 0.0;
    double mu2 = 0.0;
    double budget1 = 0.0;
    double budget2 = 0.0;
};

// Stage-2 source training matrices built from orthogonal DFT directions:
// P_k = diag(sqrt(varsigma_k)) * conj(Xi_k) with Xi = [U_F, 0].
// P_1 P_2^H = 0 and P_k P_k^H = diag(varsigma_k) by construction.
struct Stage2Training {
    arma::cx_mat p1;  // N1 x L
    arma::cx_mat p2;  // N2 x L
    PowerAllocation allocation;
    arma::cx_mat u_f;  // unitary (N1+N2) x (N1+N2)

    arma::cx_mat stacked() const { return arma::join_cols(p1, p2); }
};

// Normalized DFT matrix, entry (p,q) = exp(-j 2 pi p q / n) / sqrt(n),
// zero-indexed. Unitary.
arma::cx_mat dft_unitary(int n);

// Fisher information of the stacked forward channel, q * P^* P^T.
arma::cx_mat fim(const arma::cx_mat& p, double q);

// Diagonal of the Gaussian prior information matrix,
// blkdiag(sigma_hr1^-2 I_N1, sigma_hr2^-2 I_N2), returned as a real vector.
arma::vec prior_information(double sigma2_hr1, double sigma2_hr2, int n1, int n2);

// BIM = FIM + prior information (positive definite).
arma::cx_mat bim(const arma::cx_mat& fim_mat, const arma::vec& prior_diag);

// Tr(BIM^-1), the bound minimized by the stage-2 training design.
double bcrlb_trace(const arma::cx_mat& bim_mat);

// Scalar form of the design objective for per-coordinate inverse prior
// variances a_k (a_{k,l} = sigma_{h_rk,l}^-2):
//   J = sum_i sum_k sum_l (a_{k,l} + q_i * varsigma_{k,l})^-1.
double scalar_objective(const PowerAllocation& allocation, double q1, double q2,
                        const arma::vec& inv_prior1, const arma::vec& inv_prior2);

// Two-loop bisection solve of the convex power allocation problem:
// inner loop inverts the stationarity condition
//   sum_i q_i / (a_{k,l} + q_i varsigma)^2 = mu_k
// per coordinate (clamped at 0, which realizes complementary slackness);
// outer loop bisects mu_k until the group budget is met. Groups are
// independent. Throws solver_error on non-convergence.
PowerAllocation solve_allocation(double q1, double q2, const arma::vec& inv_prior1,
                                 const arma::vec& inv_prior2, double budget1, double budget2,
                                 double tol = 1e-10);

// Uniform-prior convenience overload (sigma2_hrk per group).
PowerAllocation solve_allocation(double q1, double q2, double sigma2_hr1, double sigma2_hr2,
                                 int n1, int n2, double budget1, double budget2,
                                 double tol = 1e-10);

// Builds the DFT-structured training pair for a given allocation.
// Throws std::invalid_argument when l < N1 + N2.
Stage2Training build_training(const PowerAllocation& allocation, int l);

}  // namespace twrelay
