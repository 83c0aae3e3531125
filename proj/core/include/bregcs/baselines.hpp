#pragma once

#include <Eigen/Core>
#include <vector>

#include "bregcs/signals.hpp"

namespace bregcs {

// Reconstruction quality of one solve against the planted coefficients.
struct ReconReport {
  double rel_l2_error = 0.0;  // |s_hat - s_star| / |s_star| (absolute when s_star = 0)
  bool abs_error_fallback = false;  // set when s_star is all zero
  double support_precision = 0.0;
  double support_recall = 0.0;
  double residual_inf = 0.0;  // max_i |theta_i . s_hat - y_i|
  double wall_time = 0.0;     // seconds, filled by the harness
};

inline constexpr double kDefaultSupportEps = 1e-3;

// Indices with |v_i| > eps * max|v|; the empty set when v = 0.
std::vector<Eigen::Index> support_set(const Eigen::VectorXd& v, double eps);

// Minimum-l2-norm solution of theta s = y via a rank-revealing
// orthogonal decomposition. Throws RankDeficiencyError (with a condition
// estimate) when theta is numerically rank deficient.
Eigen::VectorXd pseudo_inverse_solve(const SensingEnsemble& ens, const Eigen::VectorXd& y);

// Exhaustive sparsest-solution search: enumerates every support of size
// <= k_max, least-squares fits each, and returns the sparsest fit with
// residual norm <= 1e-8 (ties: lowest residual, then lexicographic
// support). Capped at n <= 16, k_max <= 3.
Eigen::VectorXd l0_oracle(const SensingEnsemble& ens, const Eigen::VectorXd& y, int k_max);

ReconReport evaluate(const Eigen::VectorXd& s_hat, const Eigen::VectorXd& s_star,
                     const SensingEnsemble& ens, const Eigen::VectorXd& y,
                     double support_eps = kDefaultSupportEps);

}  // namespace bregcs
