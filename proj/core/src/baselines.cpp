#include "bregcs/baselines.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bregcs/errors.hpp"

namespace bregcs {

namespace {
constexpr double kOracleResidualBound = 1e-8;
}

std::vector<Eigen::Index> support_set(const Eigen::VectorXd& v, double eps) {
  std::vector<Eigen::Index> idx;
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return idx;
  const double thr = eps * peak;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > thr) idx.push_back(i);
  return idx;
}

Eigen::VectorXd pseudo_inverse_solve(const SensingEnsemble& ens, const Eigen::VectorXd& y) {
  if (y.size() != ens.m)
    throw DimensionError("pseudo_inverse_solve: y length " + std::to_string(y.size()) +
                         ", expected " + std::to_string(ens.m));
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(ens.theta);
  if (cod.rank() < std::min(ens.m, ens.n)) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(ens.theta);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(svd.singularValues().size() - 1);
    const double cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
    throw RankDeficiencyError("pseudo_inverse_solve: theta is rank deficient (rank " +
                                  std::to_string(cod.rank()) + " of " +
                                  std::to_string(std::min(ens.m, ens.n)) +
                                  ", condition estimate " + std::to_string(cond) + ")",
                              cond);
  }
  // COD returns the minimum-norm solution for full-row-rank underdetermined
  // systems.
  return cod.solve(y);
}

Eigen::VectorXd l0_oracle(const SensingEnsemble& ens, const Eigen::VectorXd& y, int k_max) {
  if (ens.n > 16) throw DomainError("l0_oracle: capped at n <= 16");
  if (k_max < 0 || k_max > 3) throw DomainError("l0_oracle: capped at k_max <= 3");
  if (y.size() != ens.m)
    throw DimensionError("l0_oracle: y length mismatch");

  if (y.norm() <= kOracleResidualBound) return Eigen::VectorXd::Zero(ens.n);

  // Supports of size k in lexicographic order; the first k with a feasible
  // fit wins, then lowest residual, then the earlier (lexicographic) support.
  const Eigen::Index n = ens.n;
  for (int k = 1; k <= k_max; ++k) {
    bool found = false;
    double best_residual = 0.0;
    Eigen::VectorXd best;
    std::vector<Eigen::Index> support(k);
    for (int i = 0; i < k; ++i) support[i] = i;
    for (;;) {
      Eigen::MatrixXd cols(ens.m, k);
      for (int i = 0; i < k; ++i) cols.col(i) = ens.theta.col(support[i]);
      const Eigen::VectorXd fit = cols.colPivHouseholderQr().solve(y);
      const double residual = (cols * fit - y).norm();
      if (residual <= kOracleResidualBound &&
          (!found || residual < best_residual)) {
        found = true;
        best_residual = residual;
        best = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < k; ++i) best[support[i]] = fit[i];
      }
      // next combination
      int pos = k - 1;
      while (pos >= 0 && support[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++support[pos];
      for (int i = pos + 1; i < k; ++i) support[i] = support[i - 1] + 1;
    }
    if (found) return best;
  }
  throw InfeasibleError("l0_oracle: no support of size <= " + std::to_string(k_max) +
                        " fits y within residual " + std::to_string(kOracleResidualBound));
}

ReconReport evaluate(const Eigen::VectorXd& s_hat, const Eigen::VectorXd& s_star,
                     const SensingEnsemble& ens, const Eigen::VectorXd& y,
                     double support_eps) {
  if (s_hat.size() != s_star.size())
    throw DimensionError("evaluate: estimate/truth length mismatch");
  if (s_hat.size() != ens.n || y.size() != ens.m)
    throw DimensionError("evaluate: ensemble dimension mismatch");

  ReconReport rep;
  const double star_norm = s_star.norm();
  if (star_norm > 0.0) {
    rep.rel_l2_error = (s_hat - s_star).norm() / star_norm;
  } else {
    rep.rel_l2_error = s_hat.norm();
    rep.abs_error_fallback = true;
  }

  const auto pred = support_set(s_hat, support_eps);
  const auto truth = support_set(s_star, support_eps);
  std::vector<Eigen::Index> hits;
  std::set_intersection(pred.begin(), pred.end(), truth.begin(), truth.end(),
                        std::back_inserter(hits));
  rep.support_precision =
      pred.empty() ? (truth.empty() ? 1.0 : 0.0)
                   : static_cast<double>(hits.size()) / static_cast<double>(pred.size());
  rep.support_recall =
      truth.empty() ? 1.0
                    : static_cast<double>(hits.size()) / static_cast<double>(truth.size());

  rep.residual_inf = (ens.theta * s_hat - y).cwiseAbs().maxCoeff();
  return rep;
}

}  // namespace bregcs
