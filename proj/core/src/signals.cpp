#include "bregcs/signals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "bregcs/errors.hpp"
#include "bregcs/rng.hpp"

namespace bregcs {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kCuspCenter = 0.37;
}  // namespace

Eigen::MatrixXd dct_matrix(Eigen::Index n) {
  if (n < 1) throw DimensionError("dct_matrix: n must be >= 1");
  Eigen::MatrixXd c(n, n);
  const double scale = std::sqrt(2.0 / static_cast<double>(n));
  const double dc = 1.0 / std::sqrt(2.0);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double alpha = (k == 0) ? dc : 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      c(k, i) = scale * alpha *
                std::cos(kPi * (2.0 * static_cast<double>(i) + 1.0) *
                         static_cast<double>(k) / (2.0 * static_cast<double>(n)));
    }
  }
  return c;
}

Eigen::VectorXd dct_forward(const Eigen::VectorXd& x) {
  return dct_matrix(x.size()) * x;
}

Eigen::VectorXd dct_inverse(const Eigen::VectorXd& s) {
  return dct_matrix(s.size()).transpose() * s;
}

CuspSignal make_cusp(Eigen::Index n, Eigen::Index target_sparsity) {
  if (n < 1) throw DimensionError("make_cusp: n must be >= 1");
  if (target_sparsity < 1 || target_sparsity > n)
    throw DimensionError("make_cusp: target_sparsity must be in [1, n]");

  Eigen::VectorXd raw(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    raw[i] = std::sqrt(std::abs(t - kCuspCenter));
  }

  const Eigen::MatrixXd c = dct_matrix(n);
  Eigen::VectorXd coeffs = c * raw;

  if (target_sparsity < n) {
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      return std::abs(coeffs[a]) > std::abs(coeffs[b]);
    });
    Eigen::VectorXd kept = Eigen::VectorXd::Zero(n);
    for (Eigen::Index r = 0; r < target_sparsity; ++r) kept[order[r]] = coeffs[order[r]];
    coeffs = kept;
  }

  CuspSignal sig;
  sig.x = c.transpose() * coeffs;
  sig.coeffs = std::move(coeffs);
  return sig;
}

Eigen::VectorXd make_random_sparse(const SparseSignalSpec& spec) {
  if (spec.n < 1) throw DimensionError("make_random_sparse: n must be >= 1");
  if (spec.sparsity < 1 || spec.sparsity > spec.n)
    throw DimensionError("make_random_sparse: sparsity must be in [1, n]");
  if (!(spec.amp_lo < spec.amp_hi))
    throw ConfigError("make_random_sparse: amplitude range must have amp_lo < amp_hi");

  SplitMix64 rng(spec.seed);

  // Partial Fisher-Yates over the index set picks the support.
  std::vector<Eigen::Index> pool(spec.n);
  std::iota(pool.begin(), pool.end(), Eigen::Index{0});
  Eigen::VectorXd s = Eigen::VectorXd::Zero(spec.n);
  for (Eigen::Index k = 0; k < spec.sparsity; ++k) {
    const std::uint64_t j =
        k + rng.uniform_below(static_cast<std::uint64_t>(spec.n - k));
    std::swap(pool[k], pool[j]);
    double amp = rng.uniform(spec.amp_lo, spec.amp_hi);
    while (amp == 0.0) amp = rng.uniform(spec.amp_lo, spec.amp_hi);
    s[pool[k]] = amp;
  }
  return s;
}

SensingEnsemble make_gaussian_ensemble(Eigen::Index n, Eigen::Index m, std::uint64_t seed,
                                       TransformKind transform) {
  if (n < 1 || m < 1) throw DimensionError("make_gaussian_ensemble: n, m must be >= 1");
  SensingEnsemble ens;
  ens.n = n;
  ens.m = m;
  ens.seed = seed;

  SplitMix64 rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  ens.phi.resize(m, n);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index col = 0; col < n; ++col) ens.phi(r, col) = scale * rng.gaussian();

  if (transform == TransformKind::Identity) {
    ens.psi = Eigen::MatrixXd::Identity(n, n);
    ens.theta = ens.phi;
  } else {
    ens.psi = dct_matrix(n).transpose();
    ens.theta = ens.phi * ens.psi;
  }
  return ens;
}

Eigen::VectorXd measure(const SensingEnsemble& ens, const Eigen::VectorXd& s) {
  if (s.size() != ens.n)
    throw DimensionError("measure: coefficient length " + std::to_string(s.size()) +
                         ", expected " + std::to_string(ens.n));
  return ens.theta * s;
}

}  // namespace bregcs
