#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace bregcs {

// Measurement model y = phi.x = phi.psi.s = theta.s.
//   phi    M x N Gaussian measurement matrix, entries N(0, 1/M)
//   psi    N x N orthonormal synthesis transform (x = psi.s)
//   theta  phi * psi
struct SensingEnsemble {
  Eigen::MatrixXd phi;
  Eigen::MatrixXd psi;
  Eigen::MatrixXd theta;
  Eigen::Index n = 0;
  Eigen::Index m = 0;
  std::uint64_t seed = 0;
};

struct SparseSignalSpec {
  Eigen::Index n = 0;
  Eigen::Index sparsity = 0;  // exact number of nonzeros
  double amp_lo = -2.0;
  double amp_hi = 2.0;
  std::uint64_t seed = 0;
};

enum class TransformKind { Identity, Dct };

// Orthonormal DCT-II analysis matrix C: s = C x, C C^T = I. The synthesis
// matrix psi of the measurement model is C^T.
Eigen::MatrixXd dct_matrix(Eigen::Index n);

// Orthonormal DCT-II coefficients of x; preserves the l2 norm.
Eigen::VectorXd dct_forward(const Eigen::VectorXd& x);

// Inverse of dct_forward: x = psi s.
Eigen::VectorXd dct_inverse(const Eigen::VectorXd& s);

struct CuspSignal {
  Eigen::VectorXd x;       // time-domain samples, length n
  Eigen::VectorXd coeffs;  // exactly target_sparsity nonzero DCT coefficients
};

// The cusp test waveform sqrt(|t - 0.37|) sampled at t = (i+0.5)/n, made
// exactly sparse by keeping the target_sparsity largest-magnitude DCT
// coefficients; x is the inverse transform of the truncated coefficients.
CuspSignal make_cusp(Eigen::Index n, Eigen::Index target_sparsity);

// Exactly spec.sparsity nonzeros at seeded distinct positions with seeded
// uniform amplitudes in [amp_lo, amp_hi].
Eigen::VectorXd make_random_sparse(const SparseSignalSpec& spec);

SensingEnsemble make_gaussian_ensemble(Eigen::Index n, Eigen::Index m, std::uint64_t seed,
                                       TransformKind transform);

// y = theta s.
Eigen::VectorXd measure(const SensingEnsemble& ens, const Eigen::VectorXd& s);

}  // namespace bregcs
