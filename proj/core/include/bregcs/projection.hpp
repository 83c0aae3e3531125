#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "bregcs/functionals.hpp"

namespace bregcs {

// One measurement constraint row . s = value, a hyperplane in R^N.
struct Hyperplane {
  Eigen::VectorXd row;
  double value = 0.0;
};

// Outcome of one D-projection. `point` lies on the hyperplane up to the
// solver tolerance, `multiplier` is the constraint multiplier that produced
// it, `residual` is |row . point - value|.
struct ProjectionResult {
  Eigen::VectorXd point;
  double multiplier = 0.0;
  int newton_iters = 0;
  double residual = 0.0;
};

struct MultiplierSolve {
  double multiplier = 0.0;
  int iters = 0;
};

// Optional instrumentation for the multiplier root solve: every time the
// bracket is updated, its endpoints are appended here.
struct BracketTrace {
  std::vector<std::pair<double, double>> brackets;
};

inline constexpr double kDefaultNewtonTol = 1e-12;
inline constexpr int kDefaultNewtonCap = 100;

// Orthogonal projection onto the hyperplane (Euclidean potential):
//   point = s0 + multiplier * row,  multiplier = (value - row.s0)/|row|^2.
// The reported multiplier follows this closed form; the Bregman multiplier
// for g(v) = v^2 is twice it (the gradient is 2v).
ProjectionResult project_euclidean(const Eigen::VectorXd& s0, const Hyperplane& h);

// Multiplicative (MART) projection for the positive entropy potential:
//   point(n) = s0(n) * exp(multiplier * row(n)), all s0(n) > 0 required.
// Throws InfeasibleError when the hyperplane misses the positive orthant.
ProjectionResult project_positive_entropy(const Eigen::VectorXd& s0, const Hyperplane& h,
                                          double tol = kDefaultNewtonTol,
                                          int max_iters = kDefaultNewtonCap);

// Signed-entropy projection. The update inverts the gradient directly:
//   point(n) = grad_inverse(grad(s0(n)) + multiplier * row(n)),
// which resolves the sign of each component without guessing, since the
// shifted-entropy gradient is an odd increasing bijection of the reals.
ProjectionResult project_shifted_entropy(const Eigen::VectorXd& s0, const Hyperplane& h,
                                         double tol = kDefaultNewtonTol,
                                         int max_iters = kDefaultNewtonCap);

// Kind dispatch over the three projections above.
ProjectionResult project(FunctionalKind kind, const Eigen::VectorXd& s0, const Hyperplane& h,
                         double tol = kDefaultNewtonTol, int max_iters = kDefaultNewtonCap);

// The scalar multiplier root solve on its own: finds the multiplier with
// |row . point(multiplier) - value| <= tol * (1 + |value|). The constraint
// gap is strictly increasing in the multiplier, so the root is unique.
// Accepts Euclidean too (one exact Newton step) for cross-checks.
MultiplierSolve solve_multiplier(const Eigen::VectorXd& s0, const Hyperplane& h,
                                 FunctionalKind kind, double tol = kDefaultNewtonTol,
                                 int max_iters = kDefaultNewtonCap,
                                 BracketTrace* trace = nullptr);

namespace detail {

// Dual-space projection engine shared by the single projections and the
// row-action solver. `u` is the gradient image of the current iterate and
// `s` its primal materialization; both are updated in place. Keeping the
// iterate in gradient coordinates lets successive projections accumulate
// multiplier * row without re-deriving gradients.
struct DualIterate {
  Eigen::ArrayXd u;
  Eigen::ArrayXd s;
};

DualIterate make_dual(FunctionalKind kind, const Eigen::VectorXd& s0);

MultiplierSolve project_dual(FunctionalKind kind, DualIterate& it, const Hyperplane& h,
                             double tol, int max_iters, BracketTrace* trace = nullptr);

}  // namespace detail

}  // namespace bregcs
