#pragma once

#include <Eigen/Core>
#include <string>

namespace bregcs {

// Which Bregman potential drives distances and projections.
//
//   Euclidean       g(v) = v^2
//   PositiveEntropy g(v) = v log v              (v > 0; 0 at v = 0)
//   ShiftedEntropy  g(v) = (|v|+1/e) log(|v|+1/e) + 1/e
//
// The shifted entropy is the convex, differentiable, sign-symmetric
// surrogate for |v|: g(0) = 0, g'(0) = 0, g' odd and strictly increasing.
enum class FunctionalKind { Euclidean, PositiveEntropy, ShiftedEntropy };

const char* kind_name(FunctionalKind kind);
FunctionalKind kind_from_name(const std::string& name);

// Scalar potential g(v).
double potential(FunctionalKind kind, double v);

// dg/dv. For PositiveEntropy the gradient is log(v)+1 and is only defined
// for v > 0.
double gradient(FunctionalKind kind, double v);

// The unique v with gradient(kind, v) = u. Total on the reals for every
// kind: Euclidean u/2, PositiveEntropy e^(u-1), ShiftedEntropy
// sgn(u)*(e^(|u|-1) - 1/e).
double gradient_inverse(FunctionalKind kind, double u);

// Generalized (Bregman) distance
//   D(a, b) = sum_n g(a_n) - g(b_n) - g'(b_n) (a_n - b_n),
// nonnegative, zero iff a = b. For the Euclidean kind this is the squared
// l2 norm of a - b. Note the argument convention: the first argument is
// the free point, the second the anchor whose gradient appears.
double bregman_distance(FunctionalKind kind, const Eigen::VectorXd& a,
                        const Eigen::VectorXd& b);

namespace detail {
inline constexpr double kInvE = 0.36787944117144232160;  // 1/e
}

}  // namespace bregcs
