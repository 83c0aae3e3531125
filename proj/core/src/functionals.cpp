#include "bregcs/functionals.hpp"

#include <cmath>

#include "bregcs/errors.hpp"

namespace bregcs {

using detail::kInvE;

const char* kind_name(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::Euclidean:
      return "euclidean";
    case FunctionalKind::PositiveEntropy:
      return "positive-entropy";
    case FunctionalKind::ShiftedEntropy:
      return "shifted-entropy";
  }
  return "?";
}

FunctionalKind kind_from_name(const std::string& name) {
  if (name == "euclidean") return FunctionalKind::Euclidean;
  if (name == "positive-entropy") return FunctionalKind::PositiveEntropy;
  if (name == "shifted-entropy") return FunctionalKind::ShiftedEntropy;
  throw ConfigError("unknown functional kind '" + name +
                    "' (expected euclidean|positive-entropy|shifted-entropy)");
}

double potential(FunctionalKind kind, double v) {
  switch (kind) {
    case FunctionalKind::Euclidean:
      return v * v;
    case FunctionalKind::PositiveEntropy:
      if (v < 0.0) throw DomainError("positive-entropy potential needs v >= 0");
      return v == 0.0 ? 0.0 : v * std::log(v);
    case FunctionalKind::ShiftedEntropy: {
      // (|v|+1/e) log(|v|+1/e) + 1/e; the additive 1/e normalizes g(0) to 0.
      const double w = std::abs(v) + kInvE;
      return w * std::log(w) + kInvE;
    }
  }
  throw DomainError("unreachable functional kind");
}

double gradient(FunctionalKind kind, double v) {
  switch (kind) {
    case FunctionalKind::Euclidean:
      return 2.0 * v;
    case FunctionalKind::PositiveEntropy:
      if (v <= 0.0) throw DomainError("positive-entropy gradient needs v > 0");
      return std::log(v) + 1.0;
    case FunctionalKind::ShiftedEntropy: {
      // sgn(v) (log(|v|+1/e) + 1): odd, strictly increasing, 0 at 0.
      if (v == 0.0) return 0.0;
      const double mag = std::log(std::abs(v) + kInvE) + 1.0;
      return v > 0.0 ? mag : -mag;
    }
  }
  throw DomainError("unreachable functional kind");
}

double gradient_inverse(FunctionalKind kind, double u) {
  switch (kind) {
    case FunctionalKind::Euclidean:
      return 0.5 * u;
    case FunctionalKind::PositiveEntropy:
      return std::exp(u - 1.0);
    case FunctionalKind::ShiftedEntropy: {
      if (u == 0.0) return 0.0;
      const double mag = std::exp(std::abs(u) - 1.0) - kInvE;
      return u > 0.0 ? mag : -mag;
    }
  }
  throw DomainError("unreachable functional kind");
}

double bregman_distance(FunctionalKind kind, const Eigen::VectorXd& a,
                        const Eigen::VectorXd& b) {
  if (a.size() != b.size())
    throw DimensionError("bregman_distance: length mismatch (" +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
  switch (kind) {
    case FunctionalKind::Euclidean:
      return (a - b).squaredNorm();
    case FunctionalKind::PositiveEntropy: {
      // sum a log(a/b) - a + b, the Kullback-Leibler form of the distance.
      double d = 0.0;
      for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double ai = a[i], bi = b[i];
        if (ai < 0.0 || bi <= 0.0)
          throw DomainError("positive-entropy distance needs a >= 0, b > 0");
        d += (ai == 0.0 ? 0.0 : ai * std::log(ai / bi)) - ai + bi;
      }
      return d;
    }
    case FunctionalKind::ShiftedEntropy: {
      double d = 0.0;
      for (Eigen::Index i = 0; i < a.size(); ++i) {
        d += potential(kind, a[i]) - potential(kind, b[i]) -
             gradient(kind, b[i]) * (a[i] - b[i]);
      }
      return d;
    }
  }
  throw DomainError("unreachable functional kind");
}

}  // namespace bregcs
