#include "bregcs/projection.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bregcs/errors.hpp"

namespace bregcs {

using detail::kInvE;

namespace {

void check_hyperplane(const Eigen::VectorXd& s0, const Hyperplane& h) {
  if (s0.size() != h.row.size())
    throw DimensionError("projection: point length " + std::to_string(s0.size()) +
                         " vs row length " + std::to_string(h.row.size()));
  if (h.row.isZero(0.0))
    throw InvalidHyperplaneError("projection: zero row defines no hyperplane");
}

// Bracket growth stops here for the positive entropy kind: exponents past
// this overflow 64-bit floats, so a still-unbracketed root means the
// hyperplane misses the positive orthant.
constexpr double kPositiveEntropyMultiplierBound = 700.0;
constexpr double kGenericMultiplierBound = 1e30;

struct ConstraintEval {
  double value = 0.0;  // F(multiplier) = row . s(multiplier) - y
  double slope = 0.0;  // F'(multiplier), strictly positive
};

// Evaluates the constraint gap at a trial multiplier, materializing the
// primal point into `s`.
class GapFunction {
 public:
  GapFunction(FunctionalKind kind, const Eigen::ArrayXd& u, const Hyperplane& h)
      : kind_(kind), u_(u), row_(h.row.array()), target_(h.value) {
    const Eigen::Index n = u.size();
    w_.resize(n);
    a_.resize(n);
    s_.resize(n);
  }

  ConstraintEval operator()(double multiplier) {
    w_ = u_ + multiplier * row_;
    ConstraintEval ev;
    switch (kind_) {
      case FunctionalKind::Euclidean:
        s_ = 0.5 * w_;
        ev.slope = 0.5 * row_.square().sum();
        break;
      case FunctionalKind::PositiveEntropy:
        s_ = (w_ - 1.0).exp();
        ev.slope = (row_.square() * s_).sum();
        break;
      case FunctionalKind::ShiftedEntropy:
        a_ = (w_.abs() - 1.0).exp();
        s_ = w_.sign() * (a_ - kInvE);
        ev.slope = (row_.square() * a_).sum();
        break;
    }
    ev.value = (row_ * s_).sum() - target_;
    return ev;
  }

  const Eigen::ArrayXd& point() const { return s_; }

 private:
  FunctionalKind kind_;
  const Eigen::ArrayXd& u_;
  Eigen::ArrayXd row_;
  double target_;
  Eigen::ArrayXd w_, a_, s_;
};

}  // namespace

namespace detail {

DualIterate make_dual(FunctionalKind kind, const Eigen::VectorXd& s0) {
  DualIterate it;
  it.s = s0.array();
  switch (kind) {
    case FunctionalKind::Euclidean:
      it.u = 2.0 * it.s;
      break;
    case FunctionalKind::PositiveEntropy:
      if ((it.s <= 0.0).any())
        throw DomainError("positive-entropy projection needs a strictly positive start");
      it.u = it.s.log() + 1.0;
      break;
    case FunctionalKind::ShiftedEntropy:
      it.u = it.s.sign() * ((it.s.abs() + kInvE).log() + 1.0);
      break;
  }
  return it;
}

MultiplierSolve project_dual(FunctionalKind kind, DualIterate& it, const Hyperplane& h,
                             double tol, int max_iters, BracketTrace* trace) {
  GapFunction gap(kind, it.u, h);
  const double tol_abs = tol * (1.0 + std::abs(h.value));
  const double growth_bound = (kind == FunctionalKind::PositiveEntropy)
                                  ? kPositiveEntropyMultiplierBound
                                  : kGenericMultiplierBound;

  auto accept = [&](double multiplier, int iters) {
    it.u += multiplier * h.row.array();
    it.s = gap.point();
    return MultiplierSolve{multiplier, iters};
  };

  ConstraintEval ev = gap(0.0);
  if (std::abs(ev.value) <= tol_abs) return accept(0.0, 0);

  // Grow a sign-change bracket geometrically from 0; the gap is strictly
  // increasing in the multiplier, so the first sign change pins the root.
  double lo = 0.0, hi = 0.0;
  double lambda = 0.0;
  int iters = 0;
  {
    const bool grow_up = ev.value < 0.0;
    double inner = 0.0, f_inner = ev.value;
    double step = grow_up ? 1.0 : -1.0;
    for (;;) {
      if (iters >= max_iters)
        throw SolverFailureError("multiplier bracket search exceeded iteration cap",
                                 inner, std::abs(f_inner));
      const double cand = step;
      const ConstraintEval evc = gap(cand);
      ++iters;
      if (std::isnan(evc.value))
        throw SolverFailureError("multiplier gap evaluated to NaN", cand,
                                 std::numeric_limits<double>::quiet_NaN());
      if (std::abs(evc.value) <= tol_abs) return accept(cand, iters);
      if ((evc.value > 0.0) == grow_up) {
        lo = grow_up ? inner : cand;
        hi = grow_up ? cand : inner;
        // Continue Newton from whichever endpoint has the smaller finite gap.
        if (std::isfinite(evc.value) && std::abs(evc.value) < std::abs(f_inner)) {
          lambda = cand;
          ev = evc;
        } else {
          lambda = inner;
          ev = gap(inner);
        }
        break;
      }
      if (std::abs(cand) >= growth_bound) {
        if (kind == FunctionalKind::PositiveEntropy)
          throw InfeasibleError(
              "positive-entropy projection: no positive point on the hyperplane "
              "(multiplier bound exceeded)");
        throw SolverFailureError("multiplier bracket search diverged", cand,
                                 std::abs(evc.value));
      }
      inner = cand;
      f_inner = evc.value;
      step *= 2.0;
    }
  }
  if (trace) trace->brackets.emplace_back(lo, hi);

  // Safeguarded Newton: full steps while they stay inside the bracket,
  // bisection otherwise. Terminates because the bracket halves on fallback.
  while (iters < max_iters) {
    double cand = lambda - ev.value / ev.slope;
    if (!std::isfinite(cand) || cand <= lo || cand >= hi || cand == lambda) {
      if (trace) trace->brackets.emplace_back(lo, hi);
      cand = 0.5 * (lo + hi);
    }
    ev = gap(cand);
    ++iters;
    if (std::isnan(ev.value))
      throw SolverFailureError("multiplier gap evaluated to NaN", cand,
                               std::numeric_limits<double>::quiet_NaN());
    if (std::abs(ev.value) <= tol_abs) return accept(cand, iters);
    if (ev.value < 0.0)
      lo = cand;
    else
      hi = cand;
    lambda = cand;
  }
  throw SolverFailureError("multiplier solve exceeded iteration cap", lambda,
                           std::abs(ev.value));
}

}  // namespace detail

ProjectionResult project_euclidean(const Eigen::VectorXd& s0, const Hyperplane& h) {
  check_hyperplane(s0, h);
  const double norm2 = h.row.squaredNorm();
  const double lambda = (h.value - h.row.dot(s0)) / norm2;
  ProjectionResult r;
  r.point = s0 + lambda * h.row;
  r.multiplier = lambda;
  r.newton_iters = 0;
  r.residual = std::abs(h.row.dot(r.point) - h.value);
  return r;
}

ProjectionResult project_positive_entropy(const Eigen::VectorXd& s0, const Hyperplane& h,
                                          double tol, int max_iters) {
  check_hyperplane(s0, h);
  auto it = detail::make_dual(FunctionalKind::PositiveEntropy, s0);
  const MultiplierSolve ms =
      detail::project_dual(FunctionalKind::PositiveEntropy, it, h, tol, max_iters);
  ProjectionResult r;
  r.point = it.s.matrix();
  r.multiplier = ms.multiplier;
  r.newton_iters = ms.iters;
  r.residual = std::abs(h.row.dot(r.point) - h.value);
  return r;
}

ProjectionResult project_shifted_entropy(const Eigen::VectorXd& s0, const Hyperplane& h,
                                         double tol, int max_iters) {
  check_hyperplane(s0, h);
  auto it = detail::make_dual(FunctionalKind::ShiftedEntropy, s0);
  const MultiplierSolve ms =
      detail::project_dual(FunctionalKind::ShiftedEntropy, it, h, tol, max_iters);
  ProjectionResult r;
  r.point = it.s.matrix();
  r.multiplier = ms.multiplier;
  r.newton_iters = ms.iters;
  r.residual = std::abs(h.row.dot(r.point) - h.value);
  return r;
}

ProjectionResult project(FunctionalKind kind, const Eigen::VectorXd& s0, const Hyperplane& h,
                         double tol, int max_iters) {
  switch (kind) {
    case FunctionalKind::Euclidean:
      return project_euclidean(s0, h);
    case FunctionalKind::PositiveEntropy:
      return project_positive_entropy(s0, h, tol, max_iters);
    case FunctionalKind::ShiftedEntropy:
      return project_shifted_entropy(s0, h, tol, max_iters);
  }
  throw DomainError("unreachable functional kind");
}

MultiplierSolve solve_multiplier(const Eigen::VectorXd& s0, const Hyperplane& h,
                                 FunctionalKind kind, double tol, int max_iters,
                                 BracketTrace* trace) {
  check_hyperplane(s0, h);
  auto it = detail::make_dual(kind, s0);
  return detail::project_dual(kind, it, h, tol, max_iters, trace);
}

}  // namespace bregcs
