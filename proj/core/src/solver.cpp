#include "bregcs/solver.hpp"

#include <cmath>
#include <string>

#include "bregcs/errors.hpp"

namespace bregcs {

namespace {

std::string at_context(int sweep, std::size_t row) {
  return " (sweep " + std::to_string(sweep) + ", row " + std::to_string(row) + ")";
}

double max_relative_residual(const std::vector<Hyperplane>& hps, const Eigen::VectorXd& s) {
  double worst = 0.0;
  for (const Hyperplane& h : hps) {
    const double r = std::abs(h.row.dot(s) - h.value) / (1.0 + std::abs(h.value));
    if (r > worst) worst = r;
  }
  return worst;
}

// The shared cyclic loop. Euclidean rows use the closed-form orthogonal
// projection; the entropy kinds keep the iterate in gradient coordinates so
// each projection is one multiplier solve plus a dual update.
SolverTrace run_cyclic(const std::vector<Hyperplane>& hps, const SolverConfig& config,
                       Eigen::VectorXd& s, int sweep_limit, bool use_stops,
                       long* projection_counter) {
  SolverTrace trace;
  if (hps.empty() || sweep_limit <= 0) {
    trace.termination = Termination::Feasible;
    return trace;
  }

  const bool euclidean = config.kind == FunctionalKind::Euclidean;
  std::vector<double> row_norm2;
  detail::DualIterate it;
  if (euclidean) {
    row_norm2.reserve(hps.size());
    for (const Hyperplane& h : hps) row_norm2.push_back(h.row.squaredNorm());
  } else {
    it = detail::make_dual(config.kind, s);
  }

  Eigen::VectorXd sweep_start(s.size());
  for (int sweep = 1; sweep <= sweep_limit; ++sweep) {
    sweep_start = s;
    double lambda_max = 0.0;
    for (std::size_t i = 0; i < hps.size(); ++i) {
      double lambda;
      if (euclidean) {
        lambda = (hps[i].value - hps[i].row.dot(s)) / row_norm2[i];
        s += lambda * hps[i].row;
      } else {
        try {
          lambda = detail::project_dual(config.kind, it, hps[i], config.newton_tol,
                                        config.newton_cap)
                       .multiplier;
        } catch (const SolverFailureError& e) {
          throw SolverFailureError(e.what() + at_context(sweep, i), e.multiplier,
                                   e.residual);
        } catch (const InfeasibleError& e) {
          throw InfeasibleError(e.what() + at_context(sweep, i));
        }
      }
      lambda_max = std::max(lambda_max, std::abs(lambda));
      if (projection_counter) ++*projection_counter;
    }
    if (!euclidean) s = it.s.matrix();

    SweepStats stats;
    stats.max_residual = max_relative_residual(hps, s);
    stats.iterate_delta = (s - sweep_start).norm();
    stats.lambda_max_abs = lambda_max;
    trace.per_sweep.push_back(stats);
    trace.sweeps_run = sweep;

    if (use_stops) {
      if (stats.max_residual <= config.feas_tol) {
        trace.termination = Termination::Feasible;
        return trace;
      }
      if (stats.iterate_delta < config.delta_tol) {
        trace.termination = Termination::Stalled;
        return trace;
      }
    }
  }
  trace.termination = Termination::SweepCapReached;
  return trace;
}

void check_dimensions(const std::vector<Hyperplane>& hps, Eigen::Index n) {
  for (std::size_t i = 0; i < hps.size(); ++i) {
    if (hps[i].row.size() != n)
      throw DimensionError("hyperplane " + std::to_string(i) + " has row length " +
                           std::to_string(hps[i].row.size()) + ", expected " +
                           std::to_string(n));
  }
}

}  // namespace

void SolverConfig::validate() const {
  if (max_sweeps < 1) throw ConfigError("solver.max_sweeps must be >= 1");
  if (!(feas_tol > 0.0)) throw ConfigError("solver.feas_tol must be > 0");
  if (!(delta_tol > 0.0)) throw ConfigError("solver.delta_tol must be > 0");
  if (!(newton_tol > 0.0)) throw ConfigError("solver.newton_tol must be > 0");
  if (newton_cap < 1) throw ConfigError("solver.newton_cap must be >= 1");
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::Feasible:
      return "feasible";
    case Termination::Stalled:
      return "stalled";
    case Termination::SweepCapReached:
      return "sweep-cap-reached";
  }
  return "?";
}

Eigen::VectorXd default_initial_point(FunctionalKind kind, Eigen::Index n) {
  if (kind == FunctionalKind::PositiveEntropy) return Eigen::VectorXd::Ones(n);
  return Eigen::VectorXd::Zero(n);
}

SolveResult solve(const std::vector<Hyperplane>& hyperplanes, const SolverConfig& config) {
  config.validate();
  if (hyperplanes.empty()) throw DimensionError("solve: empty hyperplane list");
  const Eigen::Index n = hyperplanes.front().row.size();
  check_dimensions(hyperplanes, n);

  SolveResult result;
  if (config.initial_point) {
    if (config.initial_point->size() != n)
      throw DimensionError("solve: initial point length mismatch");
    result.solution = *config.initial_point;
  } else {
    result.solution = default_initial_point(config.kind, n);
  }
  result.trace =
      run_cyclic(hyperplanes, config, result.solution, config.max_sweeps, true, nullptr);
  return result;
}

OnlineSolver::OnlineSolver(Eigen::Index n, const SolverConfig& config)
    : config_(config), n_(n) {
  config_.validate();
  if (n < 1) throw DimensionError("online solver needs n >= 1");
  if (config_.initial_point) {
    if (config_.initial_point->size() != n)
      throw DimensionError("online solver: initial point length mismatch");
    current_ = *config_.initial_point;
  } else {
    current_ = default_initial_point(config_.kind, n);
  }
}

void OnlineSolver::append(const Hyperplane& h, int refresh_sweeps) {
  if (h.row.size() != n_)
    throw DimensionError("append: row length " + std::to_string(h.row.size()) +
                         ", expected " + std::to_string(n_));
  hyperplanes_.push_back(h);
  current_ =
      project(config_.kind, current_, h, config_.newton_tol, config_.newton_cap).point;
  ++total_projections_;
  if (refresh_sweeps > 0)
    run_cyclic(hyperplanes_, config_, current_, refresh_sweeps, false,
               &total_projections_);
}

SolverTrace OnlineSolver::settle() {
  return run_cyclic(hyperplanes_, config_, current_, config_.max_sweeps, true,
                    &total_projections_);
}

}  // namespace bregcs
