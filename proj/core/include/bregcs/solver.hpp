#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "bregcs/functionals.hpp"
#include "bregcs/projection.hpp"

namespace bregcs {

struct SolverConfig {
  FunctionalKind kind = FunctionalKind::ShiftedEntropy;
  int max_sweeps = 2000;
  double feas_tol = 1e-8;    // stop when max_i |row_i.s - y_i| / (1+|y_i|) <= this
  double delta_tol = 1e-12;  // stop when the l2 change over one sweep drops below
  double newton_tol = 1e-12;
  int newton_cap = 100;
  // Empty: kind default (all zeros; all ones for PositiveEntropy, whose
  // iterates must stay strictly positive).
  std::optional<Eigen::VectorXd> initial_point;

  void validate() const;
};

enum class Termination { Feasible, Stalled, SweepCapReached };

const char* termination_name(Termination t);

struct SweepStats {
  double max_residual = 0.0;    // relative, after the sweep
  double iterate_delta = 0.0;   // l2 change across the sweep
  double lambda_max_abs = 0.0;  // largest |multiplier| seen in the sweep
};

// Per-sweep diagnostics for one solve.
struct SolverTrace {
  std::vector<SweepStats> per_sweep;
  Termination termination = Termination::SweepCapReached;
  int sweeps_run = 0;
};

struct SolveResult {
  Eigen::VectorXd solution;
  SolverTrace trace;
};

// Cyclic Bregman row-action solve: D-project onto hyperplane 1, then 2, ...,
// then M, and repeat, until the feasibility or iterate-change stop fires or
// the sweep cap is hit. Row order is fixed ascending; identical inputs give
// bit-identical output.
SolveResult solve(const std::vector<Hyperplane>& hyperplanes, const SolverConfig& config);

// One measurement at a time: each append D-projects the current estimate
// onto the new hyperplane, then runs `refresh_sweeps` full cyclic sweeps
// over everything stored so far.
class OnlineSolver {
 public:
  OnlineSolver(Eigen::Index n, const SolverConfig& config);

  void append(const Hyperplane& h, int refresh_sweeps);

  // Cyclic sweeps over all stored hyperplanes until the batch stopping rule
  // fires; used to settle the estimate after the last append.
  SolverTrace settle();

  const Eigen::VectorXd& current() const { return current_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  long total_projections() const { return total_projections_; }

 private:
  SolverConfig config_;
  Eigen::Index n_;
  Eigen::VectorXd current_;
  std::vector<Hyperplane> hyperplanes_;
  long total_projections_ = 0;
};

// Default start for a kind: zeros, except all ones for PositiveEntropy.
Eigen::VectorXd default_initial_point(FunctionalKind kind, Eigen::Index n);

}  // namespace bregcs
