#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace crank {

/// Dense linear program:
///   maximize c'x  subject to  A_ub x <= b_ub,  A_eq x == b_eq,  x >= 0.
struct LinearProgram {
  Eigen::VectorXd c;
  Eigen::MatrixXd a_ub;  // may have 0 rows
  Eigen::VectorXd b_ub;
  Eigen::MatrixXd a_eq;  // may have 0 rows
  Eigen::VectorXd b_eq;
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpResult {
  LpStatus status = LpStatus::iteration_limit;
  double objective = 0.0;
  Eigen::VectorXd x;
  /// Duals of the maximization problem: objective == b_ub'dual_ub + b_eq'dual_eq
  /// and c - A_ub'dual_ub - A_eq'dual_eq <= 0 at an optimum; dual_ub >= 0.
  Eigen::VectorXd dual_ub;
  Eigen::VectorXd dual_eq;
  long iterations = 0;
};

/// Two-phase primal simplex on the full tableau. Dantzig pricing with a
/// switch to Bland's rule after a run of degenerate pivots, so it cannot
/// cycle. Exact for desk-scale problems (<= a few thousand variables).
LpResult solve_lp(const LinearProgram& lp, long max_iterations = 200000);

/// Number of solve_lp calls made by this process; test diagnostics.
std::uint64_t lp_solve_count();

}  // namespace crank
