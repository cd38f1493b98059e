#include "crank/simplex.hpp"

#include <atomic>
#include <cmath>
#include <limits>

#include "crank/errors.hpp"

namespace crank {

namespace {

constexpr double kCostTol = 1e-9;    // reduced-cost optimality threshold
constexpr double kPivotTol = 1e-10;  // smallest usable pivot element
constexpr double kFeasTol = 1e-7;    // phase-1 residual treated as infeasible
constexpr int kDegenerateRun = 64;   // degenerate pivots before Bland's rule

std::atomic<std::uint64_t> g_lp_calls{0};

}  // namespace

std::uint64_t lp_solve_count() { return g_lp_calls.load(); }

LpResult solve_lp(const LinearProgram& lp, long max_iterations) {
  g_lp_calls.fetch_add(1, std::memory_order_relaxed);

  const int nx = static_cast<int>(lp.c.size());
  const int m_ub = static_cast<int>(lp.b_ub.size());
  const int m_eq = static_cast<int>(lp.b_eq.size());
  const int m = m_ub + m_eq;

  // Internal minimization of -c'x over equalities with slacks added to the
  // inequality rows. Rows are sign-flipped as needed so the rhs is >= 0;
  // artificial variables cover rows whose slack cannot start in the basis.
  std::vector<double> rowsign(m, 1.0);
  std::vector<int> art_of_row;           // artificial column per row, -1 if none
  int n_art = 0;
  for (int r = 0; r < m; ++r) {
    double b = r < m_ub ? lp.b_ub[r] : lp.b_eq[r - m_ub];
    if (b < 0.0) rowsign[r] = -1.0;
    bool needs_art = r >= m_ub || b < 0.0;
    if (needs_art) ++n_art;
  }
  const int n_cols = nx + m_ub + n_art;  // structural + slack + artificial
  const int rhs = n_cols;                // rhs column index

  // Rows 0..m-1: constraints; row m: phase-2 costs; row m+1: phase-1 costs.
  Eigen::MatrixXd tab = Eigen::MatrixXd::Zero(m + 2, n_cols + 1);
  art_of_row.assign(m, -1);
  {
    int art = nx + m_ub;
    for (int r = 0; r < m; ++r) {
      double s = rowsign[r];
      if (r < m_ub) {
        tab.row(r).head(nx) = s * lp.a_ub.row(r);
        tab(r, nx + r) = s;  // slack
        tab(r, rhs) = s * lp.b_ub[r];
      } else {
        tab.row(r).head(nx) = s * lp.a_eq.row(r - m_ub);
        tab(r, rhs) = s * lp.b_eq[r - m_ub];
      }
      if (r >= m_ub || s < 0.0) {
        tab(r, art) = 1.0;
        art_of_row[r] = art++;
      }
    }
  }
  tab.row(m).head(nx) = -lp.c;  // minimize -c'x

  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r)
    if (art_of_row[r] >= 0) tab(m + 1, art_of_row[r]) = 1.0;  // phase-1 cost
  for (int r = 0; r < m; ++r) {
    if (art_of_row[r] >= 0) {
      basis[r] = art_of_row[r];
      tab.row(m + 1) -= tab.row(r);  // price the basic artificial out
    } else {
      basis[r] = nx + r;
    }
  }

  const int first_art = nx + m_ub;
  LpResult res;
  res.iterations = 0;
  bool bland = false;
  int degenerate_run = 0;

  auto pivot = [&](int prow, int pcol) {
    tab.row(prow) /= tab(prow, pcol);
    for (int r = 0; r < m + 2; ++r) {
      if (r == prow) continue;
      double f = tab(r, pcol);
      if (f != 0.0) tab.row(r).noalias() -= f * tab.row(prow);
    }
    basis[prow] = pcol;
  };

  // Runs simplex on objective row `obj`; columns >= col_limit are blocked.
  // Returns false on unboundedness.
  auto iterate = [&](int obj, int col_limit) -> bool {
    for (;;) {
      int enter = -1;
      if (bland) {
        for (int j = 0; j < col_limit; ++j)
          if (tab(obj, j) < -kCostTol) {
            enter = j;
            break;
          }
      } else {
        double best = -kCostTol;
        for (int j = 0; j < col_limit; ++j)
          if (tab(obj, j) < best) {
            best = tab(obj, j);
            enter = j;
          }
      }
      if (enter < 0) return true;  // optimal for this objective

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m; ++r) {
        double a = tab(r, enter);
        if (a > kPivotTol) {
          double ratio = tab(r, rhs) / a;
          if (ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 && (leave < 0 || basis[r] < basis[leave]))) {
            best_ratio = ratio;
            leave = r;
          }
        }
      }
      if (leave < 0) return false;  // unbounded direction

      if (best_ratio < 1e-12) {
        if (++degenerate_run >= kDegenerateRun) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(leave, enter);
      if (++res.iterations > max_iterations) {
        throw NumericalError("simplex: cycling guard exceeded (" +
                             std::to_string(res.iterations) + " iterations, " +
                             std::to_string(m) + " rows, " + std::to_string(n_cols) +
                             " cols)");
      }
    }
  };

  if (n_art > 0) {
    // Artificials never re-enter; structural and slack columns suffice.
    if (!iterate(m + 1, first_art)) {
      // Phase 1 minimizes a sum of nonnegative variables; it cannot be
      // unbounded below. Treat as a numerical failure.
      throw NumericalError("simplex: phase 1 unbounded");
    }
    if (tab(m + 1, rhs) < -kFeasTol) {
      res.status = LpStatus::infeasible;
      return res;
    }
    // Drive artificials out of the basis where possible; rows where no
    // structural pivot exists are redundant and their artificial stays
    // basic at zero (blocked from re-entering below).
    for (int r = 0; r < m; ++r) {
      if (basis[r] >= first_art) {
        int col = -1;
        for (int j = 0; j < first_art; ++j)
          if (std::abs(tab(r, j)) > kPivotTol) {
            col = j;
            break;
          }
        if (col >= 0) pivot(r, col);
      }
    }
  }

  if (!iterate(m, first_art)) {
    res.status = LpStatus::unbounded;
    return res;
  }

  res.status = LpStatus::optimal;
  res.x = Eigen::VectorXd::Zero(nx);
  for (int r = 0; r < m; ++r)
    if (basis[r] < nx) res.x[basis[r]] = tab(r, rhs);
  res.objective = tab(m, rhs);  // row m tracks -(min obj) = c'x

  // Duals from reduced costs of the per-row unit columns (slack or
  // artificial), mapped back through the row sign flips.
  res.dual_ub = Eigen::VectorXd::Zero(m_ub);
  res.dual_eq = Eigen::VectorXd::Zero(m_eq);
  for (int r = 0; r < m; ++r) {
    int unit_col = art_of_row[r] >= 0 ? art_of_row[r] : nx + r;
    double y_min = rowsign[r] * -tab(m, unit_col);
    double y_max = -y_min;
    if (r < m_ub)
      res.dual_ub[r] = y_max;
    else
      res.dual_eq[r - m_ub] = y_max;
  }
  return res;
}

}  // namespace crank
