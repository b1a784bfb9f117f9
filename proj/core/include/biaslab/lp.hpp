#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace biaslab {

enum class RowSense { LessEqual, GreaterEqual, Equal };

struct LpRow {
  std::vector<double> coeffs;
  RowSense sense = RowSense::Equal;
  double rhs = 0.0;
  std::string name;
};

/// maximize objective . x  subject to rows, x >= 0.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LpRow> rows;

  std::size_t num_vars() const noexcept { return objective.size(); }
  /// Largest violation of any row or bound at `x`.
  double max_violation(const std::vector<double>& x) const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
};

struct SimplexOptions {
  double pivot_tol = 1e-10;
  double feasibility_tol = 1e-9;
  std::size_t max_iterations = 50000;
};

/// Two-phase revised simplex with Bland's entering rule. Deterministic for a
/// given input. Throws Error(Numerical) when the iteration cap is hit.
LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace biaslab
