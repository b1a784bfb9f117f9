#include "biaslab/lp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "biaslab/error.hpp"

namespace biaslab {

double LinearProgram::max_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  for (const LpRow& row : rows) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < row.coeffs.size(); ++j) lhs += row.coeffs[j] * x[j];
    switch (row.sense) {
      case RowSense::LessEqual: worst = std::max(worst, lhs - row.rhs); break;
      case RowSense::GreaterEqual: worst = std::max(worst, row.rhs - lhs); break;
      case RowSense::Equal: worst = std::max(worst, std::abs(lhs - row.rhs)); break;
    }
  }
  return worst;
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Revised simplex on the standard form [structural | slack | artificial] x = b,
// x >= 0, with rows equilibrated to unit max-norm and b >= 0. The basis is
// refactored from the original columns every iteration, so rounding does not
// accumulate across pivots.
class RevisedSimplex {
 public:
  RevisedSimplex(const LinearProgram& lp, const SimplexOptions& opt) : opt_(opt) {
    n_struct_ = lp.num_vars();
    m_ = lp.rows.size();
    std::size_t n_slack = 0;
    for (const LpRow& r : lp.rows) {
      if (r.coeffs.size() != n_struct_) throw Error(Errc::ShapeMismatch, "LP row width differs from objective");
      if (r.sense != RowSense::Equal) ++n_slack;
    }
    art_start_ = n_struct_ + n_slack;
    n_cols_ = art_start_ + m_;
    a_ = MatrixXd::Zero(static_cast<Eigen::Index>(m_), static_cast<Eigen::Index>(n_cols_));
    b_ = VectorXd::Zero(static_cast<Eigen::Index>(m_));
    basis_.resize(m_);

    std::size_t slack = n_struct_;
    for (std::size_t i = 0; i < m_; ++i) {
      const LpRow& r = lp.rows[i];
      const auto row = static_cast<Eigen::Index>(i);
      double scale = 0.0;
      for (double c : r.coeffs) scale = std::max(scale, std::abs(c));
      if (scale == 0.0) scale = 1.0;
      const double sign = r.rhs < 0.0 ? -1.0 : 1.0;
      const double f = sign / scale;
      for (std::size_t j = 0; j < n_struct_; ++j) a_(row, static_cast<Eigen::Index>(j)) = f * r.coeffs[j];
      if (r.sense == RowSense::LessEqual) a_(row, static_cast<Eigen::Index>(slack++)) = f;
      if (r.sense == RowSense::GreaterEqual) a_(row, static_cast<Eigen::Index>(slack++)) = -f;
      a_(row, static_cast<Eigen::Index>(art_start_ + i)) = 1.0;
      b_(row) = f * r.rhs;
      basis_[i] = art_start_ + i;
    }
    in_basis_.assign(n_cols_, false);
    for (std::size_t j : basis_) in_basis_[j] = true;
    refactor();
  }

  // Maximizes cost . x. Columns with `allow_entering[j] == false` never
  // enter; basic artificials are kept at zero. Returns false if unbounded.
  bool optimize(const VectorXd& cost, bool artificials_may_enter, std::size_t& iterations) {
    for (;;) {
      if (++iterations > opt_.max_iterations) throw Error(Errc::Numerical, "simplex iteration limit reached");

      VectorXd c_b(static_cast<Eigen::Index>(m_));
      for (std::size_t i = 0; i < m_; ++i) c_b(static_cast<Eigen::Index>(i)) = cost(static_cast<Eigen::Index>(basis_[i]));
      const VectorXd y = lu_.transpose().solve(c_b);

      // Bland: lowest-index column with positive reduced cost.
      std::size_t enter = n_cols_;
      for (std::size_t j = 0; j < n_cols_; ++j) {
        if (in_basis_[j] || (!artificials_may_enter && j >= art_start_)) continue;
        const double d = cost(static_cast<Eigen::Index>(j)) - y.dot(a_.col(static_cast<Eigen::Index>(j)));
        if (d > opt_.pivot_tol) {
          enter = j;
          break;
        }
      }
      if (enter == n_cols_) return true;

      const VectorXd u = lu_.solve(a_.col(static_cast<Eigen::Index>(enter)));
      const std::size_t leave = ratio_test(u, artificials_may_enter);
      if (leave == m_) return false;

      in_basis_[basis_[leave]] = false;
      basis_[leave] = enter;
      in_basis_[enter] = true;
      refactor();
    }
  }

  // Objective at the current basic solution.
  double objective_value(const VectorXd& cost) const {
    double v = 0.0;
    for (std::size_t i = 0; i < m_; ++i) v += cost(static_cast<Eigen::Index>(basis_[i])) * x_b_(static_cast<Eigen::Index>(i));
    return v;
  }

  std::vector<double> structural_solution() const {
    std::vector<double> x(n_struct_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_struct_) x[basis_[i]] = std::max(x_b_(static_cast<Eigen::Index>(i)), 0.0);
    }
    return x;
  }

  std::size_t num_cols() const { return n_cols_; }
  std::size_t artificial_start() const { return art_start_; }

 private:
  void refactor() {
    MatrixXd b(static_cast<Eigen::Index>(m_), static_cast<Eigen::Index>(m_));
    for (std::size_t i = 0; i < m_; ++i) b.col(static_cast<Eigen::Index>(i)) = a_.col(static_cast<Eigen::Index>(basis_[i]));
    lu_.compute(b);
    x_b_ = lu_.solve(b_);
  }

  // Harris two-pass ratio test: bound the step with the feasibility
  // tolerance, then take the largest pivot among rows reaching that bound.
  // Ties go to the lowest basic index. Basic artificials at zero leave on
  // any non-negligible entry so they never become positive in phase two.
  std::size_t ratio_test(const VectorXd& u, bool artificials_may_enter) const {
    const double max_u = u.cwiseAbs().maxCoeff();
    const double tol = opt_.pivot_tol * std::max(1.0, max_u);

    if (!artificials_may_enter) {
      std::size_t best = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] < art_start_) continue;
        const double ui = u(static_cast<Eigen::Index>(i));
        if (std::abs(ui) > tol && (best == m_ || std::abs(ui) > std::abs(u(static_cast<Eigen::Index>(best))))) {
          best = i;
        }
      }
      if (best != m_) return best;
    }

    double bound = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m_; ++i) {
      const double ui = u(static_cast<Eigen::Index>(i));
      if (ui <= tol) continue;
      bound = std::min(bound, (std::max(x_b_(static_cast<Eigen::Index>(i)), 0.0) + opt_.feasibility_tol) / ui);
    }
    if (!std::isfinite(bound)) return m_;

    std::size_t leave = m_;
    for (std::size_t i = 0; i < m_; ++i) {
      const double ui = u(static_cast<Eigen::Index>(i));
      if (ui <= tol) continue;
      if (std::max(x_b_(static_cast<Eigen::Index>(i)), 0.0) / ui > bound) continue;
      if (leave == m_) {
        leave = i;
        continue;
      }
      const double best_u = u(static_cast<Eigen::Index>(leave));
      if (ui > best_u * (1.0 + 1e-12) || (ui >= best_u * (1.0 - 1e-12) && basis_[i] < basis_[leave])) leave = i;
    }
    return leave;
  }

  SimplexOptions opt_;
  std::size_t n_struct_ = 0;
  std::size_t m_ = 0;
  std::size_t art_start_ = 0;
  std::size_t n_cols_ = 0;
  MatrixXd a_;
  VectorXd b_;
  std::vector<std::size_t> basis_;
  std::vector<bool> in_basis_;
  Eigen::PartialPivLU<MatrixXd> lu_;
  VectorXd x_b_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
  LpSolution sol;
  if (lp.rows.empty()) {
    sol.x.assign(lp.num_vars(), 0.0);
    for (double c : lp.objective) {
      if (c > 0.0) {
        sol.status = LpStatus::Unbounded;
        return sol;
      }
    }
    sol.status = LpStatus::Optimal;
    return sol;
  }

  RevisedSimplex simplex(lp, options);
  const auto n_cols = static_cast<Eigen::Index>(simplex.num_cols());

  VectorXd phase1 = VectorXd::Zero(n_cols);
  for (std::size_t j = simplex.artificial_start(); j < simplex.num_cols(); ++j) phase1(static_cast<Eigen::Index>(j)) = -1.0;
  simplex.optimize(phase1, true, sol.iterations);
  if (-simplex.objective_value(phase1) > options.feasibility_tol) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }

  VectorXd phase2 = VectorXd::Zero(n_cols);
  for (std::size_t j = 0; j < lp.num_vars(); ++j) phase2(static_cast<Eigen::Index>(j)) = lp.objective[j];
  if (!simplex.optimize(phase2, false, sol.iterations)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  sol.status = LpStatus::Optimal;
  sol.x = simplex.structural_solution();
  sol.value = 0.0;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) sol.value += lp.objective[j] * sol.x[j];
  return sol;
}

}  // namespace biaslab
