#include "biaslab/design.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "biaslab/error.hpp"

namespace biaslab {

void require_threshold(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw Error(Errc::OutOfRangeThreshold, "threshold must lie in (0, 1), got " + std::to_string(tau));
  }
}

double preference_coefficient(const Instance& instance, std::size_t a, std::size_t other,
                              std::size_t state, double w) {
  const Belief& prior = instance.prior();
  double at_prior = 0.0;
  for (std::size_t s = 0; s < instance.num_states(); ++s) {
    at_prior += prior[s] * (instance.utility(a, s) - instance.utility(other, s));
  }
  const double gap = instance.utility(a, state) - instance.utility(other, state);
  return prior[state] * ((1.0 - w) * gap + w * at_prior);
}

DesignLp build_lp(const Instance& instance, double tau) {
  require_threshold(tau);
  const std::size_t n_s = instance.num_states();
  const std::size_t n_a = instance.num_actions();
  const std::size_t a0 = instance.default_action();

  DesignLp out;
  out.num_states = n_s;
  out.num_actions = n_a;
  out.lp.objective.assign(n_a * n_s, 0.0);
  for (std::size_t a = 0; a < n_a; ++a) {
    if (a == a0) continue;
    for (std::size_t s = 0; s < n_s; ++s) out.lp.objective[out.var(a, s)] = instance.prior()[s];
  }

  auto comparison_row = [&](std::size_t a, std::size_t other, RowSense sense, std::string name) {
    LpRow row{std::vector<double>(n_a * n_s, 0.0), sense, 0.0, std::move(name)};
    for (std::size_t s = 0; s < n_s; ++s) row.coeffs[out.var(a, s)] = preference_coefficient(instance, a, other, s, tau);
    return row;
  };

  const auto& acts = instance.actions();
  for (std::size_t a = 0; a < n_a; ++a) {
    for (std::size_t other = 0; other < n_a; ++other) {
      if (other == a) continue;
      out.lp.rows.push_back(
          comparison_row(a, other, RowSense::GreaterEqual, "optimality[" + acts[a] + " over " + acts[other] + "]"));
      ++out.optimality_rows;
    }
  }
  for (std::size_t a = 0; a < n_a; ++a) {
    if (a == a0) continue;
    out.lp.rows.push_back(
        comparison_row(a, a0, RowSense::Equal, "indifference[" + acts[a] + " vs " + acts[a0] + "]"));
    ++out.indifference_rows;
  }
  for (std::size_t s = 0; s < n_s; ++s) {
    LpRow row{std::vector<double>(n_a * n_s, 0.0), RowSense::Equal, 1.0, "distribution[" + instance.states()[s] + "]"};
    for (std::size_t a = 0; a < n_a; ++a) row.coeffs[out.var(a, s)] = 1.0;
    out.lp.rows.push_back(std::move(row));
    ++out.distribution_rows;
  }
  return out;
}

namespace {

double useful_mass_of(const Instance& instance, const SignalingScheme& scheme) {
  double mass = 0.0;
  for (std::size_t a = 0; a < scheme.num_signals(); ++a) {
    if (a != instance.default_action()) mass += scheme.signal_probability(instance.prior(), a);
  }
  return mass;
}

}  // namespace

DesignResult design_scheme(const Instance& instance, double tau) {
  const DesignLp design = build_lp(instance, tau);
  const LpSolution sol = solve_lp(design.lp);
  if (sol.status != LpStatus::Optimal) {
    // The all-default scheme is always feasible, so this signals a solver fault.
    throw Error(Errc::Numerical, "threshold LP did not reach an optimum");
  }
  if (sol.value <= kTol) {
    throw Error(Errc::Untestable, "no threshold test exists at tau = " + std::to_string(tau));
  }

  const std::size_t n_s = design.num_states;
  const std::size_t n_a = design.num_actions;
  std::vector<std::vector<double>> cond(n_a, std::vector<double>(n_s, 0.0));
  for (std::size_t s = 0; s < n_s; ++s) {
    double col = 0.0;
    for (std::size_t a = 0; a < n_a; ++a) {
      double v = sol.x[design.var(a, s)];
      if (v <= kZeroSignal) v = 0.0;
      cond[a][s] = v;
      col += v;
    }
    for (std::size_t a = 0; a < n_a; ++a) cond[a][s] /= col;
  }

  DesignResult result;
  result.scheme = SignalingScheme(instance.actions(), std::move(cond));
  result.tau = tau;
  result.lp_value = sol.value;
  result.useful_mass = std::min(1.0, useful_mass_of(instance, result.scheme));
  result.sample_complexity = 1.0 / result.useful_mass;
  return result;
}

DesignReport check_design(const Instance& instance, double tau, const DesignResult& result) {
  require_threshold(tau);
  DesignReport report;
  const SignalingScheme& scheme = result.scheme;
  const std::size_t n_a = instance.num_actions();
  const std::size_t n_s = instance.num_states();
  const std::size_t a0 = instance.default_action();
  const auto& acts = instance.actions();

  auto flag = [&report](double residual, const std::string& row) {
    if (residual > kDesignTol) {
      std::ostringstream os;
      os << row << " residual " << residual;
      report.violations.push_back(os.str());
    }
  };

  if (scheme.num_signals() != n_a || scheme.num_states() != n_s || scheme.signals() != acts) {
    report.violations.emplace_back("scheme is not a direct scheme over the instance's actions");
    return report;
  }

  auto row_value = [&](std::size_t a, std::size_t other) {
    double v = 0.0;
    for (std::size_t s = 0; s < n_s; ++s) v += scheme.cond(a, s) * preference_coefficient(instance, a, other, s, tau);
    return v;
  };

  for (std::size_t a = 0; a < n_a; ++a) {
    for (std::size_t other = 0; other < n_a; ++other) {
      if (other == a) continue;
      const double r = std::max(0.0, -row_value(a, other));
      report.optimality = std::max(report.optimality, r);
      flag(r, "optimality[" + acts[a] + " over " + acts[other] + "]");
    }
  }
  for (std::size_t a = 0; a < n_a; ++a) {
    if (a == a0) continue;
    const double r = std::abs(row_value(a, a0));
    report.indifference = std::max(report.indifference, r);
    flag(r, "indifference[" + acts[a] + " vs " + acts[a0] + "]");
  }
  for (std::size_t s = 0; s < n_s; ++s) {
    double sum = 0.0;
    double neg = 0.0;
    for (std::size_t a = 0; a < n_a; ++a) {
      sum += scheme.cond(a, s);
      neg = std::max(neg, -scheme.cond(a, s));
    }
    const double r = std::max(std::abs(sum - 1.0), neg);
    report.distribution = std::max(report.distribution, r);
    flag(r, "distribution[" + instance.states()[s] + "]");
  }

  const double mass = useful_mass_of(instance, scheme);
  double obj = std::abs(mass - result.useful_mass);
  if (result.useful_mass > 0.0) obj = std::max(obj, std::abs(result.sample_complexity - 1.0 / result.useful_mass));
  report.objective = obj;
  flag(obj, "objective");

  // Direct re-check at the belief level: after recommendation a, an agent
  // with bias tau finds a optimal and, for a != a0, is indifferent to a0.
  for (std::size_t a = 0; a < n_a; ++a) {
    if (scheme.signal_probability(instance.prior(), a) <= kNegligibleSignal) continue;
    const Belief belief = biased_belief(instance.prior(), bayes_posterior(instance, scheme, a), tau);
    const BestResponse br = best_response(instance, belief);
    double r = std::max(0.0, br.expected_utility - expected_utility(instance, a, belief));
    if (a != a0) {
      r = std::max(r, std::abs(expected_utility(instance, a, belief) - expected_utility(instance, a0, belief)));
    }
    report.belief_check = std::max(report.belief_check, r);
    flag(r, "belief-check[" + acts[a] + "]");
  }
  return report;
}

DesignReport verify_design(const Instance& instance, double tau, const DesignResult& result) {
  DesignReport report = check_design(instance, tau, result);
  if (!report.ok()) {
    std::string msg;
    for (const auto& v : report.violations) msg += (msg.empty() ? "" : "; ") + v;
    throw Error(Errc::VerificationFailed, msg);
  }
  return report;
}

}  // namespace biaslab
