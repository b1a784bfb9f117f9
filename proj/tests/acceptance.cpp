// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "biaslab/biaslab.hpp"
#include "fixtures.hpp"

namespace {

using namespace biaslab;
using testing::random_instance;

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

bool run_criterion(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("criterion %d [%s] %s: %s\n", id, title, o.passed ? "PASS" : "FAIL", o.detail.c_str());
  std::fflush(stdout);
  return o.passed;
}

/// The 200 random instances shared by the LP, classification and decision-rule criteria.
std::vector<Instance> grid_instances() {
  Rng rng(20240601);
  std::vector<Instance> out;
  for (int i = 0; i < 200; ++i) out.push_back(random_instance(rng));
  return out;
}

const std::vector<double>& tau_grid() {
  static const std::vector<double> grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  return grid;
}

Outcome closed_form() {
  Rng rng(1);
  double worst_complexity = 0.0;
  double worst_posterior = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double mu0 = 0.05 + 0.85 * rng.uniform();
    const double mu_star = mu0 + (0.95 - mu0) * (0.05 + 0.9 * rng.uniform());
    const double tau_max = (1.0 - mu_star) / (1.0 - mu0);
    const double tau = tau_max * (0.02 + 0.96 * rng.uniform());
    const Instance inst = testing::two_state(mu0, mu_star);
    const DesignResult d = design_scheme(inst, tau);
    const auto expected = testing::two_state_closed_form(mu0, mu_star, tau);
    const Belief post = bayes_posterior(inst, d.scheme, inst.action_index("Active"));
    worst_complexity = std::max(worst_complexity, std::abs(d.sample_complexity - expected.sample_complexity));
    worst_posterior = std::max(worst_posterior, std::abs(post[0] - expected.signal_posterior));
  }
  return {worst_complexity <= 1e-6 && worst_posterior <= 1e-6,
          fmt("50 cases; max |SC error| = %.3g, max |posterior error| = %.3g (tol 1e-6)", worst_complexity,
              worst_posterior)};
}

Outcome lp_self_consistency(const std::vector<Instance>& instances) {
  double worst = 0.0;
  int designed = 0;
  int skipped = 0;
  for (const Instance& inst : instances) {
    for (double tau : tau_grid()) {
      DesignResult d;
      try {
        d = design_scheme(inst, tau);
      } catch (const Error& e) {
        if (e.code() != Errc::Untestable) throw;
        ++skipped;
        continue;
      }
      const DesignReport r = verify_design(inst, tau, d);
      worst = std::max({worst, r.optimality, r.indifference, r.distribution, r.objective, r.belief_check});
      ++designed;
    }
  }
  return {worst <= 1e-8, fmt("%d designs verified, %d untestable cells skipped; max residual = %.3g (tol 1e-8)",
                             designed, skipped, worst)};
}

Outcome classification(const std::vector<Instance>& instances) {
  std::vector<std::string> failures;
  const Classification single = classify(testing::symmetric_three_action(), 0.5);
  if (single.verdict != Verdict::SingleSample || std::abs(*single.useful_mass - 1.0) > 1e-9) {
    failures.push_back("symmetric instance not single-sample with p* = 1");
  }
  const Classification finite = classify(testing::two_state_reference(), 0.5);
  if (finite.verdict != Verdict::Finite || std::abs(*finite.useful_mass - 0.25) > 1e-9) {
    failures.push_back("two-state tau=0.5 not finite with p* = 0.25");
  }
  if (classify(testing::two_state_reference(), 0.8).verdict != Verdict::Untestable) {
    failures.push_back("two-state tau=0.8 not untestable");
  }

  int cells = 0;
  int disagreements = 0;
  for (const Instance& inst : instances) {
    for (double tau : tau_grid()) {
      ++cells;
      bool any_nonempty = false;
      for (std::size_t a = 0; a < inst.num_actions(); ++a) {
        if (a != inst.default_action() && translated_set_nonempty(inst, a, tau)) any_nonempty = true;
      }
      bool lp_untestable = false;
      try {
        design_scheme(inst, tau);
      } catch (const Error& e) {
        if (e.code() != Errc::Untestable) throw;
        lp_untestable = true;
      }
      const Classification c = classify(inst, tau);
      const bool verdict_untestable = c.verdict == Verdict::Untestable;
      if (lp_untestable == any_nonempty || verdict_untestable != lp_untestable) ++disagreements;
    }
  }
  if (disagreements > 0) failures.push_back(fmt("%d grid cells where LP and emptiness disagree", disagreements));

  std::string detail = fmt("reference verdicts checked; LP/emptiness agree on %d of %d cells", cells - disagreements,
                           cells);
  for (const std::string& f : failures) detail += "; " + f;
  return {failures.empty(), detail};
}

/// Verdict an agent at bias w reaches on a given plan, read off every useful signal.
bool decision_rule_holds(const Instance& inst, const TestPlan& plan, const BiasedAgent& agent, double tau) {
  const ThresholdOutcome expected = agent.w() >= tau ? ThresholdOutcome::GEq : ThresholdOutcome::LEq;
  for (std::size_t s = 0; s < plan.scheme.num_signals(); ++s) {
    if (!plan.useful[s] || plan.scheme.signal_probability(inst.prior(), s) <= kZeroSignal) continue;
    const bool plays_default = agent_act(agent, inst, plan.scheme, s) == inst.default_action();
    if ((plays_default ? ThresholdOutcome::GEq : ThresholdOutcome::LEq) != expected) return false;
  }
  return true;
}

Outcome decision_rule(const std::vector<Instance>& instances) {
  Rng rng(4);
  int checks = 0;
  int wrong = 0;
  int runs = 0;
  for (const Instance& inst : instances) {
    for (double tau : tau_grid()) {
      if (classify(inst, tau).verdict == Verdict::Untestable) continue;
      const TestPlan plan = make_plan(inst, tau, *linear_bias());
      for (double w : {tau - 0.05, tau + 0.05}) {
        const BiasedAgent agent(w);
        const ThresholdOutcome expected = w >= tau ? ThresholdOutcome::GEq : ThresholdOutcome::LEq;
        ++checks;
        if (!decision_rule_holds(inst, plan, agent, tau)) ++wrong;
        // Full simulated tests where the expected run length is modest.
        if (plan.useful_mass >= 1e-3) {
          ++runs;
          if (threshold_test(inst, plan, agent, rng).verdict != expected) ++wrong;
        }
      }
    }
  }
  return {wrong == 0 && checks > 0,
          fmt("%d agent/threshold pairs, %d simulated tests; %d incorrect verdicts", checks, runs, wrong)};
}

Outcome sample_statistics() {
  Rng rng(5);
  const SampleComplexityEstimate est =
      empirical_sample_complexity(testing::two_state_reference(), 0.5, BiasedAgent(0.3), rng, 100000);
  const double band = 4.0 * est.std_error.value_or(0.0);
  const bool finite_ok = std::abs(est.mean - 4.0) <= band;
  Rng rng2(6);
  const SampleComplexityEstimate single =
      empirical_sample_complexity(testing::symmetric_three_action(), 0.5, BiasedAgent(0.3), rng2, 100000);
  return {finite_ok && single.mean == 1.0,
          fmt("two-state mean = %.5f (target 4, band +/- %.4f); single-sample mean = %.6g", est.mean, band,
              single.mean)};
}

Outcome confidence_horizon() {
  const ConfidenceHorizon ref = steps_for_confidence(0.25, 0.05);
  bool ok = ref.exact == 11 && ref.bound == 12;
  int violations = 0;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      const ConfidenceHorizon h = steps_for_confidence(i / 10.0, j / 11.0);
      if (h.exact > h.bound) ++violations;
    }
  }
  ok = ok && violations == 0;
  return {ok, fmt("(0.25, 0.05) -> (%zu, %zu); exact > bound on %d of 100 grid points", ref.exact, ref.bound,
                  violations)};
}

Outcome estimator() {
  const Instance inst = testing::two_state_reference();
  const double eps = 0.02;
  int bad = 0;
  std::size_t max_queries = 0;
  double max_width = 0.0;
  for (int k = 0; k <= 12; ++k) {
    const double w = 0.05 * k;
    Rng rng(700 + static_cast<std::uint64_t>(k));
    const BiasInterval iv = estimate_bias(inst, BiasedAgent(w), eps, rng);
    max_queries = std::max(max_queries, iv.queries);
    max_width = std::max(max_width, iv.hi - iv.lo);
    if (iv.censored || iv.lo > w || iv.hi < w || iv.hi - iv.lo > eps || iv.queries > 6) ++bad;
  }
  int bad_censored = 0;
  for (int k = 14; k <= 20; ++k) {
    const double w = 0.05 * k;
    Rng rng(800 + static_cast<std::uint64_t>(k));
    const BiasInterval iv = estimate_bias(inst, BiasedAgent(w), eps, rng);
    if (!iv.censored || std::abs(iv.lo - 0.625) > 1e-12 || w < iv.lo) ++bad_censored;
  }
  return {bad == 0 && bad_censored == 0,
          fmt("w in [0, 0.6]: %d failures, max width %.4f, max queries %zu; w in [0.7, 1]: %d censoring failures",
              bad, max_width, max_queries, bad_censored)};
}

Outcome general_model() {
  std::vector<std::string> failures;
  Rng rng(8);

  // Linear membership against the hyperplane test, on LP posteriors and random beliefs.
  int membership_checks = 0;
  int membership_wrong = 0;
  auto hyperplane_member = [](const Instance& inst, const Belief& mu, std::size_t a, double tau) {
    if (std::abs(gap_vector(inst, a).at(mu) - indifference_offset(inst, a, tau)) > 1e-9) return false;
    for (const GapVector& g : gap_vectors(inst)) {
      if (g.at(mu) < indifference_offset(inst, g.action, tau) - 1e-9) return false;
    }
    return true;
  };
  // Linear scheme agreement with classify.
  int scheme_cells = 0;
  int scheme_wrong = 0;
  for (int i = 0; i < 100; ++i) {
    const Instance inst = random_instance(rng);
    for (double tau : tau_grid()) {
      const Classification c = classify(inst, tau);
      std::vector<Belief> probes;
      for (int k = 0; k < 3; ++k) probes.emplace_back(rng.simplex_point(inst.num_states()));
      if (c.design) {
        const SignalingScheme& sch = c.design->scheme;
        for (std::size_t s = 0; s < sch.num_signals(); ++s) {
          if (s != inst.default_action() && sch.signal_probability(inst.prior(), s) > kNegligibleSignal) {
            probes.push_back(bayes_posterior(inst, sch, s));
          }
        }
      }
      for (const Belief& mu : probes) {
        for (std::size_t a = 0; a < inst.num_actions(); ++a) {
          if (a == inst.default_action()) continue;
          ++membership_checks;
          if (generalized_membership(*linear_bias(), inst, mu, a, tau) != hyperplane_member(inst, mu, a, tau)) {
            ++membership_wrong;
          }
        }
      }

      ++scheme_cells;
      try {
        const FiniteScheme fs = construct_finite_scheme(*linear_bias(), inst, tau);
        if (c.verdict == Verdict::Untestable || fs.useful_mass > *c.useful_mass + 1e-9 ||
            splitting_check(inst, fs.scheme) > 1e-9) {
          ++scheme_wrong;
        }
      } catch (const Error& e) {
        if (e.code() != Errc::Untestable || c.verdict != Verdict::Untestable) ++scheme_wrong;
      }
    }
  }
  if (membership_wrong > 0) failures.push_back(fmt("membership disagreements %d", membership_wrong));
  if (scheme_wrong > 0) failures.push_back(fmt("construct/classify disagreements %d", scheme_wrong));

  // Warped models: crossing levels, assumptions, and simulated tests.
  double worst_crossing = 0.0;
  int assumption_failures = 0;
  int test_pairs = 0;
  int test_wrong = 0;
  for (double gamma : {0.5, 2.0, 3.0}) {
    const BiasFunctionPtr phi = warped_bias(gamma);
    for (int i = 0; i < 30; ++i) {
      const Instance inst = random_instance(rng);
      if (!check_assumptions(*phi, inst, 50, rng).ok()) ++assumption_failures;
      for (int k = 0; k < 10; ++k) {
        const Belief post(rng.simplex_point(inst.num_states()));
        const auto lin = crossing_level(*linear_bias(), inst, post);
        const auto warp = crossing_level(*phi, inst, post);
        if (lin.has_value() != warp.has_value()) {
          worst_crossing = INFINITY;
        } else if (lin) {
          worst_crossing = std::max(worst_crossing, std::abs(*warp - std::pow(*lin, 1.0 / gamma)));
        }
      }
      const double tau_max = general_testable_range(*phi, inst);
      for (double frac : {0.3, 0.6, 0.9}) {
        const double tau = frac * tau_max;
        if (tau <= 0.05 || tau >= 0.95) continue;
        const TestPlan plan = make_plan(inst, tau, *phi);
        if (splitting_check(inst, plan.scheme) > 1e-9) ++test_wrong;
        for (double w : {tau - 0.05, tau + 0.05}) {
          const BiasedAgent agent(w, phi);
          ++test_pairs;
          if (!decision_rule_holds(inst, plan, agent, tau)) {
            ++test_wrong;
            continue;
          }
          if (plan.useful_mass >= 1e-3) {
            const ThresholdOutcome expected = w >= tau ? ThresholdOutcome::GEq : ThresholdOutcome::LEq;
            if (threshold_test(inst, plan, agent, rng).verdict != expected) ++test_wrong;
          }
        }
      }
    }
  }
  if (worst_crossing > 1e-8) failures.push_back(fmt("crossing level error %.3g", worst_crossing));
  if (assumption_failures > 0) failures.push_back(fmt("assumption check failures %d", assumption_failures));
  if (test_wrong > 0) failures.push_back(fmt("warped threshold test failures %d", test_wrong));

  std::string detail = fmt(
      "linear: %d membership checks, %d scheme cells; warped: max crossing error %.3g, %d threshold pairs",
      membership_checks, scheme_cells, worst_crossing, test_pairs);
  for (const std::string& f : failures) detail += "; " + f;
  return {failures.empty(), detail};
}

Outcome splitting() {
  Rng rng(9);
  double worst_split = 0.0;
  double worst_round_trip = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Instance inst = random_instance(rng, 0.0);
    const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 6.0);
    std::vector<std::vector<double>> cond(m, std::vector<double>(inst.num_states()));
    for (std::size_t s = 0; s < inst.num_states(); ++s) {
      const std::vector<double> col = rng.simplex_point(m);
      for (std::size_t j = 0; j < m; ++j) cond[j][s] = col[j];
    }
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < m; ++j) labels.push_back("x" + std::to_string(j));
    const SignalingScheme scheme(labels, cond);
    worst_split = std::max(worst_split, splitting_check(inst, scheme));

    std::vector<double> weights;
    std::vector<Belief> posteriors;
    for (std::size_t j = 0; j < m; ++j) {
      weights.push_back(scheme.signal_probability(inst.prior(), j));
      posteriors.push_back(bayes_posterior(inst, scheme, j));
    }
    const SignalingScheme rebuilt = scheme_from_posteriors(inst, weights, posteriors, labels);
    for (std::size_t j = 0; j < m; ++j) {
      worst_round_trip = std::max(worst_round_trip, bayes_posterior(inst, rebuilt, j).distance_inf(posteriors[j]));
      worst_round_trip =
          std::max(worst_round_trip, std::abs(rebuilt.signal_probability(inst.prior(), j) - weights[j]));
    }
  }
  return {worst_split <= 1e-9 && worst_round_trip <= 1e-9,
          fmt("1000 pairs; max splitting residual %.3g, max round-trip error %.3g (tol 1e-9)", worst_split,
              worst_round_trip)};
}

}  // namespace

int main() {
  const std::vector<Instance> instances = grid_instances();
  bool ok = true;
  ok &= run_criterion(1, "closed-form two-state optimum", closed_form);
  ok &= run_criterion(2, "LP self-consistency", [&] { return lp_self_consistency(instances); });
  ok &= run_criterion(3, "three-way classification", [&] { return classification(instances); });
  ok &= run_criterion(4, "boundary-signal decision rule", [&] { return decision_rule(instances); });
  ok &= run_criterion(5, "sample-complexity statistics", sample_statistics);
  ok &= run_criterion(6, "confidence horizon", confidence_horizon);
  ok &= run_criterion(7, "estimator soundness", estimator);
  ok &= run_criterion(8, "general bias model", general_model);
  ok &= run_criterion(9, "splitting property", splitting);
  std::printf("%s\n", ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
