#include "biaslab/detector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "biaslab/error.hpp"
#include "biaslab/geometry.hpp"

namespace biaslab {

std::string_view to_string(ThresholdOutcome o) noexcept {
  return o == ThresholdOutcome::GEq ? "geq" : "leq";
}

TestPlan plan_from_design(const Instance& instance, const DesignResult& design) {
  TestPlan plan;
  plan.scheme = design.scheme;
  plan.tau = design.tau;
  plan.useful.assign(design.scheme.num_signals(), false);
  for (std::size_t a = 0; a < plan.useful.size(); ++a) plan.useful[a] = a != instance.default_action();
  plan.useful_mass = design.useful_mass;
  return plan;
}

TestPlan plan_from_finite(const FiniteScheme& finite, double tau) {
  TestPlan plan;
  plan.scheme = finite.scheme;
  plan.tau = tau;
  plan.useful.assign(finite.scheme.num_signals(), false);
  plan.useful[finite.boundary_signal] = true;
  plan.useful_mass = finite.useful_mass;
  return plan;
}

namespace {

bool is_linear(const BiasFunction& phi) { return dynamic_cast<const LinearBias*>(&phi) != nullptr; }

}  // namespace

TestPlan make_plan(const Instance& instance, double tau, const BiasFunction& phi) {
  if (is_linear(phi)) return plan_from_design(instance, design_scheme(instance, tau));
  return plan_from_finite(construct_finite_scheme(phi, instance, tau), tau);
}

double testable_range(const Instance& instance, const BiasFunction& phi) {
  if (is_linear(phi)) return testable_range(instance);
  return general_testable_range(phi, instance);
}

ConfidenceHorizon steps_for_confidence(double useful_mass, double delta) {
  if (!(useful_mass > 0.0 && useful_mass <= 1.0) || !(delta > 0.0 && delta < 1.0)) {
    throw Error(Errc::DegenerateParameters, "need 0 < p <= 1 and 0 < delta < 1");
  }
  ConfidenceHorizon h;
  h.bound = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::log(1.0 / delta) / useful_mass)));
  if (useful_mass >= 1.0) {
    h.exact = 1;
    return h;
  }
  const double q = 1.0 - useful_mass;
  auto t = static_cast<std::size_t>(std::max(1.0, std::ceil(std::log(delta) / std::log(q))));
  // ceil of the log ratio can be off by one near integers.
  while (std::pow(q, static_cast<double>(t)) > delta) ++t;
  while (t > 1 && std::pow(q, static_cast<double>(t - 1)) <= delta) --t;
  h.exact = t;
  return h;
}

ThresholdVerdict threshold_test(const Instance& instance, const TestPlan& plan, const BiasedAgent& agent, Rng& rng,
                                std::size_t max_steps, bool record_trace) {
  if (plan.useful_mass <= kTol) throw Error(Errc::Untestable, "plan has no useful signal");
  if (max_steps == 0) max_steps = steps_for_confidence(plan.useful_mass, kDefaultTimeoutDelta).exact;

  ThresholdVerdict out;
  for (std::size_t step = 1; step <= max_steps; ++step) {
    const Episode e = sample_episode(agent, instance, plan.scheme, rng);
    if (record_trace) out.trace.push_back(e);
    if (!plan.useful[e.signal]) continue;
    out.steps = step;
    out.verdict = e.action == instance.default_action() ? ThresholdOutcome::GEq : ThresholdOutcome::LEq;
    return out;
  }
  throw Error(Errc::Timeout, "no useful signal within " + std::to_string(max_steps) + " steps");
}

ThresholdVerdict threshold_test(const Instance& instance, double tau, const BiasedAgent& agent, Rng& rng,
                                std::size_t max_steps, bool record_trace) {
  return threshold_test(instance, make_plan(instance, tau, agent.bias()), agent, rng, max_steps, record_trace);
}

SampleComplexityEstimate empirical_sample_complexity(const Instance& instance, const TestPlan& plan,
                                                     const BiasedAgent& agent, Rng& rng, std::size_t trials) {
  if (trials == 0) throw Error(Errc::DegenerateParameters, "need at least one trial");
  const std::uint64_t base = rng.next_u64();
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng lane = Rng::stream(base, i);
    const auto steps = static_cast<double>(threshold_test(instance, plan, agent, lane).steps);
    sum += steps;
    sum_sq += steps * steps;
  }
  SampleComplexityEstimate est;
  const auto n = static_cast<double>(trials);
  est.trials = trials;
  est.mean = sum / n;
  if (trials > 1) {
    const double var = std::max(0.0, (sum_sq - n * est.mean * est.mean) / (n - 1.0));
    est.std_error = std::sqrt(var / n);
  }
  est.useful_mass = plan.useful_mass;
  est.theoretical = 1.0 / plan.useful_mass;
  return est;
}

SampleComplexityEstimate empirical_sample_complexity(const Instance& instance, double tau, const BiasedAgent& agent,
                                                     Rng& rng, std::size_t trials) {
  return empirical_sample_complexity(instance, make_plan(instance, tau, agent.bias()), agent, rng, trials);
}

PlanCache::PlanCache(const Instance& instance, BiasFunctionPtr phi)
    : instance_(&instance), phi_(std::move(phi)), tau_max_(testable_range(instance, *phi_)) {}

const TestPlan& PlanCache::plan(double tau) {
  auto it = plans_.find(tau);
  if (it == plans_.end()) it = plans_.emplace(tau, make_plan(*instance_, tau, *phi_)).first;
  return it->second;
}

BiasInterval estimate_bias(const Instance& instance, const BiasedAgent& agent, double epsilon, Rng& rng,
                           std::size_t max_steps_per_test) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(Errc::DegenerateParameters, "epsilon must lie in (0, 1)");
  PlanCache cache(instance, agent.bias_ptr());
  BiasInterval out;
  out.tau_max = cache.tau_max();
  if (out.tau_max <= 0.0) throw Error(Errc::NothingTestable, "no threshold is testable on this instance");

  auto query = [&](double tau) {
    ++out.queries;
    return threshold_test(instance, cache.plan(tau), agent, rng, max_steps_per_test).verdict;
  };

  double lo = 0.0;
  double hi = out.tau_max;
  while (hi - lo > epsilon) {
    const double mid = 0.5 * (lo + hi);
    (query(mid) == ThresholdOutcome::GEq ? lo : hi) = mid;
  }
  // The top of the range was never confirmed from above: probe it directly.
  if (hi == out.tau_max && query(out.tau_max) == ThresholdOutcome::GEq) {
    out.lo = out.tau_max;
    out.hi = 1.0;
    out.censored = true;
    return out;
  }
  out.lo = lo;
  out.hi = hi;
  return out;
}

}  // namespace biaslab
