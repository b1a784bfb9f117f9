#include "biaslab/geometry.hpp"

#include <algorithm>
#include <limits>

#include "biaslab/error.hpp"

namespace biaslab {

GapVector gap_vector(const Instance& instance, std::size_t action) {
  const std::size_t a0 = instance.default_action();
  if (action == a0) throw Error(Errc::DefaultActionGap, "gap vector is undefined for the default action");
  if (action >= instance.num_actions()) throw Error(Errc::UnknownLabel, "action index out of range");
  GapVector g{action, std::vector<double>(instance.num_states())};
  for (std::size_t s = 0; s < instance.num_states(); ++s) {
    g.coeffs[s] = instance.utility(a0, s) - instance.utility(action, s);
  }
  if (g.at(instance.prior()) <= kTol) {
    throw Error(Errc::NoUniqueDefault, "default action does not beat " + instance.actions()[action] + " at the prior");
  }
  return g;
}

GapVector gap_vector(const Instance& instance, std::string_view action) {
  return gap_vector(instance, instance.action_index(action));
}

std::vector<GapVector> gap_vectors(const Instance& instance) {
  std::vector<GapVector> out;
  for (std::size_t a = 0; a < instance.num_actions(); ++a) {
    if (a != instance.default_action()) out.push_back(gap_vector(instance, a));
  }
  return out;
}

double default_region_margin(const Instance& instance, const Belief& belief) {
  const std::size_t a0 = instance.default_action();
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < instance.num_actions(); ++a) {
    if (a == a0) continue;
    m = std::min(m, expected_utility(instance, a0, belief) - expected_utility(instance, a, belief));
  }
  return m;
}

double indifference_offset(const Instance& instance, std::size_t action, double tau) {
  require_threshold(tau);
  const GapVector g = gap_vector(instance, action);
  return -tau / (1.0 - tau) * g.at(instance.prior());
}

namespace {

double support_min(const Instance& instance, const GapVector& g) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t s : instance.support()) m = std::min(m, g.coeffs[s]);
  return m;
}

}  // namespace

bool translated_set_nonempty(const Instance& instance, std::size_t action, double tau) {
  const double offset = indifference_offset(instance, action, tau);
  // offset <= 0 < c_a . mu0 <= max c_a, so only the lower end can fail.
  return support_min(instance, gap_vector(instance, action)) <= offset + kTol;
}

double testable_range(const Instance& instance) {
  double tau_max = 0.0;
  for (const GapVector& g : gap_vectors(instance)) {
    const double r = std::max(0.0, -support_min(instance, g)) / g.at(instance.prior());
    tau_max = std::max(tau_max, r / (1.0 + r));
  }
  return tau_max;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::SingleSample: return "single_sample";
    case Verdict::Finite: return "finite";
    case Verdict::Untestable: return "untestable";
  }
  return "untestable";
}

Classification classify(const Instance& instance, double tau) {
  require_threshold(tau);
  Classification c;
  c.tau = tau;
  c.tau_max = testable_range(instance);
  for (std::size_t a = 0; a < instance.num_actions(); ++a) {
    if (a != instance.default_action() && translated_set_nonempty(instance, a, tau)) c.nonempty_actions.push_back(a);
  }

  std::optional<DesignResult> design;
  try {
    design = design_scheme(instance, tau);
  } catch (const Error& e) {
    if (e.code() != Errc::Untestable) throw;
  }

  if (c.nonempty_actions.empty() != !design.has_value()) {
    throw Error(Errc::InconsistentClassification,
                "LP and hyperplane tests disagree at tau = " + std::to_string(tau));
  }
  if (!design) {
    c.verdict = Verdict::Untestable;
    return c;
  }
  c.useful_mass = design->useful_mass;
  c.verdict = design->useful_mass >= 1.0 - kTol ? Verdict::SingleSample : Verdict::Finite;
  c.design = std::move(design);
  return c;
}

}  // namespace biaslab
