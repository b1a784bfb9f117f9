#include "biaslab/general_bias.hpp"

#include <cmath>
#include <sstream>

#include "biaslab/design.hpp"
#include "biaslab/error.hpp"
#include "biaslab/geometry.hpp"

namespace biaslab {

namespace {

int sign_of(double v) {
  if (v > kTol) return 1;
  if (v < -kTol) return -1;
  return 0;
}

std::string describe(const Belief& b) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? ", " : "") << b[i];
  os << ")";
  return os.str();
}

struct Crossings {
  int changes = 0;
  bool wrong_direction = false;
  bool witnessed = false;
  double w_before = 0.0;  // scan points around the offending change
  double w_after = 0.0;
};

// Counts sign changes of f over the grid {0, step, ..., 1}, ignoring values
// inside the zero band. A valid single crossing goes from - to +.
template <typename F>
Crossings scan_crossings(F&& f) {
  Crossings c;
  int last = 0;
  double last_w = 0.0;
  const int n = static_cast<int>(std::lround(1.0 / kScanStep));
  for (int k = 0; k <= n; ++k) {
    const double w = k == n ? 1.0 : k * kScanStep;
    const int s = sign_of(f(w));
    if (s == 0) continue;
    if (last != 0 && s != last) {
      ++c.changes;
      if ((c.changes > 1 || last > 0) && !c.witnessed) {
        c.w_before = last_w;
        c.w_after = w;
        c.witnessed = true;
      }
      if (last > 0) c.wrong_direction = true;
    }
    last = s;
    last_w = w;
  }
  return c;
}

// Bisection on a predicate that is false at lo and true at hi. Returns the
// endpoint whose |f| is smaller once the bracket collapses.
template <typename F>
double bisect_boundary(F&& f, double lo, double hi) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid > 0.0) {
      hi = mid;
      f_hi = f_mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  return std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
}

}  // namespace

AssumptionReport check_assumptions(const BiasFunction& phi, const Instance& instance, std::size_t probes, Rng& rng) {
  AssumptionReport report;
  const Belief& prior = instance.prior();
  const std::size_t n = instance.num_states();

  auto fail = [](AssumptionCheck& check, std::string detail, std::optional<Belief> post = std::nullopt,
                 std::optional<std::pair<double, double>> ws = std::nullopt) {
    if (!check.passed) return;
    check.passed = false;
    check.detail = std::move(detail);
    check.posterior = std::move(post);
    check.w_pair = ws;
  };

  // Evaluates phi, recording invalid output instead of propagating.
  auto eval = [&](const Belief& post, double w) -> std::optional<Belief> {
    try {
      return phi.apply(prior, post, w);
    } catch (const Error& e) {
      std::ostringstream os;
      os << "phi left the simplex at w = " << w << ": " << e.what();
      fail(report.valid_output, os.str(), post, std::make_pair(w, w));
      return std::nullopt;
    }
  };

  const int grid = static_cast<int>(std::lround(1.0 / kScanStep));
  for (int k = 0; k <= grid; ++k) {
    const double w = k == grid ? 1.0 : k * kScanStep;
    if (auto b = eval(prior, w); b && default_region_margin(instance, *b) <= 0.0) {
      std::ostringstream os;
      os << "uninformed agent leaves the default action at w = " << w;
      fail(report.default_without_information, os.str(), prior, std::make_pair(w, w));
    }
  }

  std::vector<Belief> posteriors;
  for (std::size_t s : instance.support()) posteriors.push_back(Belief::vertex(n, s));
  for (std::size_t i = 0; i < probes; ++i) posteriors.emplace_back(rng.simplex_point(n));

  for (const Belief& post : posteriors) {
    const auto at0 = eval(post, 0.0);
    const auto at1 = eval(post, 1.0);
    if (at0 && at0->distance_inf(post) > kTol) fail(report.endpoints, "phi(prior, mu, 0) != mu", post, std::make_pair(0.0, 0.0));
    if (at1 && at1->distance_inf(prior) > kTol) fail(report.endpoints, "phi(prior, mu, 1) != prior", post, std::make_pair(1.0, 1.0));

    const double start = default_region_margin(instance, post);
    bool invalid = false;
    auto margin_at = [&](double w) {
      const auto b = eval(post, w);
      if (!b) {
        invalid = true;
        return 0.0;
      }
      return default_region_margin(instance, *b);
    };

    if (start > kTol) {
      for (int k = 0; k <= grid; ++k) {
        const double w = k == grid ? 1.0 : k * kScanStep;
        if (margin_at(w) < -kTol) {
          std::ostringstream os;
          os << "interior posterior " << describe(post) << " exits the default region at w = " << w;
          fail(report.interior_stays_inside, os.str(), post, std::make_pair(0.0, w));
          break;
        }
      }
    } else if (start < -kTol) {
      const Crossings c = scan_crossings(margin_at);
      if (!invalid && (c.changes > 1 || c.wrong_direction)) {
        std::ostringstream os;
        os << "posterior " << describe(post) << " crosses the default-region boundary " << c.changes
           << " times; witness w in (" << c.w_before << ", " << c.w_after << ")";
        fail(report.single_crossing, os.str(), post, std::make_pair(c.w_before, c.w_after));
      }
    }
  }
  return report;
}

std::optional<double> crossing_level(const BiasFunction& phi, const Instance& instance, const Belief& posterior) {
  const Belief& prior = instance.prior();
  auto g = [&](double w) { return default_region_margin(instance, phi.apply(prior, posterior, w)); };
  const double g0 = g(0.0);
  if (g0 > kTol) return std::nullopt;

  const Crossings c = scan_crossings(g);
  if (c.changes > 1 || c.wrong_direction) {
    std::ostringstream os;
    os << "biased belief path crosses the default-region boundary " << c.changes << " times";
    throw Error(Errc::NotSingleCrossing, os.str());
  }
  if (g0 >= -kTol) return 0.0;
  return bisect_boundary(g, 0.0, 1.0);
}

bool generalized_membership(const BiasFunction& phi, const Instance& instance, const Belief& mu,
                            std::size_t action, double tau) {
  require_threshold(tau);
  const Belief b = phi.apply(instance.prior(), mu, tau);
  const GapVector target = gap_vector(instance, action);
  if (std::abs(target.at(b)) > kTol) return false;
  for (const GapVector& g : gap_vectors(instance)) {
    if (g.at(b) < -kTol) return false;
  }
  return true;
}

FiniteScheme construct_finite_scheme(const BiasFunction& phi, const Instance& instance, double tau) {
  require_threshold(tau);
  const Belief& prior = instance.prior();
  const std::size_t n = instance.num_states();

  std::optional<FiniteScheme> best;
  for (std::size_t state : instance.support()) {
    const Belief vertex = Belief::vertex(n, state);
    auto f = [&](double t) {
      return default_region_margin(instance, phi.apply(prior, mix(vertex, prior, t), tau));
    };
    // Negated margin: the path starts inside the region and should leave it once.
    auto outside = [&](double t) { return -f(t); };
    const double f_end = f(1.0);
    if (f_end > kTol) continue;

    const Crossings c = scan_crossings(outside);
    if (c.changes > 1 || c.wrong_direction) {
      throw Error(Errc::NotSingleCrossing,
                  "biased belief path toward " + instance.states()[state] + " crosses the boundary repeatedly");
    }

    double t = 1.0;
    if (f_end < 0.0) {
      // Bracket from the scan: last grid point still inside the region.
      double lo = 0.0;
      const int grid = static_cast<int>(std::lround(1.0 / kScanStep));
      for (int k = 0; k < grid; ++k) {
        const double s = k * kScanStep;
        if (f(s) > 0.0) lo = s;
      }
      const double hi = std::min(1.0, lo + kScanStep);
      t = bisect_boundary(outside, lo, hi);
    }

    const Belief boundary = mix(vertex, prior, t);
    const double mass = prior[state] / boundary[state];
    if (!best || mass > best->useful_mass) {
      FiniteScheme fs;
      fs.boundary_signal = state;
      fs.boundary_posterior = boundary;
      fs.useful_mass = mass;
      fs.vertex_state = state;
      fs.t = t;
      best = std::move(fs);
    }
  }
  if (!best) {
    throw Error(Errc::Untestable, "no state direction reaches the default-region boundary at tau = " +
                                      std::to_string(tau));
  }

  std::vector<double> weights(n, 0.0);
  std::vector<Belief> posteriors;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) {
    if (s == best->vertex_state) {
      weights[s] = best->useful_mass;
      posteriors.push_back(best->boundary_posterior);
      labels.push_back("boundary@" + instance.states()[s]);
    } else {
      weights[s] = prior[s] * (1.0 - best->useful_mass * (1.0 - best->t));
      posteriors.push_back(Belief::vertex(n, s));
      labels.push_back("reveal@" + instance.states()[s]);
    }
  }
  best->scheme = scheme_from_posteriors(instance, weights, posteriors, std::move(labels));
  return std::move(*best);
}

double general_testable_range(const BiasFunction& phi, const Instance& instance) {
  const Belief& prior = instance.prior();
  const std::size_t n = instance.num_states();
  auto testable = [&](double tau) {
    for (std::size_t s : instance.support()) {
      if (default_region_margin(instance, phi.apply(prior, Belief::vertex(n, s), tau)) <= kTol) return true;
    }
    return false;
  };
  double lo = 1e-12;
  double hi = 1.0;
  if (!testable(lo)) return 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (testable(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace biaslab
