#include "adiasearch/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>
#include <thread>

#include "adiasearch/dynamics.hpp"
#include "adiasearch/errors.hpp"
#include "adiasearch/grover.hpp"
#include "adiasearch/schedules.hpp"

namespace adiasearch {
namespace {

constexpr double kRunSnapTolerance = 1e-12;

std::int64_t waves(std::int64_t runs, const std::optional<std::int64_t>& processors) {
  if (!processors) return 1;
  return (runs + *processors - 1) / *processors;
}

}  // namespace

// ---- Protocol ---------------------------------------------------------------

ProtocolParams protocol_params(const SearchInstance& instance, double p) {
  const double eps = instance.eps();
  detail::require(std::isfinite(p) && p >= 0.0 && p <= 1.0 - eps,
                  "target probability must lie in [0, 1 - eps], got " + std::to_string(p));
  const double N = instance.size();
  const double T = 2.0 * std::sqrt(N - 1.0) / eps;
  const double t_f = p > 1.0 / N ? T * (eps + p) : 0.0;
  return ProtocolParams{instance, p, T, t_f};
}

bool BernoulliSampler::operator()(double p) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

std::int64_t BernoulliSampler::count_successes(double p, std::int64_t trials) {
  std::int64_t successes = 0;
  for (std::int64_t i = 0; i < trials; ++i) successes += (*this)(p) ? 1 : 0;
  return successes;
}

ProtocolOutcome run_protocol(const ProtocolParams& params, std::int64_t trials,
                             std::uint64_t seed, const IvpConfig& cfg) {
  detail::require(trials >= 1, "at least one trial is required");
  const double N = params.instance.size();

  double p_exact = 1.0 / N;
  if (params.t_f > 0.0) {
    const double tau_stop = std::min(1.0, params.tau_stop());
    const double grid[2] = {0.0, tau_stop};
    const auto states =
        propagate(ScheduleKind::Proposed, N, params.T, initial_reduced_state(N), grid, cfg);
    p_exact = std::norm(states.back().psi_m);
  }

  BernoulliSampler sampler(seed);
  const std::int64_t successes = sampler.count_successes(p_exact, trials);
  return ProtocolOutcome{p_exact, static_cast<double>(successes) / static_cast<double>(trials),
                         trials, seed};
}

// ---- Crossing -----------------------------------------------------------------

CrossingResult crossing_time(double N, double k, const IvpConfig& cfg,
                             const CrossingOptions& options) {
  detail::require(std::isfinite(N) && N >= 2.0, "domain size N must be >= 2");
  detail::require(options.window_end > 0.0 && options.window_end <= 1.0,
                  "crossing window must end inside (0, 1]");
  detail::require(options.scan_points >= 3, "crossing scan needs at least three points");
  detail::require(options.bracket_tolerance > 0.0, "bracket tolerance must be positive");

  const double eps = options.eps.value_or(matched_diabaticity(N, k));
  detail::require(std::isfinite(eps) && eps > 0.0, "diabaticity must be positive");
  // Proposed-schedule duration; eps may exceed 1 when matched to a fast Grover rate.
  const double T = 2.0 * std::sqrt(N - 1.0) / eps;

  const std::vector<double> grid = uniform_grid(0.0, options.window_end, options.scan_points);
  const std::vector<ReducedState> states =
      propagate(ScheduleKind::Proposed, N, T, initial_reduced_state(N), grid, cfg);

  auto difference = [N](double tau, const ReducedState& chi) {
    return grover_q_of_tau(tau, N) - std::norm(chi.psi_m);
  };

  // Sign changes from + to - strictly inside the window; tau = 0 is excluded
  // because both probabilities equal 1/N there.
  std::size_t found = 0;
  double d_prev = difference(grid[1], states[1]);
  double d_min = d_prev;
  double d_max = d_prev;
  for (std::size_t i = 2; i < grid.size(); ++i) {
    const double d = difference(grid[i], states[i]);
    if (d_prev > 0.0 && d <= 0.0) found = i;
    d_min = std::min(d_min, d);
    d_max = std::max(d_max, d);
    d_prev = d;
  }
  if (found == 0) {
    throw NoCrossingError("p_g - p_a has no +/- sign change in (0, " +
                          std::to_string(options.window_end) + "] for N = " +
                          std::to_string(N) + ", eps = " + std::to_string(eps) +
                          "; range of the difference is [" + std::to_string(d_min) + ", " +
                          std::to_string(d_max) + "]");
  }

  double lo = grid[found - 1];
  double hi = grid[found];
  ReducedState at_lo = states[found - 1];
  auto advance = [&](double to) {
    const double segment[2] = {lo, to};
    return propagate(ScheduleKind::Proposed, N, T, at_lo, segment, cfg).back();
  };

  while (hi - lo > options.bracket_tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const ReducedState at_mid = advance(mid);
    if (difference(mid, at_mid) > 0.0) {
      lo = mid;
      at_lo = at_mid;
    } else {
      hi = mid;
    }
  }

  const double tau_cross = 0.5 * (lo + hi);
  const double residual = std::abs(difference(tau_cross, advance(tau_cross)));
  return CrossingResult{eps, T, tau_cross, T * tau_cross, lo, hi, residual};
}

// ---- Bounded resources ---------------------------------------------------------

std::int64_t required_runs(double p, double alpha) {
  detail::require(std::isfinite(p) && p > 0.0 && p <= 1.0,
                  "success probability must lie in (0, 1], got " + std::to_string(p));
  detail::require(std::isfinite(alpha) && alpha > 0.0 && alpha < 1.0,
                  "failure probability must lie in (0, 1), got " + std::to_string(alpha));
  const double x = -std::log(alpha) / p;
  const double r = std::ceil(x);
  if (r > 1.0 && x - (r - 1.0) <= kRunSnapTolerance * x) return static_cast<std::int64_t>(r - 1.0);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(r));
}

CoherenceLimitedProbability max_probability_for_coherence(double t_c, double N, double eps) {
  detail::require(std::isfinite(t_c) && t_c > 0.0, "coherence time must be positive");
  detail::require(std::isfinite(N) && N >= 2.0, "domain size N must be >= 2");
  detail::require(std::isfinite(eps) && eps > 0.0 && eps < 1.0, "diabaticity must lie in (0, 1)");

  const double root = std::sqrt(N - 1.0);
  CoherenceLimitedProbability out{};
  out.advantage_threshold = 2.0 * root * (1.0 + 1.0 / (eps * N));
  out.advantage = t_c > out.advantage_threshold;
  const double raw = (t_c / (2.0 * root) - 1.0) * eps;
  out.p = out.advantage ? std::max(1.0 / N, std::min(raw, 1.0 - eps)) : 1.0 / N;
  return out;
}

void ResourceBudget::validate() const {
  detail::require(!processors || *processors >= 1, "processor count must be at least 1");
  detail::require(std::isfinite(t_c) && t_c > 0.0, "coherence time must be positive");
  detail::require(std::isfinite(alpha) && alpha > 0.0 && alpha < 1.0,
                  "failure probability must lie in (0, 1)");
  detail::require(std::isfinite(overhead) && overhead >= 0.0, "overhead must be non-negative");
}

double overall_runtime(const ResourceBudget& budget, const SearchInstance& instance) {
  budget.validate();
  const auto limited = max_probability_for_coherence(budget.t_c, instance.size(), instance.eps());
  const std::int64_t runs = required_runs(limited.p, budget.alpha);
  const double wave_count = static_cast<double>(waves(runs, budget.processors));
  // Without advantage the protocol skips evolution entirely (t_f = 0).
  if (!limited.advantage) return wave_count * budget.overhead;
  return wave_count * (budget.t_c + budget.overhead);
}

double grover_bounded_runtime(const ResourceBudget& budget, double N, double k) {
  budget.validate();
  const double p = bounded_depth_probability(budget.t_c, k, N);
  const std::int64_t runs = required_runs(p, budget.alpha);
  return static_cast<double>(waves(runs, budget.processors)) * (budget.t_c + budget.overhead);
}

unsigned worker_threads() {
  if (const char* env = std::getenv("ADIASEARCH_THREADS")) {
    const std::string_view text(env);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace adiasearch
