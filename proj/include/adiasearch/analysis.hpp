#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "adiasearch/integrator.hpp"
#include "adiasearch/spectral.hpp"

namespace adiasearch {

// ---- Truncated-evolution protocol -----------------------------------------

struct ProtocolParams {
  SearchInstance instance;
  double p;    ///< target success probability
  double T;    ///< full duration 2 sqrt(N-1) / eps
  double t_f;  ///< cutoff time; 0 when p <= 1/N

  double tau_stop() const noexcept { return t_f / T; }
};

/// Throws DomainError unless 0 <= p <= 1 - eps.
ProtocolParams protocol_params(const SearchInstance& instance, double p);

struct ProtocolOutcome {
  double p_exact;              ///< |psi_m(t_f)|^2 from the reduced dynamics
  double empirical_frequency;  ///< fraction of successful measurements
  std::int64_t trials;
  std::uint64_t seed;
};

/// Evolves once to t_f under the proposed schedule, then draws `trials`
/// measurement outcomes with a seeded generator.
ProtocolOutcome run_protocol(const ProtocolParams& params, std::int64_t trials,
                             std::uint64_t seed, const IvpConfig& cfg = {});

/// Seeded Bernoulli sampler. The engine output is fixed by the standard and
/// the uniform variate is built from its top 53 bits, so results are
/// bit-reproducible across platforms.
class BernoulliSampler {
 public:
  explicit BernoulliSampler(std::uint64_t seed) : engine_(seed) {}
  bool operator()(double p);
  std::int64_t count_successes(double p, std::int64_t trials);

 private:
  std::mt19937_64 engine_;
};

// ---- Crossing with Grover's algorithm -------------------------------------

struct CrossingOptions {
  /// Diabaticity to use instead of matched_diabaticity(N, k).
  std::optional<double> eps;
  double window_end = 0.3;
  int scan_points = 4001;
  double bracket_tolerance = 1e-12;
};

struct CrossingResult {
  double eps_used;
  double T;
  double tau_cross;
  double t_cross;
  double lo;
  double hi;
  double residual;
};

/// Largest tau in (0, window_end] where p_g - p_a changes sign from + to -,
/// refined by bisection. Throws NoCrossingError if there is none.
CrossingResult crossing_time(double N, double k, const IvpConfig& cfg = {},
                             const CrossingOptions& options = {});

// ---- Bounded resources ----------------------------------------------------

/// ceil(-ln(alpha) / p). Ratios within 1e-12 (relative) above an integer are
/// snapped down so that exact hand values survive rounding of ln.
std::int64_t required_runs(double p, double alpha);

struct CoherenceLimitedProbability {
  double p;                     ///< clamped to [1/N, 1 - eps]
  double advantage_threshold;   ///< 2 sqrt(N-1) (1 + 1/(eps N))
  bool advantage;               ///< t_c strictly above the threshold
};

CoherenceLimitedProbability max_probability_for_coherence(double t_c, double N,
                                                          double eps);

struct ResourceBudget {
  /// Parallel processors; nullopt means unbounded.
  std::optional<std::int64_t> processors;
  double t_c;
  double alpha;
  double overhead = 0.0;

  void validate() const;
};

double overall_runtime(const ResourceBudget& budget, const SearchInstance& instance);
double grover_bounded_runtime(const ResourceBudget& budget, double N, double k);

// ---- Threading ------------------------------------------------------------

/// Worker count: ADIASEARCH_THREADS if set and positive, else hardware
/// concurrency (at least 1).
unsigned worker_threads();

}  // namespace adiasearch
