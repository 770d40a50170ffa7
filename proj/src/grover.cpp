#include "adiasearch/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "adiasearch/errors.hpp"

namespace adiasearch {
namespace {

void check_size(double N) {
  detail::require(std::isfinite(N) && N >= 2.0,
                  "domain size N must be >= 2, got " + std::to_string(N));
}

// arccsc(sqrt(N)) = arcsin(1 / sqrt(N)): the Grover rotation half-angle.
double grover_angle(double N) { return std::asin(1.0 / std::sqrt(N)); }

// cos^2[(1 - f) arccos(1/sqrt(N))] written as sin^2[f pi/2 + (1 - f) theta],
// which keeps full relative accuracy near the 1/N floor.
double rotated_probability(double fraction, double N) {
  const double a = std::sin(fraction * (0.5 * std::numbers::pi) + (1.0 - fraction) * grover_angle(N));
  return a * a;
}

}  // namespace

double grover_q_of_steps(double t, double N) {
  check_size(N);
  detail::require(std::isfinite(t) && t >= 0.0, "iteration count must be non-negative");
  const double a = std::sin((2.0 * t + 1.0) * grover_angle(N));
  return a * a;
}

double grover_duration(double N) {
  check_size(N);
  return std::numbers::pi / (4.0 * grover_angle(N)) - 0.5;
}

double grover_q_of_tau(double tau, double N) {
  check_size(N);
  detail::require(std::isfinite(tau) && tau >= 0.0 && tau <= 1.0,
                  "dimensionless time tau must lie in [0, 1]");
  return rotated_probability(tau, N);
}

double grover_tau_of_q(double q, double N) {
  check_size(N);
  detail::require(std::isfinite(q) && q >= (1.0 / N) * (1.0 - 1e-12) && q <= 1.0,
                  "probability must lie in [1/N, 1], got " + std::to_string(q));
  // 1 - arccos(sqrt q) / arccos(1/sqrt N) without cancellation near q = 1/N.
  const double theta = grover_angle(N);
  const double tau = (std::asin(std::sqrt(q)) - theta) / (0.5 * std::numbers::pi - theta);
  return std::clamp(tau, 0.0, 1.0);
}

double matched_diabaticity(double N, double k) { return matched_diabaticity(N, N, k); }

double matched_diabaticity(double N_a, double N_g, double k) {
  check_size(N_a);
  check_size(N_g);
  detail::require(std::isfinite(k) && k > 0.0, "iteration rate k must be positive");
  return 8.0 * k * std::sqrt(N_a - 1.0) / (std::numbers::pi / grover_angle(N_g) - 2.0);
}

double bounded_depth_probability(double t_c, double k, double N) {
  check_size(N);
  detail::require(std::isfinite(t_c) && t_c >= 0.0, "coherence time must be non-negative");
  detail::require(std::isfinite(k) && k > 0.0, "iteration rate k must be positive");
  // Fraction of the full Grover depth reachable within k * t_c iterations.
  const double fraction =
      std::min(1.0, 2.0 * k * t_c / (std::numbers::pi / (2.0 * grover_angle(N)) - 1.0));
  return rotated_probability(fraction, N);
}

}  // namespace adiasearch
