#include "adiasearch/error_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "adiasearch/errors.hpp"
#include "adiasearch/schedules.hpp"

namespace adiasearch {
namespace {

void check_eps(double eps) {
  detail::require(std::isfinite(eps) && eps > 0.0 && eps < 1.0,
                  "diabaticity must lie in (0, 1), got " + std::to_string(eps));
}

void check_unit(double x, const char* name) {
  detail::require(std::isfinite(x) && x >= 0.0 && x <= 1.0,
                  std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
}

// Smallest overlap-compatible p for ideal probability q and squared error e2,
// i.e. the lower root of p q + (1-p)(1-q) + 2 sqrt(p q (1-p)(1-q)) = 1 - e2.
double worst_case_p(double q, double e2) {
  const double p = q + e2 * (1.0 - 2.0 * q) - 2.0 * std::sqrt(e2 * (1.0 - e2) * q * (1.0 - q));
  return std::clamp(p, 0.0, 1.0);
}

double sine_sqrt_boundary(double eps) { return 0.25 * std::numbers::pi * std::numbers::pi * eps * eps; }

}  // namespace

std::string_view to_string(ErrorModelKind kind) noexcept {
  switch (kind) {
    case ErrorModelKind::Constant: return "constant";
    case ErrorModelKind::Sqrt: return "sqrt";
    case ErrorModelKind::SineSqrt: return "sine-sqrt";
    case ErrorModelKind::ScaledSqrt: return "scaled-sqrt";
  }
  return "unknown";
}

ErrorModelKind parse_error_model_kind(std::string_view name) {
  if (name == "constant") return ErrorModelKind::Constant;
  if (name == "sqrt") return ErrorModelKind::Sqrt;
  if (name == "sine-sqrt") return ErrorModelKind::SineSqrt;
  if (name == "scaled-sqrt") return ErrorModelKind::ScaledSqrt;
  throw DomainError("unknown error model '" + std::string(name) + "'");
}

double epsilon_of_tau(ErrorModelKind kind, double tau, double eps) {
  check_unit(tau, "dimensionless time tau");
  check_eps(eps);
  switch (kind) {
    case ErrorModelKind::Constant: return eps;
    case ErrorModelKind::Sqrt: return tau <= eps * eps ? std::sqrt(tau) : eps;
    case ErrorModelKind::SineSqrt:
      return tau <= sine_sqrt_boundary(eps) ? eps * std::sin(std::sqrt(tau) / eps) : eps;
    case ErrorModelKind::ScaledSqrt: return eps * std::sqrt(tau);
  }
  throw DomainError("unknown error model");
}

double p_lower_bound_from_q(double q, double eps_val) {
  check_unit(q, "probability q");
  detail::require(std::isfinite(eps_val) && eps_val >= 0.0 && eps_val < 1.0,
                  "error value must lie in [0, 1), got " + std::to_string(eps_val));
  const double e2 = eps_val * eps_val;
  if (q <= e2) return 0.0;
  return worst_case_p(q, e2);
}

double q_upper_bound_from_p(double p, double eps_val) {
  check_unit(p, "probability p");
  detail::require(std::isfinite(eps_val) && eps_val >= 0.0 && eps_val < 1.0,
                  "error value must lie in [0, 1), got " + std::to_string(eps_val));
  const double e2 = eps_val * eps_val;
  if (p >= 1.0 - e2) return 1.0;
  const double q = p + e2 * (1.0 - 2.0 * p) + 2.0 * std::sqrt(e2 * (1.0 - e2) * p * (1.0 - p));
  return std::clamp(q, 0.0, 1.0);
}

double p_lower_bound_of_tau(ErrorModelKind kind, double tau, double eps, double N) {
  check_unit(tau, "dimensionless time tau");
  check_eps(eps);
  const double q = ideal_q_of_tau(ScheduleKind::Proposed, tau, N);
  const double eps2 = eps * eps;
  switch (kind) {
    case ErrorModelKind::Constant: {
      // q <= eps^2 has solutions only when N >= 1 / eps^2.
      if (N * eps2 >= 1.0) {
        const double zero_until = eps2 - std::sqrt(eps2 * (1.0 - eps2) / (N - 1.0));
        if (tau <= zero_until) return 0.0;
      }
      return worst_case_p(q, eps2);
    }
    case ErrorModelKind::Sqrt:
      return worst_case_p(q, tau <= eps2 ? tau : eps2);
    case ErrorModelKind::SineSqrt: {
      if (tau > sine_sqrt_boundary(eps)) return worst_case_p(q, eps2);
      const double e = eps * std::sin(std::sqrt(tau) / eps);
      return worst_case_p(q, e * e);
    }
    case ErrorModelKind::ScaledSqrt:
      return worst_case_p(q, eps2 * tau);
  }
  throw DomainError("unknown error model");
}

double linear_loose_bound(double tau, double eps) {
  check_unit(tau, "dimensionless time tau");
  check_eps(eps);
  return tau <= eps ? 0.0 : tau - eps;
}

double time_to_probability(double p, double N, double eps, ErrorModelKind kind) {
  check_eps(eps);
  detail::require(std::isfinite(N) && N >= 2.0,
                  "domain size N must be >= 2, got " + std::to_string(N));
  const double root = std::sqrt(N - 1.0);
  switch (kind) {
    case ErrorModelKind::Constant:
      detail::require(std::isfinite(p) && p >= 0.0 && p <= 1.0 - eps,
                      "probability must lie in [0, 1 - eps], got " + std::to_string(p));
      if (p <= 1.0 / N) return 0.0;
      return 2.0 * root * (1.0 + p / eps);
    case ErrorModelKind::ScaledSqrt: {
      const double ceiling = (1.0 - eps) * (1.0 - eps);
      detail::require(std::isfinite(p) && p >= 0.0 && p <= ceiling,
                      "probability must lie in [0, (1 - eps)^2], got " + std::to_string(p));
      return 2.0 * root * p / (eps * ceiling);
    }
    case ErrorModelKind::Sqrt:
    case ErrorModelKind::SineSqrt:
      throw UnsupportedModelError("no closed-form time bound for the " +
                                  std::string(to_string(kind)) + " error model");
  }
  throw DomainError("unknown error model");
}

}  // namespace adiasearch
