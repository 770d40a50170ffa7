#include "adiasearch/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "adiasearch/errors.hpp"

namespace adiasearch {
namespace {

constexpr double kTanGuard = 1e-12;

void check_size(double N) {
  detail::require(std::isfinite(N) && N >= 2.0,
                  "domain size N must be >= 2, got " + std::to_string(N));
}

void check_unit(double x, const char* name) {
  detail::require(std::isfinite(x) && x >= 0.0 && x <= 1.0,
                  std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
}

// Probabilities computed upstream may land an ulp below 1/N.
double checked_probability(double q, double N) {
  const double lower = 1.0 / N;
  detail::require(std::isfinite(q) && q >= lower * (1.0 - 1e-12) && q <= 1.0,
                  "probability must lie in [1/N, 1], got " + std::to_string(q));
  return std::max(q, lower);
}

// Original schedule: s = 1/2 [1 + tan((2 tau - 1) a) / sqrt(N-1)], a = atan sqrt(N-1).
// For tau <= 1/2, writing (2 tau - 1) a = -(a - d) with d = 2 tau a and expanding
// tan(a - d) gives s = N tan(d) / (2 sqrt(N-1) (1 + sqrt(N-1) tan(d))), which has
// no cancellation near tau = 0.
double original_s_lower_half(double tau, double N) {
  const double root = std::sqrt(N - 1.0);
  const double a = std::atan(root);
  const double d = std::min(2.0 * tau * a, std::numbers::pi / 2.0 - kTanGuard);
  const double t = std::tan(d);
  return N * t / (2.0 * root * (1.0 + root * t));
}

// Inverse of the above on s <= 1/2, from atan(x) - atan(y) = atan((x-y)/(1+xy)).
double original_tau_lower_half(double s, double N) {
  const double root = std::sqrt(N - 1.0);
  const double a = std::atan(root);
  return std::atan(2.0 * s * root / (1.0 + (1.0 - 2.0 * s) * (N - 1.0))) / (2.0 * a);
}

// Proposed schedule on tau <= 1/2. With x = 2 tau - 1 and r^2 = 1 + 4(N-1) tau (1-tau),
// r^2 - x^2 = 4 N tau (1 - tau), so 1 + x/r = 4 N tau (1-tau) / (r (r - x)).
double proposed_s_lower_half(double tau, double N) {
  const double x = 2.0 * tau - 1.0;
  const double r = std::sqrt(1.0 + 4.0 * (N - 1.0) * tau * (1.0 - tau));
  if (x / r >= -0.5) return 0.5 * (1.0 + x / r);
  return 2.0 * N * tau * (1.0 - tau) / (r * (r - x));
}

// Same trick for the inverse: g^2 - (2s-1)^2 = 4 s (1-s) / N.
double proposed_tau_lower_half(double s, double N) {
  const double x = 2.0 * s - 1.0;
  const double g = std::sqrt(1.0 - 4.0 * ((N - 1.0) / N) * s * (1.0 - s));
  if (x / g >= -0.5) return 0.5 * (1.0 + x / g);
  return 2.0 * s * (1.0 - s) / (N * g * (g - x));
}

template <typename LowerHalf>
double antisymmetric(double x, double N, LowerHalf lower_half) {
  if (x <= 0.5) return lower_half(x, N);
  return 1.0 - lower_half(1.0 - x, N);
}

}  // namespace

std::string_view to_string(ScheduleKind kind) noexcept {
  switch (kind) {
    case ScheduleKind::Proposed: return "proposed";
    case ScheduleKind::Original: return "original";
    case ScheduleKind::Linear: return "linear";
  }
  return "unknown";
}

ScheduleKind parse_schedule_kind(std::string_view name) {
  if (name == "proposed") return ScheduleKind::Proposed;
  if (name == "original") return ScheduleKind::Original;
  if (name == "linear") return ScheduleKind::Linear;
  throw DomainError("unknown schedule '" + std::string(name) + "'");
}

double duration(ScheduleKind kind, double N, double eps) {
  check_size(N);
  detail::require(std::isfinite(eps) && eps > 0.0 && eps < 1.0,
                  "diabaticity must lie in (0, 1), got " + std::to_string(eps));
  const double root = std::sqrt(N - 1.0);
  switch (kind) {
    case ScheduleKind::Proposed: return 2.0 * root / eps;
    case ScheduleKind::Original: return (2.0 / eps) * N * std::atan(root) / root;
    case ScheduleKind::Linear: return 2.0 * N / eps;
  }
  throw DomainError("unknown schedule kind");
}

ScheduleSpec::ScheduleSpec(ScheduleKind kind_, const SearchInstance& instance_)
    : kind(kind_),
      instance(instance_),
      duration(adiasearch::duration(kind_, instance_.size(), instance_.eps())) {}

double s_of_tau(ScheduleKind kind, double tau, double N) {
  check_unit(tau, "dimensionless time tau");
  check_size(N);
  if (tau == 0.0) return 0.0;
  if (tau == 1.0) return 1.0;
  switch (kind) {
    case ScheduleKind::Proposed: return antisymmetric(tau, N, proposed_s_lower_half);
    case ScheduleKind::Original: return antisymmetric(tau, N, original_s_lower_half);
    case ScheduleKind::Linear: return tau;
  }
  throw DomainError("unknown schedule kind");
}

double tau_of_s(ScheduleKind kind, double s, double N) {
  check_unit(s, "scheduled time s");
  check_size(N);
  if (s == 0.0) return 0.0;
  if (s == 1.0) return 1.0;
  switch (kind) {
    case ScheduleKind::Proposed: return antisymmetric(s, N, proposed_tau_lower_half);
    case ScheduleKind::Original: return antisymmetric(s, N, original_tau_lower_half);
    case ScheduleKind::Linear: return s;
  }
  throw DomainError("unknown schedule kind");
}

double ideal_q_of_tau(ScheduleKind kind, double tau, double N) {
  check_unit(tau, "dimensionless time tau");
  check_size(N);
  switch (kind) {
    case ScheduleKind::Proposed:
      return (1.0 + 2.0 * (N - 1.0) * tau +
              std::sqrt(1.0 + 4.0 * (N - 1.0) * tau * (1.0 - tau))) /
             (2.0 * N);
    case ScheduleKind::Original: {
      const double c = std::cos((1.0 - tau) * std::acos(1.0 / std::sqrt(N)));
      return c * c;
    }
    case ScheduleKind::Linear: return ideal_marked_probability(tau, N);
  }
  throw DomainError("unknown schedule kind");
}

double ideal_tau_of_q(ScheduleKind kind, double q, double N) {
  check_size(N);
  q = checked_probability(q, N);
  double tau = 0.0;
  switch (kind) {
    case ScheduleKind::Proposed: {
      // q - r with r = sqrt(q(1-q)/(N-1)), rationalized so q near 1/N keeps
      // its relative accuracy: (q^2 - r^2) / (q + r).
      const double r = std::sqrt(q * (1.0 - q) / (N - 1.0));
      tau = q * (N * q - 1.0) / ((N - 1.0) * (q + r));
      break;
    }
    case ScheduleKind::Original: {
      // 1 - arccos(sqrt q) / arccos(1/sqrt N), with both arccos terms moved to
      // arcsin so the subtraction near q = 1/N does not cancel.
      const double theta = std::asin(1.0 / std::sqrt(N));
      tau = (std::asin(std::sqrt(q)) - theta) / (0.5 * std::numbers::pi - theta);
      break;
    }
    case ScheduleKind::Linear:
      tau = tau_of_s(ScheduleKind::Linear, invert_ideal_probability(q, N), N);
      break;
  }
  return std::clamp(tau, 0.0, 1.0);
}

}  // namespace adiasearch
