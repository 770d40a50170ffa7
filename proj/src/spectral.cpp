#include "adiasearch/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adiasearch/errors.hpp"

namespace adiasearch {
namespace {

// Radicands that round to slightly below zero near s = 1/2 at large N.
constexpr double kRadicandSlack = 1e-14;

double clamped_sqrt(double x) {
  if (x < 0.0 && x >= -kRadicandSlack) return 0.0;
  return std::sqrt(x);
}

void check_s_and_size(double s, double N) {
  detail::require(std::isfinite(s) && s >= 0.0 && s <= 1.0,
                  "scheduled time s must lie in [0, 1], got " + std::to_string(s));
  detail::require(std::isfinite(N) && N >= 2.0,
                  "domain size N must be >= 2, got " + std::to_string(N));
}

// 1 - 4((N-1)/N)s(1-s) rewritten as (1-2s)^2 + 4s(1-s)/N, which keeps the
// 1/N minimum representable when N exceeds 2^53.
double unchecked_gap(double s, double N) {
  const double d = 1.0 - 2.0 * s;
  return clamped_sqrt(d * d + 4.0 * s * (1.0 - s) / N);
}

}  // namespace

SearchInstance::SearchInstance(int n, double eps)
    : n_(n), size_(0.0), eps_(eps) {
  detail::require(n >= 1 && n <= kMaxQubits,
                  "qubit count must lie in [1, " + std::to_string(kMaxQubits) +
                      "], got " + std::to_string(n));
  detail::require(std::isfinite(eps) && eps > 0.0 && eps < 1.0,
                  "diabaticity must lie in (0, 1), got " + std::to_string(eps));
  size_ = domain_size(n);
}

double domain_size(int n) { return std::ldexp(1.0, n); }

double gap(double s, double N) {
  check_s_and_size(s, N);
  return unchecked_gap(s, N);
}

SpectralPoint spectral_point(double s, double N) {
  check_s_and_size(s, N);
  const double g = unchecked_gap(s, N);
  const double numerator = (2.0 * s - 1.0) + 2.0 * (1.0 - s) / N;

  // g^2 - numerator^2 = 4 (N-1)(1-s)^2 / N^2, which lets whichever of
  // 1 + c and 1 - c is small be formed without cancellation.
  const double cross = 4.0 * (N - 1.0) * (1.0 - s) * (1.0 - s) / (N * N);
  double one_plus_c;
  double one_minus_c;
  if (numerator < 0.0) {
    one_plus_c = cross / (g * (g - numerator));
    one_minus_c = 2.0 - one_plus_c;
  } else {
    one_minus_c = cross / (g * (g + numerator));
    one_plus_c = 2.0 - one_minus_c;
  }

  SpectralPoint point{};
  point.s = s;
  point.gap = g;
  point.c = numerator / g;
  point.alpha = std::sqrt(0.5 * one_plus_c);
  point.beta = std::sqrt(0.5 * one_minus_c);
  point.e0 = 0.5 * (1.0 - g);
  point.e1 = 0.5 * (1.0 + g);
  return point;
}

double transition_matrix_element(double s, double N) {
  check_s_and_size(s, N);
  return std::sqrt(N - 1.0) / (N * unchecked_gap(s, N));
}

double ideal_marked_probability(double s, double N) {
  const SpectralPoint point = spectral_point(s, N);
  return point.alpha * point.alpha;
}

double invert_ideal_probability(double q, double N) {
  detail::require(std::isfinite(N) && N >= 2.0,
                  "domain size N must be >= 2, got " + std::to_string(N));
  detail::require(std::isfinite(q) && q >= 1.0 / N && q <= 1.0,
                  "probability must lie in [1/N, 1], got " + std::to_string(q));
  if (q == 1.0) return 1.0;

  // Solving (1 + c(s)) / 2 = q for s gives
  //   s = 1 - z / (2 a (z + 2q - 1)),  z = 2 sqrt((N-1) q (1-q)),  a = (N-1)/N.
  // z + 2q - 1 stays >= 1 on [1/N, 1]. The textbook rational form has a
  // removable 0/0 at q = (1 + sqrt((N-1)/N)) / 2 and loses ~1e-8 around it.
  const double a = (N - 1.0) / N;
  const double z = 2.0 * std::sqrt((N - 1.0) * q * (1.0 - q));
  const double s = 1.0 - z / (2.0 * a * (z + 2.0 * q - 1.0));
  return std::clamp(s, 0.0, 1.0);
}

}  // namespace adiasearch
