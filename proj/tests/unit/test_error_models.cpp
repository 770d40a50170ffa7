#include <cmath>
#include <numbers>

#include "adiasearch/error_models.hpp"
#include "adiasearch/errors.hpp"
#include "adiasearch/schedules.hpp"
#include "doctest.h"

using namespace adiasearch;
using doctest::Approx;

namespace {
constexpr ErrorModelKind kAllModels[] = {ErrorModelKind::Constant, ErrorModelKind::Sqrt,
                                         ErrorModelKind::SineSqrt, ErrorModelKind::ScaledSqrt};
}

TEST_CASE("error model names round trip") {
  for (auto kind : kAllModels) CHECK(parse_error_model_kind(to_string(kind)) == kind);
  CHECK_THROWS_AS(parse_error_model_kind("cubic"), DomainError);
}

TEST_CASE("epsilon_of_tau examples") {
  for (double tau : {0.0, 0.3, 1.0}) CHECK(epsilon_of_tau(ErrorModelKind::Constant, tau, 0.02) == 0.02);
  const double eps = 0.1;
  const double boundary = std::numbers::pi * std::numbers::pi / 4.0 * eps * eps;
  CHECK(epsilon_of_tau(ErrorModelKind::SineSqrt, boundary, eps) == Approx(eps).epsilon(1e-15));
  CHECK(epsilon_of_tau(ErrorModelKind::SineSqrt, 0.5, eps) == eps);
  CHECK(epsilon_of_tau(ErrorModelKind::Sqrt, 0.01, 0.5) == Approx(0.1).epsilon(1e-15));
  CHECK(epsilon_of_tau(ErrorModelKind::Sqrt, 0.5, 0.5) == 0.5);
  CHECK(epsilon_of_tau(ErrorModelKind::ScaledSqrt, 0.25, 0.5) == Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(epsilon_of_tau(ErrorModelKind::Sqrt, 1.5, 0.5), DomainError);
  CHECK_THROWS_AS(epsilon_of_tau(ErrorModelKind::Sqrt, 0.5, 1.0), DomainError);
}

TEST_CASE("models are ordered from weakest to strongest") {
  for (double eps : {0.02, 0.1, 0.5}) {
    for (int i = 0; i <= 1000; ++i) {
      const double tau = eps * eps * i / 1000.0;
      const double constant = epsilon_of_tau(ErrorModelKind::Constant, tau, eps);
      const double sqrt_model = epsilon_of_tau(ErrorModelKind::Sqrt, tau, eps);
      const double sine = epsilon_of_tau(ErrorModelKind::SineSqrt, tau, eps);
      const double scaled = epsilon_of_tau(ErrorModelKind::ScaledSqrt, tau, eps);
      CHECK(constant >= sqrt_model);
      CHECK(sqrt_model >= sine);
      CHECK(sine >= scaled);
      CHECK(scaled >= 0.0);
    }
  }
}

TEST_CASE("probability bounds from q and p") {
  const double e = 0.1;
  CHECK(p_lower_bound_from_q(1.0, e) == Approx(1.0 - e * e).epsilon(1e-15));
  CHECK(p_lower_bound_from_q(e * e, e) == 0.0);
  CHECK(p_lower_bound_from_q(0.001, e) == 0.0);
  CHECK(p_lower_bound_from_q(0.5, 0.0) == 0.5);

  CHECK(q_upper_bound_from_p(1.0 - e * e, e) == 1.0);
  CHECK(q_upper_bound_from_p(0.995, e) == 1.0);
  CHECK(q_upper_bound_from_p(0.0, 0.5) == Approx(0.25).epsilon(1e-15));
  CHECK(q_upper_bound_from_p(0.5, 0.0) == 0.5);

  CHECK_THROWS_AS(p_lower_bound_from_q(1.1, 0.1), DomainError);
  CHECK_THROWS_AS(q_upper_bound_from_p(0.5, 1.0), DomainError);
}

TEST_CASE("bound properties on a grid") {
  for (int i = 0; i <= 200; ++i) {
    const double q = i / 200.0;
    CHECK(p_lower_bound_from_q(q, 0.0) == Approx(q).epsilon(1e-15));
    for (double e : {0.01, 0.1, 0.3, 0.7, 0.99}) {
      const double p = p_lower_bound_from_q(q, e);
      CHECK(p <= q + 1e-15);
      CHECK(p >= 0.0);
      CHECK(p_lower_bound_from_q(q_upper_bound_from_p(q, e), e) <= q + 1e-12);
    }
  }
}

TEST_CASE("p_lower_bound_of_tau examples and floors") {
  CHECK(p_lower_bound_of_tau(ErrorModelKind::Constant, 0.0, 0.5, 16.0) == 0.0);
  for (auto kind : kAllModels) {
    CHECK(p_lower_bound_of_tau(kind, 1.0, 0.02, 1024.0) >= 1.0 - 0.0004 - 1e-12);
  }
  for (int n : {4, 10, 20}) {
    const double N = std::ldexp(1.0, n);
    for (double eps : {0.02, 0.1, 0.5}) {
      for (int i = 0; i <= 1000; ++i) {
        const double tau = i / 1000.0;
        const double q = ideal_q_of_tau(ScheduleKind::Proposed, tau, N);
        CHECK(p_lower_bound_of_tau(ErrorModelKind::ScaledSqrt, tau, eps, N) >=
              (1.0 - eps) * (1.0 - eps) * q - 1e-12);
        CHECK(p_lower_bound_of_tau(ErrorModelKind::SineSqrt, tau, eps, N) >= 1.0 / (4.0 * N) - 1e-12);
        for (auto kind : kAllModels) {
          const double p = p_lower_bound_of_tau(kind, tau, eps, N);
          CHECK(p >= 0.0);
          CHECK(p <= 1.0);
        }
      }
    }
  }
}

TEST_CASE("constant model zero region") {
  // With N >= 1/eps^2 the bound vanishes up to eps^2 - sqrt(eps^2 (1 - eps^2) / (N - 1)).
  const double eps = 0.1;
  const double N = 1024.0;
  const double edge = eps * eps - std::sqrt(eps * eps * (1.0 - eps * eps) / (N - 1.0));
  CHECK(p_lower_bound_of_tau(ErrorModelKind::Constant, 0.999 * edge, eps, N) == 0.0);
  CHECK(p_lower_bound_of_tau(ErrorModelKind::Constant, 0.5, eps, N) > 0.0);
}

TEST_CASE("linear loose bound") {
  CHECK(linear_loose_bound(0.3, 0.3) == 0.0);
  CHECK(linear_loose_bound(1.0, 0.02) == Approx(0.98).epsilon(1e-15));
  CHECK(linear_loose_bound(0.5, 0.5) == 0.0);
  CHECK(linear_loose_bound(0.1, 0.5) == 0.0);
  for (int n : {4, 8, 12, 20}) {
    const double N = std::ldexp(1.0, n);
    for (double eps : {0.05, 0.1, 0.5}) {
      if (N * eps * eps < 1.0) continue;
      for (int i = 0; i <= 1000; ++i) {
        const double tau = i / 1000.0;
        CHECK(linear_loose_bound(tau, eps) <=
              p_lower_bound_of_tau(ErrorModelKind::Constant, tau, eps, N) + 1e-12);
      }
    }
  }
}

TEST_CASE("time to probability") {
  CHECK(time_to_probability(1.0 / 64.0, 64.0, 0.1, ErrorModelKind::Constant) == 0.0);
  // p = 1/N sits on the zero branch, so the closed form is checked at N = 4.
  CHECK(time_to_probability(0.5, 2.0, 0.5, ErrorModelKind::Constant) == 0.0);
  CHECK(time_to_probability(0.5, 4.0, 0.5, ErrorModelKind::Constant) ==
        Approx(4.0 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(time_to_probability(0.3, 64.0, 0.1, ErrorModelKind::Constant) ==
        Approx(duration(ScheduleKind::Proposed, 64.0, 0.1) * (0.1 + 0.3)).epsilon(1e-14));
  CHECK(time_to_probability(0.25, 2.0, 0.5, ErrorModelKind::ScaledSqrt) == Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(time_to_probability(0.3, 16.0, 0.1, ErrorModelKind::Sqrt), UnsupportedModelError);
  CHECK_THROWS_AS(time_to_probability(0.3, 16.0, 0.1, ErrorModelKind::SineSqrt), UnsupportedModelError);
  CHECK_THROWS_AS(time_to_probability(0.95, 16.0, 0.1, ErrorModelKind::Constant), DomainError);
  CHECK_THROWS_AS(time_to_probability(0.85, 16.0, 0.1, ErrorModelKind::ScaledSqrt), DomainError);
}
