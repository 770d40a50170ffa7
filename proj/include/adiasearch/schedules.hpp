#pragma once

#include <string>
#include <string_view>

#include "adiasearch/spectral.hpp"

namespace adiasearch {

enum class ScheduleKind { Proposed, Original, Linear };

std::string_view to_string(ScheduleKind kind) noexcept;
/// Accepts "proposed", "original", "linear"; throws DomainError otherwise.
ScheduleKind parse_schedule_kind(std::string_view name);

/// Duration T of a full evolution in Schroedinger time units.
double duration(ScheduleKind kind, double N, double eps);

struct ScheduleSpec {
  ScheduleKind kind;
  SearchInstance instance;
  double duration;

  ScheduleSpec(ScheduleKind kind, const SearchInstance& instance);
};

/// Scheduled time s as a function of dimensionless time tau = t / T.
double s_of_tau(ScheduleKind kind, double tau, double N);

/// Exact inverse of s_of_tau.
double tau_of_s(ScheduleKind kind, double s, double N);

/// Marked probability of the instantaneous ground state at dimensionless time tau.
double ideal_q_of_tau(ScheduleKind kind, double tau, double N);

/// Dimensionless time at which the ideal probability first reaches q.
double ideal_tau_of_q(ScheduleKind kind, double q, double N);

}  // namespace adiasearch
