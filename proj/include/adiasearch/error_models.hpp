#pragma once

#include <string_view>

namespace adiasearch {

/// Conjectured shapes of the error function eps(tau), weakest first.
enum class ErrorModelKind { Constant, Sqrt, SineSqrt, ScaledSqrt };

std::string_view to_string(ErrorModelKind kind) noexcept;
ErrorModelKind parse_error_model_kind(std::string_view name);

/// Value of the error function at dimensionless time tau for diabaticity eps.
double epsilon_of_tau(ErrorModelKind kind, double tau, double eps);

/// Worst-case physical probability p given ideal probability q and error e.
double p_lower_bound_from_q(double q, double eps_val);

/// Largest ideal probability q compatible with physical probability p and error e.
double q_upper_bound_from_p(double p, double eps_val);

/// Lower bound on p at tau under the proposed schedule and the given error model.
double p_lower_bound_of_tau(ErrorModelKind kind, double tau, double eps, double N);

/// N-independent linear bound for the constant error model: max(0, tau - eps).
double linear_loose_bound(double tau, double eps);

/// Physical time sufficient to reach probability p. Only Constant and
/// ScaledSqrt have closed forms; other kinds throw UnsupportedModelError.
double time_to_probability(double p, double N, double eps, ErrorModelKind kind);

}  // namespace adiasearch
