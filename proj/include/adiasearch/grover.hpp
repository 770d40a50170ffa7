#pragma once

namespace adiasearch {

struct GroverParams {
  double N;
  double k = 1.0;  ///< Grover iterations per Schroedinger time unit
};

/// Marked probability after t Grover iterations.
double grover_q_of_steps(double t, double N);

/// Iteration count at which the marked probability first reaches 1.
double grover_duration(double N);

double grover_q_of_tau(double tau, double N);
double grover_tau_of_q(double q, double N);

/// Diabaticity that gives the proposed adiabatic schedule the same duration
/// as Grover's algorithm at k iterations per time unit.
double matched_diabaticity(double N, double k);

/// Two-domain variant: adiabatic domain N_a, Grover domain N_g.
double matched_diabaticity(double N_a, double N_g, double k);

/// Marked probability of Grover's algorithm truncated at k * t_c iterations.
double bounded_depth_probability(double t_c, double k, double N);

}  // namespace adiasearch
