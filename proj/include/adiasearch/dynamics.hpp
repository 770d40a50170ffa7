#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "adiasearch/integrator.hpp"
#include "adiasearch/schedules.hpp"

namespace adiasearch {

/// Amplitude on |m> and the sum of all amplitudes. Together they determine the
/// state exactly because evolution never leaves span{|m>, |m_perp>}.
struct ReducedState {
  Complex psi_m;
  Complex psi_bar;
};

struct TrajectoryPoint {
  double tau;
  double s;
  double p;
  double eps_exact;
  double norm_residual;
};

inline constexpr int kDefaultGridPoints = 2001;
inline constexpr int kMaxFullQubits = 12;

/// Uniform grid of `points` samples over [start, end].
std::vector<double> uniform_grid(double start, double end, int points);

/// chi'(tau) = -i T M(tau) chi(tau),  M = [[1-s, -(1-s)/N], [-s, s]].
ReducedState reduced_rhs(double tau, const ReducedState& chi, ScheduleKind kind,
                         double N, double T);

/// Uniform superposition in reduced coordinates: (N^-1/2, N^1/2).
ReducedState initial_reduced_state(double N);

/// Observables of a reduced state at dimensionless time tau.
TrajectoryPoint observe(double tau, const ReducedState& chi, ScheduleKind kind,
                        double N);

/// Reduced dynamics with T = duration(kind, N, eps) on a uniform [0, 1] grid.
std::vector<TrajectoryPoint> simulate(ScheduleKind kind,
                                      const SearchInstance& instance,
                                      int grid_points = kDefaultGridPoints,
                                      const IvpConfig& cfg = {});

/// Reduced dynamics for an explicit duration on an arbitrary grid starting at
/// 0. Does not require eps < 1, so it also serves over-fast evolutions.
std::vector<TrajectoryPoint> simulate_on_grid(ScheduleKind kind, double N,
                                              double T,
                                              std::span<const double> grid,
                                              const IvpConfig& cfg = {});

/// Continue a reduced evolution from `start` at grid.front().
std::vector<ReducedState> propagate(ScheduleKind kind, double N, double T,
                                    const ReducedState& start,
                                    std::span<const double> grid,
                                    const IvpConfig& cfg = {});

/// Full 2^n-dimensional Schroedinger evolution from the uniform state. The
/// norm residual is ||psi||^2 - 1. Throws SizeError for n > kMaxFullQubits.
std::vector<TrajectoryPoint> full_simulate(int n, std::uint64_t marked,
                                           ScheduleKind kind, double eps,
                                           int grid_points = kDefaultGridPoints,
                                           const IvpConfig& cfg = {});

}  // namespace adiasearch
