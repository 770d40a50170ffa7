#include "adiasearch/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adiasearch/errors.hpp"

namespace adiasearch {
namespace {

constexpr Complex kMinusI{0.0, -1.0};

struct Overlaps {
  Complex ground;
  Complex excited;
};

// Overlaps with the two lowest eigenstates, given <m|psi> and <m_perp|psi>.
Overlaps eigen_overlaps(const SpectralPoint& sp, Complex psi_m, Complex psi_perp) {
  return {sp.alpha * psi_m + sp.beta * psi_perp, -sp.beta * psi_m + sp.alpha * psi_perp};
}

RhsFunction reduced_system(ScheduleKind kind, double N, double T) {
  return [kind, N, T](double tau, std::span<const Complex> y, std::span<Complex> dy) {
    const ReducedState d = reduced_rhs(tau, {y[0], y[1]}, kind, N, T);
    dy[0] = d.psi_m;
    dy[1] = d.psi_bar;
  };
}

}  // namespace

std::vector<double> uniform_grid(double start, double end, int points) {
  detail::require(points >= 2, "a grid needs at least two points");
  detail::require(end > start, "grid end must exceed its start");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double span = end - start;
  for (int i = 0; i < points; ++i) grid[i] = start + span * i / (points - 1);
  grid.back() = end;
  return grid;
}

ReducedState reduced_rhs(double tau, const ReducedState& chi, ScheduleKind kind,
                         double N, double T) {
  const double s = s_of_tau(kind, tau, N);
  const Complex dm = (1.0 - s) * chi.psi_m - ((1.0 - s) / N) * chi.psi_bar;
  const Complex dbar = s * (chi.psi_bar - chi.psi_m);
  return {kMinusI * T * dm, kMinusI * T * dbar};
}

ReducedState initial_reduced_state(double N) {
  return {Complex{1.0 / std::sqrt(N), 0.0}, Complex{std::sqrt(N), 0.0}};
}

TrajectoryPoint observe(double tau, const ReducedState& chi, ScheduleKind kind, double N) {
  const double s = s_of_tau(kind, tau, N);
  const SpectralPoint sp = spectral_point(s, N);
  const Complex psi_perp = (chi.psi_bar - chi.psi_m) / std::sqrt(N - 1.0);
  const Overlaps ov = eigen_overlaps(sp, chi.psi_m, psi_perp);

  TrajectoryPoint point{};
  point.tau = tau;
  point.s = s;
  point.p = std::norm(chi.psi_m);
  point.eps_exact = std::min(1.0, std::abs(ov.excited));
  point.norm_residual = std::norm(chi.psi_m) + std::norm(psi_perp) - 1.0;
  return point;
}

std::vector<ReducedState> propagate(ScheduleKind kind, double N, double T,
                                    const ReducedState& start,
                                    std::span<const double> grid, const IvpConfig& cfg) {
  detail::require(std::isfinite(T) && T > 0.0, "duration must be positive");
  const Complex y0[2] = {start.psi_m, start.psi_bar};
  std::vector<ReducedState> states;
  states.reserve(grid.size());
  integrate(reduced_system(kind, N, T), y0, grid, cfg,
            [&](std::size_t, double, std::span<const Complex> y) {
              states.push_back({y[0], y[1]});
            });
  return states;
}

std::vector<TrajectoryPoint> simulate_on_grid(ScheduleKind kind, double N, double T,
                                              std::span<const double> grid,
                                              const IvpConfig& cfg) {
  detail::require(!grid.empty() && grid.front() == 0.0,
                  "simulation grid must start at tau = 0");
  const std::vector<ReducedState> states =
      propagate(kind, N, T, initial_reduced_state(N), grid, cfg);
  std::vector<TrajectoryPoint> points;
  points.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    points.push_back(observe(grid[i], states[i], kind, N));
  return points;
}

std::vector<TrajectoryPoint> simulate(ScheduleKind kind, const SearchInstance& instance,
                                      int grid_points, const IvpConfig& cfg) {
  const double N = instance.size();
  const double T = duration(kind, N, instance.eps());
  const std::vector<double> grid = uniform_grid(0.0, 1.0, grid_points);
  return simulate_on_grid(kind, N, T, grid, cfg);
}

std::vector<TrajectoryPoint> full_simulate(int n, std::uint64_t marked, ScheduleKind kind,
                                           double eps, int grid_points,
                                           const IvpConfig& cfg) {
  if (n > kMaxFullQubits)
    throw SizeError("full simulation is limited to n <= " + std::to_string(kMaxFullQubits) +
                    ", got " + std::to_string(n));
  detail::require(n >= 1, "qubit count must be at least 1");
  const std::uint64_t dim = std::uint64_t{1} << n;
  detail::require(marked < dim, "marked index must be below 2^n");

  const double N = static_cast<double>(dim);
  const double T = duration(kind, N, eps);
  const std::size_t m = static_cast<std::size_t>(marked);

  RhsFunction rhs = [kind, N, T, m](double tau, std::span<const Complex> y,
                                    std::span<Complex> dy) {
    const double s = s_of_tau(kind, tau, N);
    Complex sum{0.0, 0.0};
    for (const Complex& z : y) sum += z;
    const Complex shared = -((1.0 - s) / N) * sum;
    for (std::size_t j = 0; j < y.size(); ++j) dy[j] = kMinusI * T * (shared + y[j]);
    dy[m] += kMinusI * T * (-s * y[m]);
  };

  const ComplexVector y0(dim, Complex{1.0 / std::sqrt(N), 0.0});
  const std::vector<double> grid = uniform_grid(0.0, 1.0, grid_points);
  const double root = std::sqrt(N - 1.0);

  std::vector<TrajectoryPoint> points;
  points.reserve(grid.size());
  integrate(rhs, y0, grid, cfg, [&](std::size_t, double tau, std::span<const Complex> y) {
    Complex sum{0.0, 0.0};
    double norm2 = 0.0;
    for (const Complex& z : y) {
      sum += z;
      norm2 += std::norm(z);
    }
    const Complex psi_m = y[m];
    const Complex psi_perp = (sum - psi_m) / root;

    // Weight outside span{|m>, |m_perp>}; zero in exact arithmetic.
    const Complex perp_component = psi_perp / root;
    double outside = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (j != m) outside += std::norm(y[j] - perp_component);

    const double s = s_of_tau(kind, tau, N);
    const Overlaps ov = eigen_overlaps(spectral_point(s, N), psi_m, psi_perp);

    TrajectoryPoint point{};
    point.tau = tau;
    point.s = s;
    point.p = std::norm(psi_m);
    point.eps_exact = std::min(1.0, std::sqrt(std::norm(ov.excited) + outside));
    point.norm_residual = norm2 - 1.0;
    points.push_back(point);
  });
  return points;
}

}  // namespace adiasearch
