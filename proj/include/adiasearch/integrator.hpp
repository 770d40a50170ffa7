#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace adiasearch {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

struct IvpConfig {
  double atol = 1e-12;
  double rtol = 1e-12;
  double max_step = 0.01;
  double initial_step = 1e-6;
  /// When set, disables error control and takes steps of exactly this size
  /// (shortened only to land on grid points).
  std::optional<double> fixed_step;

  /// Throws DomainError if any field is out of range.
  void validate() const;
};

/// dy = f(t, y). The derivative span has the same length as the state.
using RhsFunction =
    std::function<void(double, std::span<const Complex>, std::span<Complex>)>;

/// Called once per grid point, including the initial one.
using GridObserver =
    std::function<void(std::size_t, double, std::span<const Complex>)>;

struct Trajectory {
  std::vector<double> grid;
  std::vector<ComplexVector> states;
  std::int64_t steps_taken = 0;
  std::int64_t rejected_steps = 0;
};

struct StepStatistics {
  std::int64_t steps_taken = 0;
  std::int64_t rejected_steps = 0;
};

/// Minimum step before the integrator gives up.
inline constexpr double kMinStep = 1e-15;

/// Dormand-Prince 5(4) with FSAL and an elementary step controller. Steps are
/// shortened so that every grid point is hit exactly. The grid must be
/// strictly increasing inside [0, 1]; integration starts at grid[0].
///
/// The local error of each accepted step satisfies, for every real and
/// imaginary component i, |err_i| <= atol + rtol * max(|y_i|, |y_new_i|).
StepStatistics integrate(const RhsFunction& rhs, std::span<const Complex> y0,
                         std::span<const double> grid, const IvpConfig& cfg,
                         const GridObserver& observer);

Trajectory integrate(const RhsFunction& rhs, std::span<const Complex> y0,
                     std::span<const double> grid, const IvpConfig& cfg = {});

}  // namespace adiasearch
