#include "adiasearch/integrator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "adiasearch/errors.hpp"

namespace adiasearch {
namespace {

// Dormand & Prince (1980) RK5(4)7M tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;

constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;

// Fifth-order weights minus embedded fourth-order weights.
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 5.0;

class DormandPrince {
 public:
  DormandPrince(const RhsFunction& rhs, std::size_t dim)
      : rhs_(rhs), y_new_(dim), stage_(dim), err_(dim) {
    for (auto& k : k_) k.resize(dim);
  }

  // First-same-as-last: k1 for the next step equals k7 of the accepted one.
  void prime(double t, std::span<const Complex> y) { rhs_(t, y, k_[0]); }

  // Attempts a step of size h from (t, y); result is left in y_new_.
  void attempt(double t, std::span<const Complex> y, double h) {
    const std::size_t n = y.size();
    auto& [k1, k2, k3, k4, k5, k6, k7] = k_;

    for (std::size_t i = 0; i < n; ++i) stage_[i] = y[i] + h * a21 * k1[i];
    rhs_(t + c2 * h, stage_, k2);
    for (std::size_t i = 0; i < n; ++i) stage_[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs_(t + c3 * h, stage_, k3);
    for (std::size_t i = 0; i < n; ++i)
      stage_[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs_(t + c4 * h, stage_, k4);
    for (std::size_t i = 0; i < n; ++i)
      stage_[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs_(t + c5 * h, stage_, k5);
    for (std::size_t i = 0; i < n; ++i)
      stage_[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                              a65 * k5[i]);
    rhs_(t + h, stage_, k6);
    for (std::size_t i = 0; i < n; ++i)
      y_new_[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] +
                              a76 * k6[i]);
    rhs_(t + h, y_new_, k7);
    for (std::size_t i = 0; i < n; ++i)
      err_[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                     e7 * k7[i]);
  }

  // Max over real and imaginary components of |err| / (atol + rtol * max|y|).
  double error_norm(std::span<const Complex> y, double atol, double rtol) const {
    double norm = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double sc_re = atol + rtol * std::max(std::abs(y[i].real()), std::abs(y_new_[i].real()));
      const double sc_im = atol + rtol * std::max(std::abs(y[i].imag()), std::abs(y_new_[i].imag()));
      norm = std::max({norm, std::abs(err_[i].real()) / sc_re, std::abs(err_[i].imag()) / sc_im});
    }
    return norm;
  }

  void accept(ComplexVector& y) {
    y.swap(y_new_);
    k_[0].swap(k_[6]);
  }

  std::span<const Complex> proposed() const { return y_new_; }

 private:
  const RhsFunction& rhs_;
  std::array<ComplexVector, 7> k_;
  ComplexVector y_new_;
  ComplexVector stage_;
  ComplexVector err_;
};

bool all_finite(std::span<const Complex> y) {
  return std::all_of(y.begin(), y.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

void check_grid(std::span<const double> grid) {
  detail::require(!grid.empty(), "integration grid must not be empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    detail::require(std::isfinite(grid[i]) && grid[i] >= 0.0 && grid[i] <= 1.0,
                    "grid points must lie in [0, 1]");
    if (i > 0) detail::require(grid[i] > grid[i - 1], "grid must be strictly increasing");
  }
}

}  // namespace

void IvpConfig::validate() const {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  detail::require(positive(atol) && atol <= 1e-3, "atol must lie in (0, 1e-3]");
  detail::require(positive(rtol) && rtol <= 1e-3, "rtol must lie in (0, 1e-3]");
  detail::require(positive(max_step), "max_step must be positive");
  detail::require(positive(initial_step), "initial_step must be positive");
  if (fixed_step) detail::require(positive(*fixed_step), "fixed_step must be positive");
}

StepStatistics integrate(const RhsFunction& rhs, std::span<const Complex> y0,
                         std::span<const double> grid, const IvpConfig& cfg,
                         const GridObserver& observer) {
  cfg.validate();
  check_grid(grid);
  detail::require(!y0.empty(), "state dimension must be at least 1");

  StepStatistics stats;
  ComplexVector y(y0.begin(), y0.end());
  double t = grid.front();
  observer(0, t, y);
  if (grid.size() == 1) return stats;

  DormandPrince stepper(rhs, y.size());
  stepper.prime(t, y);

  double h = cfg.fixed_step ? *cfg.fixed_step : std::min(cfg.initial_step, cfg.max_step);

  for (std::size_t target_index = 1; target_index < grid.size(); ++target_index) {
    const double target = grid[target_index];
    while (t < target) {
      double step = cfg.fixed_step ? *cfg.fixed_step : std::min(h, cfg.max_step);
      // Land exactly on the grid point; absorb slivers below 1% of a step.
      const bool lands = t + 1.01 * step >= target;
      if (lands) step = target - t;

      stepper.attempt(t, y, step);

      if (cfg.fixed_step) {
        if (!all_finite(stepper.proposed()))
          throw NonFiniteError("non-finite state at tau = " + std::to_string(t + step));
        t = lands ? target : t + step;
        stepper.accept(y);
        ++stats.steps_taken;
        continue;
      }

      const double err = stepper.error_norm(y, cfg.atol, cfg.rtol);
      if (!std::isfinite(err) || !all_finite(stepper.proposed())) {
        if (step * kMinFactor < kMinStep)
          throw NonFiniteError("non-finite state at tau = " + std::to_string(t + step));
        h = step * kMinFactor;
        ++stats.rejected_steps;
        continue;
      }

      if (err <= 1.0) {
        t = lands ? target : t + step;
        stepper.accept(y);
        ++stats.steps_taken;
        const double factor =
            err == 0.0 ? kMaxFactor
                       : std::clamp(kSafety * std::pow(err, -0.2), kMinFactor, kMaxFactor);
        // A grid-shortened step says nothing about the natural step size.
        h = lands ? std::max(h, step * factor) : step * factor;
      } else {
        ++stats.rejected_steps;
        h = step * std::max(kMinFactor, kSafety * std::pow(err, -0.2));
        if (h < kMinStep)
          throw StepUnderflowError("step size underflow at tau = " + std::to_string(t));
      }
    }
    observer(target_index, target, y);
  }
  return stats;
}

Trajectory integrate(const RhsFunction& rhs, std::span<const Complex> y0,
                     std::span<const double> grid, const IvpConfig& cfg) {
  Trajectory trajectory;
  trajectory.grid.assign(grid.begin(), grid.end());
  trajectory.states.reserve(grid.size());
  const StepStatistics stats =
      integrate(rhs, y0, grid, cfg, [&](std::size_t, double, std::span<const Complex> y) {
        trajectory.states.emplace_back(y.begin(), y.end());
      });
  trajectory.steps_taken = stats.steps_taken;
  trajectory.rejected_steps = stats.rejected_steps;
  return trajectory;
}

}  // namespace adiasearch
