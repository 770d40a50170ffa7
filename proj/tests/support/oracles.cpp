#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace oracle {

DenseSpectrum dense_spectrum(int n, double s, std::uint64_t marked) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::VectorXd phi = Eigen::VectorXd::Constant(dim, 1.0 / std::sqrt(double(dim)));
  Eigen::VectorXd m = Eigen::VectorXd::Zero(dim);
  m(static_cast<Eigen::Index>(marked)) = 1.0;

  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(dim, dim);
  const Eigen::MatrixXd h0 = identity - phi * phi.transpose();
  const Eigen::MatrixXd h1 = identity - m * m.transpose();
  const Eigen::MatrixXd h = (1.0 - s) * h0 + s * h1;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();

  DenseSpectrum out{};
  out.e0 = values(0);
  out.e1 = values(1);
  out.gap = out.e1 - out.e0;
  const Eigen::VectorXd ground = vectors.col(0);
  out.alpha = std::abs(m.dot(ground));
  out.q = out.alpha * out.alpha;

  // The E1 level may be degenerate with the bulk (eigenvalue 1) at s = 0 or 1.
  // The relevant excited state is the one inside span{|m>, |phi>}, so project
  // the span onto the E1 eigenspace and keep the larger projection.
  Eigen::VectorXd from_m = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd from_phi = Eigen::VectorXd::Zero(dim);
  for (Eigen::Index k = 1; k < dim; ++k) {
    if (std::abs(values(k) - out.e1) > 1e-9) continue;
    from_m += vectors.col(k) * vectors.col(k).dot(m);
    from_phi += vectors.col(k) * vectors.col(k).dot(phi);
  }
  Eigen::VectorXd excited = from_m.norm() >= from_phi.norm() ? from_m : from_phi;
  excited.normalize();
  out.matrix_element = std::abs(excited.dot((h1 - h0) * ground));
  return out;
}

std::complex<double> exponential(double t) { return {std::exp(t), 0.0}; }

std::complex<double> rotation(double t) { return {std::cos(t), -std::sin(t)}; }

std::complex<double> chirp(double t) {
  const double phase = 0.5 * t * t;
  return {std::cos(phase), -std::sin(phase)};
}

double schedule_derivative(adiasearch::ScheduleKind kind, double tau, double N, double h) {
  const double lo = std::max(0.0, tau - h);
  const double hi = std::min(1.0, tau + h);
  return (adiasearch::s_of_tau(kind, hi, N) - adiasearch::s_of_tau(kind, lo, N)) / (hi - lo);
}

double adiabatic_ratio(adiasearch::ScheduleKind kind, double tau, double N, double eps,
                       double h) {
  const double s = adiasearch::s_of_tau(kind, tau, N);
  const double g2 = 1.0 - 4.0 * ((N - 1.0) / N) * s * (1.0 - s);
  const double element = std::sqrt(N - 1.0) / (N * std::sqrt(g2));
  const double T = adiasearch::duration(kind, N, eps);
  return (2.0 / T) * schedule_derivative(kind, tau, N, h) * element / g2;
}

double binomial_sigma(double p, std::int64_t trials) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace oracle
