#pragma once

// Closed-form spectrum of the interpolating search Hamiltonian
//   H(s) = (1 - s)(I - |phi><phi|) + s(I - |m><m|),
// restricted to the two lowest levels, which live in span{|m>, |m_perp>}.

namespace adiasearch {

/// Largest supported qubit count; keeps N - 1 meaningful in double precision.
inline constexpr int kMaxQubits = 60;

/// Problem size and diabaticity shared by every computation.
class SearchInstance {
 public:
  /// Throws DomainError unless 1 <= n <= kMaxQubits and 0 < eps < 1.
  SearchInstance(int n, double eps);

  int qubits() const noexcept { return n_; }
  double size() const noexcept { return size_; }
  double eps() const noexcept { return eps_; }

 private:
  int n_;
  double size_;
  double eps_;
};

/// 2^n as a double; exact for n <= 1023.
double domain_size(int n);

struct SpectralPoint {
  double s;
  double gap;
  double c;
  double alpha;  ///< amplitude of |m> in the ground state
  double beta;   ///< amplitude of |m_perp> in the ground state
  double e0;
  double e1;
};

double gap(double s, double N);
SpectralPoint spectral_point(double s, double N);

/// |<e1(s)| H1 - H0 |e0(s)>| = sqrt(N - 1) / (N g(s)).
double transition_matrix_element(double s, double N);

/// Marked-state probability q = alpha(s)^2 of the instantaneous ground state.
double ideal_marked_probability(double s, double N);

/// Scheduled time s at which the ground state reaches marked probability q.
double invert_ideal_probability(double q, double N);

}  // namespace adiasearch
