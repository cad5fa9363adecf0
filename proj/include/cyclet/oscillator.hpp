#pragma once

// Exact solution of the nonrelativistic cyclic chain of N identical
// harmonic oscillators. The coupling matrix M (2 on the diagonal, -1 on
// the cyclic off-diagonals) is circulant with eigenvalues
//
//   lambda_i = 4 sin^2(i pi / N),   i = 1..N,  lambda_N = 0,
//
// and is diagonalized by the symmetric involution
//
//   U_ij = (cos(2 pi i j / N) + sin(2 pi i j / N)) / sqrt(N).
//
// Energies are omega * sum_i sqrt(lambda_i) (2 n_i + l_i + D/2) over the
// N-1 internal modes; the ground-state wave function is a Gaussian in the
// particle coordinates with quadratic form Z = U Lambda^(1/2) U.

#include <cyclet/errors.hpp>

#include <Eigen/Core>

#include <cmath>
#include <vector>

namespace cyclet {

/// Mode labels of one level: N-1 radial and orbital quantum numbers in
/// D spatial dimensions.
struct QuantumNumbers {
  int particles = 2;          ///< N
  int dimension = 3;          ///< D
  std::vector<int> radial;    ///< n_i, i = 1..N-1
  std::vector<int> orbital;   ///< l_i, i = 1..N-1

  static QuantumNumbers ground(int particles, int dimension) {
    QuantumNumbers q;
    q.particles = particles;
    q.dimension = dimension;
    q.radial.assign(particles >= 2 ? particles - 1 : 0, 0);
    q.orbital = q.radial;
    q.validate();
    return q;
  }

  void validate() const {
    if (particles < 2) throw DomainError("quantum numbers require N >= 2");
    if (dimension < 1) throw DomainError("quantum numbers require D >= 1");
    auto count = static_cast<std::size_t>(particles - 1);
    if (radial.size() != count || orbital.size() != count)
      throw DomainError("quantum number lists must have N-1 entries");
    for (int v : radial)
      if (v < 0) throw DomainError("radial quantum numbers must be >= 0");
    for (int v : orbital)
      if (v < 0) throw DomainError("orbital quantum numbers must be >= 0");
  }
};

/// sin(i pi / n) with the argument reduced modulo the period first, so
/// that the i <-> n-i symmetry is exact and the value vanishes exactly
/// at multiples of n.
template <typename Scalar = double>
Scalar mode_sine(Eigen::Index i, Eigen::Index n) {
  Eigen::Index k = i % (2 * n);
  if (k < 0) k += 2 * n;
  Scalar sign = Scalar(1);
  if (k >= n) {
    k -= n;
    sign = Scalar(-1);
  }
  if (k > n - k) k = n - k;  // sin(k pi/n) = sin((n-k) pi/n), reduced form
  using std::sin;
  return sign * sin(Scalar(EIGEN_PI) * Scalar(k) / Scalar(n));
}

/// Eigenvalues [4 sin^2(i pi/N)] of the cyclic coupling matrix, i = 1..N.
template <typename Scalar = double>
Eigen::VectorX<Scalar> lambda_coefficients(Eigen::Index n) {
  if (n < 2) throw DomainError("lambda_coefficients requires N >= 2");
  Eigen::VectorX<Scalar> lambda(n);
  for (Eigen::Index i = 1; i <= n; ++i) {
    Scalar s = mode_sine<Scalar>(i, n);
    lambda[i - 1] = Scalar(4) * s * s;
  }
  return lambda;
}

/// Symmetric involutive transform to normal coordinates,
/// U_ij = (cos(2 pi i j/N) + sin(2 pi i j/N)) / sqrt(N). Row N is the
/// uniform row 1/sqrt(N), so x_N = sqrt(N) R.
template <typename Scalar = double>
Eigen::MatrixX<Scalar> transform_matrix(Eigen::Index n) {
  if (n < 2) throw DomainError("transform_matrix requires N >= 2");
  Eigen::MatrixX<Scalar> u(n, n);
  const Scalar norm = Scalar(1) / std::sqrt(Scalar(n));
  for (Eigen::Index i = 1; i <= n; ++i) {
    for (Eigen::Index j = i; j <= n; ++j) {
      Eigen::Index t = (i * j) % n;  // reduce before scaling by 2 pi / n
      using std::cos;
      using std::sin;
      Scalar angle = Scalar(2) * Scalar(EIGEN_PI) * Scalar(t) / Scalar(n);
      Scalar v = norm * (cos(angle) + sin(angle));
      u(i - 1, j - 1) = v;
      u(j - 1, i - 1) = v;
    }
  }
  return u;
}

/// Quadratic form of the ground-state Gaussian in particle coordinates,
///   Z_ij = (2/N) sin(pi/N) / (cos(2 (i-j) pi/N) - cos(pi/N)).
/// Z is circulant with zero row sums and equals U Lambda^(1/2) U.
template <typename Scalar = double>
Eigen::MatrixX<Scalar> ground_state_quadratic_form(Eigen::Index n) {
  if (n < 2) throw DomainError("ground_state_quadratic_form requires N >= 2");
  using std::cos;
  using std::sin;
  const Scalar pi = Scalar(EIGEN_PI);
  const Scalar cos_base = cos(pi / Scalar(n));
  const Scalar prefactor = Scalar(2) / Scalar(n) * sin(pi / Scalar(n));
  // one value per cyclic offset; the denominator never vanishes because
  // 2*(i-j) is even while the base angle index is odd
  std::vector<Scalar> by_offset(static_cast<std::size_t>(n));
  for (Eigen::Index d = 0; d < n; ++d) {
    Eigen::Index k = (2 * d) % (2 * n);
    if (k > 2 * n - k) k = 2 * n - k;
    Scalar c = cos(pi * Scalar(k) / Scalar(n));
    by_offset[static_cast<std::size_t>(d)] = prefactor / (c - cos_base);
  }
  Eigen::MatrixX<Scalar> z(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Eigen::Index d = (i - j) % n;
      if (d < 0) d += n;
      z(i, j) = by_offset[static_cast<std::size_t>(d)];
    }
  return z;
}

/// Size parameters of the exact eigenfunction, gamma_i = (m^2 w^2 lambda_i)^(1/4)
/// for the N-1 internal modes.
template <typename Scalar = double>
Eigen::VectorX<Scalar> size_parameters_exact(Scalar mass, Scalar omega, Eigen::Index n) {
  if (!(mass > Scalar(0)) || !(omega > Scalar(0)))
    throw DomainError("size_parameters_exact requires m > 0 and omega > 0");
  if (n < 2) throw DomainError("size_parameters_exact requires N >= 2");
  Eigen::VectorX<Scalar> gamma(n - 1);
  for (Eigen::Index i = 1; i < n; ++i) {
    Scalar s = mode_sine<Scalar>(i, n);
    using std::pow;
    gamma[i - 1] = pow(mass * mass * omega * omega * Scalar(4) * s * s, Scalar(0.25));
  }
  return gamma;
}

/// Energy omega * sum_i 2 sin(i pi/N) (2 n_i + l_i + D/2). The mass drops
/// out of the spectrum; it is validated but unused.
double oscillator_energy(double mass, double omega, const QuantumNumbers& q);

/// Ground-state energy omega * D * cot(pi / 2N).
double ground_state_energy(double mass, double omega, int particles, int dimension);

/// One distinct energy level of the cyclic oscillator spectrum.
struct Level {
  double q = 0.0;               ///< global quantum number; energy = omega * q
  long long multiplicity = 0;   ///< number of (n_i, l_i) assignments
  std::vector<int> radial;      ///< representative assignment
  std::vector<int> orbital;
};

/// The `count` lowest distinct levels, ascending in q. Assignments whose
/// q values agree within 1e-9 are merged into one level (for some N
/// distinct mode occupations coincide, e.g. at N = 6 two quanta in mode 1
/// match one quantum in mode 3). With `angular_weight` (D = 3 only) each
/// mode contributes the full (2 l + 1) angular degeneracy.
std::vector<Level> enumerate_levels(int particles, int dimension, int count,
                                    bool angular_weight = false);

}  // namespace cyclet
