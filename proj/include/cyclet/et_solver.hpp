#pragma once

// Envelope-theory solver for the cyclic chain with arbitrary kinematics:
// given the global quantum number Q, find r0 > 0 with
//
//   p0 T'(p0) = r0 W'(r0),   p0 = Q / (N r0),
//
// and report E = N (T(p0) + W(r0)) together with the mean observables,
// the size parameters of the approximate eigenfunction, and the
// variational character of the level.

#include <cyclet/kernel.hpp>
#include <cyclet/oscillator.hpp>

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace cyclet {

/// One root of the reduced transcendental equation.
struct RootInfo {
  double r0 = 0.0;
  double energy = 0.0;
};

/// A solved level.
struct ETSolution {
  double energy = 0.0;        ///< E
  double p0 = 0.0;            ///< mean momentum per particle
  double r0 = 0.0;            ///< mean distance between neighbours
  double total_length = 0.0;  ///< L = N r0
  double q = 0.0;             ///< global quantum number of the level
  Eigen::VectorXd gamma;      ///< N-1 size parameters
  VariationalCharacter character = VariationalCharacter::Indeterminate;
  double residual_virial = 0.0;   ///< |p0 T'(p0) - r0 W'(r0)|
  double residual_product = 0.0;  ///< |r0 p0 - Q/N|
  std::vector<RootInfo> all_roots;  ///< every root found; min-E root is physical
};

/// Q = 2 sum_i sin(i pi/N) (2 n_i + l_i + D/2).
double global_quantum_number(const QuantumNumbers& q);

/// Ground-state value D cot(pi / 2N); grows like 2ND/pi at large N.
double ground_state_q(int particles, int dimension);

/// Solve the level with global quantum number Q for N particles.
/// Throws NoBoundState when no root exists (or, for finite-range wells,
/// when the physical root has E >= 0) and ConvergenceError when a bracket
/// cannot be refined to tolerance.
ETSolution solve(const KineticSpec& kin, const PotentialSpec& pot, int particles,
                 double q);

/// Size parameters gamma_i = sqrt((2Q/N) sin(i pi/N)) / r0 of a solution.
Eigen::VectorXd size_parameters(const ETSolution& sol, int particles);

/// Ground-state E/N for N = 2..n_max; the sequence converges because
/// Q/N approaches 2D/pi.
std::vector<std::pair<int, double>> asymptotic_scaling_check(const KineticSpec& kin,
                                                             const PotentialSpec& pot,
                                                             int dimension, int n_max);

}  // namespace cyclet
