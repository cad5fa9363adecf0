#pragma once

// Brute-force reference solutions for the N = 2 chain, which reduces
// exactly to one radial problem in the relative coordinate:
//
//   H_rel = 2 T(|p|) + 2 W(r)
//
// (the cyclic sum at N = 2 counts the single pair twice). Two independent
// methods are provided: Numerov integration with node-counting bisection
// (B = 2 kinematics) and variational diagonalization in an oscillator
// radial basis (any B, in particular B = 1).

#include <cyclet/kernel.hpp>

#include <vector>

namespace cyclet {

/// The reduced radial problem in the relative coordinate.
struct EffectiveRadialProblem {
  KineticSpec kinetic;   ///< per-particle kinematics T
  PotentialSpec pair;    ///< per-pair potential W
  int l = 0;             ///< orbital quantum number of the channel

  double kinetic_coefficient() const { return 2.0 * kinetic.scale(); }  ///< 2A
  double kinetic_exponent() const { return kinetic.exponent(); }        ///< B
  double potential(double r) const { return 2.0 * pair.value(r); }      ///< 2W(r)
};

EffectiveRadialProblem reduce_two_body(const KineticSpec& kin, const PotentialSpec& pot);

/// Characteristic length of the reduced problem (the well range, or the
/// quantum scale (2A / 2|C|)^(1/(F+2)) of a power-law pair).
double length_scale(const EffectiveRadialProblem& prob);

enum class OracleMethod { Numerov, BasisDiagonalization };

struct OracleResult {
  double energy = 0.0;
  OracleMethod method = OracleMethod::Numerov;
  bool converged = false;

  // Numerov metadata
  double grid_step = 0.0;
  double box_radius = 0.0;
  int refinements = 0;

  // basis metadata
  int basis_size = 0;
  double scale = 0.0;  ///< optimized variational length scale
};

/// Lowest eigenvalue in the given channel by Numerov integration on a
/// uniform mesh with node-counting bisection on E; the mesh step is
/// halved until the eigenvalue moves by less than 1e-8 * max(1, |E|).
/// Requires B = 2 kinematics (D = 3 radial reduction).
OracleResult numerov_ground_state(const EffectiveRadialProblem& prob, int l = 0);

/// Lowest eigenvalue at a fixed basis size and length scale: matrix
/// elements of 2A|p|^B in the momentum representation of the same basis,
/// of 2W(r) by mapped Gauss-Legendre quadrature.
double basis_ground_energy(const EffectiveRadialProblem& prob, int l, int basis_size,
                           double scale);

/// Variational ground value: for each basis size the energy is minimized
/// over the length scale by golden-section search, and the size grows in
/// steps of 10 until the value moves by less than 1e-6 * max(1, |E|).
/// A ground value that rises under basis growth signals quadrature
/// failure and raises ConvergenceError.
OracleResult basis_diagonalize(const EffectiveRadialProblem& prob, int l,
                               int basis_size, double scale);

/// Critical coupling of W = -g w(r/a), a = 1, for B = 2 kinematics:
/// bisection on g to rel. 1e-6 for the appearance of a negative-energy
/// ground state of the reduced problem. At E = 0 the solution is exactly
/// linear beyond the well, so the threshold is located by the sign of the
/// outgoing slope at the box edge.
double critical_coupling_scan(double A, double B, FiniteRangeShape shape);

}  // namespace cyclet
