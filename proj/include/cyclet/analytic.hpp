#pragma once

// Closed-form levels for homogeneous kinematics and potentials, the
// linear-confinement (glueball) Regge table, and critical couplings of
// finite-range wells at the E = 0 threshold.

#include <cyclet/kernel.hpp>

#include <vector>

namespace cyclet {

/// E = N C ((B+F)/B) (A B / (C F))^(F/(B+F)) (Q/N)^(B F/(B+F)) for
/// T = A p^B and W = C r^F. Requires B + F > 0; outside that range the
/// energy function has no minimum and the formula is meaningless.
double power_law_energy(double A, double B, double C, double F, int particles,
                        double q);

/// One level of the massless linear-confinement chain.
struct ReggeRow {
  double q = 0.0;
  double energy = 0.0;          ///< E = 2 sqrt(N sigma Q)
  double energy_squared = 0.0;  ///< E^2 = 4 N sigma Q, linear in Q
  double length = 0.0;          ///< L = E / (2 sigma)
};

/// The `count` lowest levels (D = 3) of H = sum |p_i| + sigma sum |r_i - r_{i+1}|.
std::vector<ReggeRow> glueball_regge_table(double sigma, int particles, int count);

/// Critical coupling of W = -g w(r) for kinematics A p^B: the smallest g
/// binding the level with quantum number Q, from the E = 0 condition.
struct CriticalCouplingResult {
  double y0 = 0.0;   ///< root of y w'(y) + B w(y) = 0; depends on B and the shape only
  double g_c = 0.0;  ///< A / (y0^B w(y0)) * (Q/N)^B
  FiniteRangeShape shape = FiniteRangeShape::Gaussian;
  double kinetic_exponent = 0.0;  ///< B
  int particles = 0;
  double q = 0.0;
};

CriticalCouplingResult critical_coupling(double A, double B, FiniteRangeShape shape,
                                         int particles, double q);

/// Ground-state critical couplings g_c(N) with Q = D cot(pi/2N), plus the
/// N -> infinity value from the analytic limit Q/N -> 2D/pi. The sequence
/// increases with N.
struct CriticalCurve {
  std::vector<std::pair<int, double>> rows;  ///< (N, g_c)
  double limit = 0.0;                        ///< g_c at N -> infinity
};

CriticalCurve ground_state_critical_curve(double A, double B, FiniteRangeShape shape,
                                          int dimension, const std::vector<int>& n_list);

}  // namespace cyclet
