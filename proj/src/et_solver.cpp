#include <cyclet/et_solver.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace cyclet {

double global_quantum_number(const QuantumNumbers& q) {
  q.validate();
  const int n = q.particles;
  double sum = 0.0;
  for (int i = 1; i < n; ++i)
    sum += mode_sine(i, n) * (2.0 * q.radial[i - 1] + q.orbital[i - 1] + 0.5 * q.dimension);
  return 2.0 * sum;
}

double ground_state_q(int particles, int dimension) {
  if (particles < 2) throw DomainError("ground_state_q requires N >= 2");
  if (dimension < 1) throw DomainError("ground_state_q requires D >= 1");
  return dimension / std::tan(EIGEN_PI / (2.0 * particles));
}

namespace {

struct VirialGap {
  const KineticSpec& kin;
  const PotentialSpec& pot;
  double q_over_n;

  // p0 T'(p0) - r W'(r) with p0 = (Q/N) / r
  double operator()(double r) const {
    double p = q_over_n / r;
    return p * kin.derivative(p) - r * pot.derivative(r);
  }
};

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

constexpr double kRelTol = 1e-13;
constexpr int kMaxBisect = 200;

double bisect(const VirialGap& f, double lo, double hi, double flo) {
  for (int it = 0; it < kMaxBisect; ++it) {
    if (hi - lo <= kRelTol * lo) return 0.5 * (lo + hi);
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if (sign_of(fm) == sign_of(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError("virial root bracket did not reach tolerance");
}

double level_energy(const KineticSpec& kin, const PotentialSpec& pot, int n,
                    double q_over_n, double r) {
  return n * (kin.value(q_over_n / r) + pot.value(r));
}

}  // namespace

ETSolution solve(const KineticSpec& kin, const PotentialSpec& pot, int particles,
                 double q) {
  if (particles < 2) throw DomainError("solve requires N >= 2");
  if (!(q > 0.0)) throw DomainError("solve requires Q > 0");

  const int n = particles;
  const double q_over_n = q / n;
  VirialGap gap{kin, pot, q_over_n};

  std::vector<RootInfo> roots;

  if (pot.form() == PotentialForm::PowerLaw) {
    // r^B * gap(r) is linear in r^(B+F), so the gap has at most one sign
    // change: bracket it by two-sided geometric expansion from the natural
    // length scale and bisect.
    double bf = kin.exponent() + pot.exponent();
    double scale = std::fabs(bf) > 1e-12
                       ? std::pow(kin.scale() / std::fabs(pot.power_scale()), 1.0 / bf)
                       : 1.0;
    double lo = scale, hi = scale;
    double flo = gap(scale), fhi = flo;
    bool bracketed = (flo == 0.0);
    if (!bracketed) {
      for (int it = 0; it < 64; ++it) {
        lo *= 0.25;
        hi *= 4.0;
        flo = gap(lo);
        fhi = gap(hi);
        if (sign_of(flo) != sign_of(fhi)) {
          bracketed = true;
          break;
        }
      }
    }
    if (!bracketed) {
      double best = std::numeric_limits<double>::infinity();
      for (int k = 0; k <= 64; ++k) {
        double r = lo * std::pow(hi / lo, k / 64.0);
        best = std::min(best, level_energy(kin, pot, n, q_over_n, r));
      }
      throw NoBoundState("no virial root for the power-law pair", best);
    }
    double r0 = (flo == 0.0) ? lo : bisect(gap, lo, hi, flo);
    roots.push_back({r0, level_energy(kin, pot, n, q_over_n, r0)});
  } else {
    // Finite-range wells make r W'(r) non-monotone; scan 256 log-uniform
    // points across [1e-8, 1e8] ranges for sign changes and refine each.
    const int points = 256;
    const double scale = pot.range();
    const double ratio = std::pow(1e16, 1.0 / (points - 1));
    double best = std::numeric_limits<double>::infinity();
    double r_prev = 1e-8 * scale;
    double f_prev = gap(r_prev);
    best = std::min(best, level_energy(kin, pot, n, q_over_n, r_prev));
    for (int k = 1; k < points; ++k) {
      double r = r_prev * ratio;
      double f = gap(r);
      best = std::min(best, level_energy(kin, pot, n, q_over_n, r));
      if (f_prev == 0.0) {
        roots.push_back({r_prev, level_energy(kin, pot, n, q_over_n, r_prev)});
      } else if (f != 0.0 && sign_of(f) != sign_of(f_prev)) {
        double r0 = bisect(gap, r_prev, r, f_prev);
        roots.push_back({r0, level_energy(kin, pot, n, q_over_n, r0)});
      }
      r_prev = r;
      f_prev = f;
    }
    if (f_prev == 0.0)
      roots.push_back({r_prev, level_energy(kin, pot, n, q_over_n, r_prev)});
    if (roots.empty())
      throw NoBoundState("finite-range attraction too weak: no virial root", best);
  }

  std::size_t physical = 0;
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (roots[i].energy < roots[physical].energy) physical = i;
  if (pot.form() == PotentialForm::FiniteRange && roots[physical].energy >= 0.0)
    throw NoBoundState("finite-range level is not bound (E >= 0)",
                       roots[physical].energy);

  ETSolution sol;
  sol.q = q;
  sol.r0 = roots[physical].r0;
  sol.energy = roots[physical].energy;
  sol.p0 = q_over_n / sol.r0;
  sol.total_length = n * sol.r0;
  sol.character = variational_character(kin, pot);
  sol.all_roots = std::move(roots);
  sol.residual_virial = std::fabs(gap(sol.r0));
  sol.residual_product = std::fabs(sol.r0 * sol.p0 - q_over_n);

  // size parameters over the half range, mirrored so gamma_i = gamma_{N-i}
  // holds exactly
  sol.gamma.resize(n - 1);
  const double s1 = std::sin(EIGEN_PI / n);
  const double c2 = 2.0 * std::cos(EIGEN_PI / n);
  double s_prev = 0.0, s = s1;
  for (int i = 1; i <= n / 2; ++i) {
    double g = std::sqrt(2.0 * q_over_n * s) / sol.r0;
    sol.gamma[i - 1] = g;
    if (i != n - i) sol.gamma[n - i - 1] = g;
    double s_next = c2 * s - s_prev;
    s_prev = s;
    s = s_next;
  }

  if (sol.residual_virial > 1e-9 * std::max(std::fabs(sol.energy) / n, 1.0) ||
      sol.residual_product > 1e-12 * q_over_n)
    throw ConvergenceError("solved level violates its residual bounds");
  return sol;
}

Eigen::VectorXd size_parameters(const ETSolution& sol, int particles) {
  const int n = particles;
  Eigen::VectorXd gamma(n - 1);
  for (int i = 1; i < n; ++i)
    gamma[i - 1] = std::sqrt(2.0 * (sol.q / n) * mode_sine(i, n)) / sol.r0;
  return gamma;
}

std::vector<std::pair<int, double>> asymptotic_scaling_check(const KineticSpec& kin,
                                                             const PotentialSpec& pot,
                                                             int dimension, int n_max) {
  if (n_max < 4) throw DomainError("asymptotic_scaling_check requires N_max >= 4");
  std::vector<std::pair<int, double>> rows;
  rows.reserve(static_cast<std::size_t>(n_max - 1));
  for (int n = 2; n <= n_max; ++n) {
    ETSolution sol = solve(kin, pot, n, ground_state_q(n, dimension));
    rows.emplace_back(n, sol.energy / n);
  }
  return rows;
}

}  // namespace cyclet
