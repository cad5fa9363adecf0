#include <cyclet/analytic.hpp>

#include <cyclet/oscillator.hpp>

#include <cmath>

namespace cyclet {

double power_law_energy(double A, double B, double C, double F, int particles,
                        double q) {
  if (!(A > 0.0) || !(B > 0.0)) throw DomainError("power_law_energy requires A, B > 0");
  if (!(C * F > 0.0)) throw DomainError("power_law_energy requires C*F > 0");
  if (!(B + F > 0.0)) throw DomainError("power_law_energy requires B + F > 0");
  if (particles < 2) throw DomainError("power_law_energy requires N >= 2");
  if (!(q > 0.0)) throw DomainError("power_law_energy requires Q > 0");
  return particles * C * ((B + F) / B) * std::pow(A * B / (C * F), F / (B + F)) *
         std::pow(q / particles, B * F / (B + F));
}

std::vector<ReggeRow> glueball_regge_table(double sigma, int particles, int count) {
  if (!(sigma > 0.0)) throw DomainError("glueball_regge_table requires sigma > 0");
  std::vector<Level> levels = enumerate_levels(particles, 3, count);
  std::vector<ReggeRow> rows;
  rows.reserve(levels.size());
  for (const Level& lvl : levels) {
    ReggeRow row;
    row.q = lvl.q;
    row.energy = 2.0 * std::sqrt(particles * sigma * lvl.q);
    row.energy_squared = 4.0 * particles * sigma * lvl.q;
    row.length = row.energy / (2.0 * sigma);
    rows.push_back(row);
  }
  return rows;
}

namespace {

// root of y w'(y) + B w(y) = 0; both built-in shapes solve in closed form
double threshold_root(double B, FiniteRangeShape shape) {
  switch (shape) {
    case FiniteRangeShape::Gaussian: return std::sqrt(B / 2.0);
    case FiniteRangeShape::Exponential: return B;
  }
  throw DomainError("unknown finite-range shape");
}

double shape_value(FiniteRangeShape shape, double y) {
  return shape == FiniteRangeShape::Gaussian ? std::exp(-y * y) : std::exp(-y);
}

}  // namespace

CriticalCouplingResult critical_coupling(double A, double B, FiniteRangeShape shape,
                                         int particles, double q) {
  if (!(A > 0.0) || !(B > 0.0)) throw DomainError("critical_coupling requires A, B > 0");
  if (particles < 2) throw DomainError("critical_coupling requires N >= 2");
  if (!(q > 0.0)) throw DomainError("critical_coupling requires Q > 0");
  CriticalCouplingResult res;
  res.shape = shape;
  res.kinetic_exponent = B;
  res.particles = particles;
  res.q = q;
  res.y0 = threshold_root(B, shape);
  res.g_c = A / (std::pow(res.y0, B) * shape_value(shape, res.y0)) *
            std::pow(q / particles, B);
  return res;
}

CriticalCurve ground_state_critical_curve(double A, double B, FiniteRangeShape shape,
                                          int dimension,
                                          const std::vector<int>& n_list) {
  if (dimension < 1) throw DomainError("ground_state_critical_curve requires D >= 1");
  CriticalCurve curve;
  curve.rows.reserve(n_list.size());
  for (int n : n_list) {
    if (n < 2) throw DomainError("ground_state_critical_curve requires every N >= 2");
    double q = dimension / std::tan(EIGEN_PI / (2.0 * n));
    curve.rows.emplace_back(n, critical_coupling(A, B, shape, n, q).g_c);
  }
  double y0 = threshold_root(B, shape);
  curve.limit = A / (std::pow(y0, B) * shape_value(shape, y0)) *
                std::pow(2.0 * dimension / EIGEN_PI, B);
  return curve;
}

}  // namespace cyclet
