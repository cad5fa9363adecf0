#include <cyclet/kernel.hpp>

#include <algorithm>
#include <functional>

namespace cyclet {

namespace {

// Classify the sign of b''(x) by sampled second differences of b at 10
// log-spaced points in [1e-3, 1e3]. A point counts as signed only when
// the difference clears 1e-10 times the local scale, so a class may be
// Negative even if most samples sit in the flat tail of the function.
Curvature classify_b_curvature(const std::function<double(double)>& b) {
  bool has_neg = false;
  bool has_pos = false;
  for (int k = 0; k < 10; ++k) {
    double y = std::pow(10.0, -3.0 + 6.0 * k / 9.0);
    double h = 1e-3 * y;
    double lo = b(y - h);
    double mid = b(y);
    double hi = b(y + h);
    double d2 = hi - 2.0 * mid + lo;
    double scale = std::max({1.0, std::fabs(lo), std::fabs(mid), std::fabs(hi)});
    if (d2 > 1e-10 * scale) has_pos = true;
    if (d2 < -1e-10 * scale) has_neg = true;
  }
  if (has_neg && has_pos)
    throw DomainError("curvature sampling found both signs of b''");
  if (has_neg) return Curvature::Negative;
  if (has_pos) return Curvature::Positive;
  return Curvature::Zero;
}

void require_match(Curvature declared, Curvature sampled, const char* what) {
  if (declared != sampled)
    throw DomainError(std::string("declared curvature of ") + what +
                      " disagrees with sampled second differences");
}

}  // namespace

KineticSpec make_power_kinetics(double A, double B) {
  if (!(A > 0.0) || !(B > 0.0))
    throw DomainError("power-law kinematics requires A > 0 and B > 0");
  Curvature c = B < 2.0 ? Curvature::Negative
              : B > 2.0 ? Curvature::Positive
                        : Curvature::Zero;
  KineticSpec spec(A, B, c);
  // b_T(y) = A y^(B/2)
  require_match(c, classify_b_curvature([&](double y) { return spec.value(std::sqrt(y)); }),
                "b_T");
  return spec;
}

PotentialSpec make_power_potential(double C, double F) {
  if (!(C * F > 0.0))
    throw DomainError("power-law potential requires C*F > 0");
  PotentialSpec spec;
  spec.form_ = PotentialForm::PowerLaw;
  spec.c_ = C;
  spec.f_ = F;
  spec.exp_ = detail::Exponent(F);
  spec.exp_m1_ = detail::Exponent(F - 1.0);
  double sign = C * (F / 2.0) * (F / 2.0 - 1.0);
  spec.curvature_ = sign < 0.0 ? Curvature::Negative
                  : sign > 0.0 ? Curvature::Positive
                               : Curvature::Zero;
  require_match(spec.curvature_,
                classify_b_curvature([&](double y) { return spec.value(std::sqrt(y)); }),
                "b_W");
  return spec;
}

PotentialSpec make_finite_range_potential(double g, FiniteRangeShape shape, double a) {
  if (!(g > 0.0) || !(a > 0.0))
    throw DomainError("finite-range potential requires g > 0 and a > 0");
  PotentialSpec spec;
  spec.form_ = PotentialForm::FiniteRange;
  spec.g_ = g;
  spec.a_ = a;
  spec.shape_ = shape;
  spec.curvature_ = Curvature::Negative;  // b_W'' < 0 for both built-in shapes
  require_match(spec.curvature_,
                classify_b_curvature([&](double y) { return spec.value(std::sqrt(y)); }),
                "b_W");
  return spec;
}

VariationalCharacter variational_character(const KineticSpec& kin,
                                           const PotentialSpec& pot) {
  Curvature t = kin.bt_curvature();
  Curvature w = pot.bw_curvature();
  if (t == Curvature::Zero && w == Curvature::Zero) return VariationalCharacter::Exact;
  if (t == Curvature::Zero) t = w;  // a vanishing side defers to the other
  if (w == Curvature::Zero) w = t;
  if (t == Curvature::Negative && w == Curvature::Negative)
    return VariationalCharacter::UpperBound;
  if (t == Curvature::Positive && w == Curvature::Positive)
    return VariationalCharacter::LowerBound;
  return VariationalCharacter::Indeterminate;
}

const char* to_string(VariationalCharacter c) {
  switch (c) {
    case VariationalCharacter::UpperBound: return "upper-bound";
    case VariationalCharacter::LowerBound: return "lower-bound";
    case VariationalCharacter::Exact: return "exact";
    case VariationalCharacter::Indeterminate: return "indeterminate";
  }
  return "?";
}

const char* to_string(FiniteRangeShape s) {
  return s == FiniteRangeShape::Gaussian ? "gaussian" : "exponential";
}

}  // namespace cyclet
