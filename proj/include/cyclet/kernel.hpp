#pragma once

// Kinematics T(p) and pair potentials W(r): values, derivatives, and the
// convexity class of the associated b-functions b_T, b_W defined through
// T(x) = b_T(x^2), W(x) = b_W(x^2). The convexity signs decide whether a
// solved level is an upper bound, a lower bound, or exact.

#include <cyclet/errors.hpp>

#include <cmath>

namespace cyclet {

/// Sign of b''(x) over the sampled domain.
enum class Curvature { Negative, Zero, Positive };

/// Whether the solved energy bounds the genuine eigenvalue from above,
/// from below, matches it exactly, or carries no guarantee.
enum class VariationalCharacter { UpperBound, LowerBound, Exact, Indeterminate };

enum class PotentialForm { PowerLaw, FiniteRange };
enum class FiniteRangeShape { Gaussian, Exponential };

namespace detail {

/// x^n for integer n (n may be negative). Used to keep small integral
/// exponents off the std::pow path.
inline double powi(double x, int n) {
  if (n < 0) return 1.0 / powi(x, -n);
  double r = 1.0;
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

/// Exponent with a fast path when it is a small integer.
struct Exponent {
  double value = 0.0;
  int as_int = 0;
  bool integral = false;

  explicit Exponent(double e = 0.0) : value(e) {
    double r = std::nearbyint(e);
    if (r == e && std::fabs(e) <= 16.0) {
      as_int = static_cast<int>(r);
      integral = true;
    }
  }

  double pow(double x) const { return integral ? powi(x, as_int) : std::pow(x, value); }
};

}  // namespace detail

/// Kinetic energy T(p) = A p^B, A > 0, B > 0, with derivative and the
/// curvature class of b_T (negative for B < 2, zero at B = 2, positive
/// for B > 2).
class KineticSpec {
 public:
  double value(double p) const { return a_ * exp_.pow(p); }
  double derivative(double p) const { return a_ * b_ * exp_m1_.pow(p); }

  Curvature bt_curvature() const { return curvature_; }
  double scale() const { return a_; }     ///< A
  double exponent() const { return b_; }  ///< B

 private:
  friend KineticSpec make_power_kinetics(double A, double B);
  KineticSpec(double a, double b, Curvature c)
      : a_(a), b_(b), curvature_(c), exp_(b), exp_m1_(b - 1.0) {}

  double a_ = 0.0;
  double b_ = 0.0;
  Curvature curvature_ = Curvature::Zero;
  detail::Exponent exp_, exp_m1_;
};

/// Pair potential W(r). Either a power law C r^F with C F > 0, or an
/// attractive finite-range well W(r) = -g w(r/a) with w(0) = 1 and w
/// decreasing (Gaussian w(y) = exp(-y^2) or exponential w(y) = exp(-y)).
class PotentialSpec {
 public:
  double value(double r) const {
    if (form_ == PotentialForm::PowerLaw) return c_ * exp_.pow(r);
    return -g_ * shape_w(r / a_);
  }

  double derivative(double r) const {
    if (form_ == PotentialForm::PowerLaw) return c_ * f_ * exp_m1_.pow(r);
    return -(g_ / a_) * shape_w_prime(r / a_);
  }

  Curvature bw_curvature() const { return curvature_; }
  PotentialForm form() const { return form_; }

  // power-law accessors
  double power_scale() const { return c_; }     ///< C
  double exponent() const { return f_; }        ///< F

  // finite-range accessors
  double coupling() const { return g_; }        ///< g
  double range() const { return a_; }           ///< a
  FiniteRangeShape shape() const { return shape_; }

  /// Dimensionless profile w(y) and its derivative for finite-range forms.
  double shape_w(double y) const {
    return shape_ == FiniteRangeShape::Gaussian ? std::exp(-y * y) : std::exp(-y);
  }
  double shape_w_prime(double y) const {
    return shape_ == FiniteRangeShape::Gaussian ? -2.0 * y * std::exp(-y * y)
                                                : -std::exp(-y);
  }

 private:
  friend PotentialSpec make_power_potential(double C, double F);
  friend PotentialSpec make_finite_range_potential(double g, FiniteRangeShape shape,
                                                   double a);
  PotentialSpec() = default;

  PotentialForm form_ = PotentialForm::PowerLaw;
  double c_ = 0.0, f_ = 0.0;                        // power law
  double g_ = 0.0, a_ = 1.0;                        // finite range
  FiniteRangeShape shape_ = FiniteRangeShape::Gaussian;
  Curvature curvature_ = Curvature::Zero;
  detail::Exponent exp_, exp_m1_;
};

KineticSpec make_power_kinetics(double A, double B);
PotentialSpec make_power_potential(double C, double F);
PotentialSpec make_finite_range_potential(double g, FiniteRangeShape shape,
                                          double a = 1.0);

/// Bound classification from the two curvature signs: both concave gives
/// an upper bound, both convex a lower bound; a vanishing side defers to
/// the other; both vanishing is exact; opposite signs carry no guarantee.
VariationalCharacter variational_character(const KineticSpec& kin,
                                           const PotentialSpec& pot);

const char* to_string(VariationalCharacter c);
const char* to_string(FiniteRangeShape s);

}  // namespace cyclet
