#pragma once

#include <numbers>
#include <optional>
#include <string_view>

namespace moeblox {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerance policy threaded through every geometric predicate.
///
/// eps_product is relative (products are compared against the magnitude of
/// their operands), eps_angle is absolute radians, eps_mod is an absolute
/// tolerance on turn fractions and eps_domain is the overshoot accepted
/// outside the domain of acos/acosh before it is treated as an error.
struct Tolerances {
  double eps_product = 1e-9;
  double eps_angle = 1e-7;
  double eps_mod = 1e-6;
  double eps_domain = 1e-9;

  /// Throws GeometryError(InvalidArgument) unless every field is in (0, 1e-2).
  void validate() const;

  /// Parses "<eps_product>[,<eps_angle>,<eps_mod>]"; missing fields keep defaults.
  static Tolerances parse(std::string_view text);

  /// Reads MOEBLOX_TOL when set, defaults otherwise.
  static Tolerances from_environment();
};

double clamped_acos(double x, const Tolerances& tol);
double clamped_acosh(double x, const Tolerances& tol);

// True iff a - b lies within eps_mod of an integer multiple of modulus.
bool congruent_mod(double a, double b, double modulus, const Tolerances& tol);

// Reduces an angle modulo pi into (-pi/2, pi/2].
double wrap_half_turn(double angle);

// |value| <= eps * scale, with scale floored at the smallest normal double.
bool near_zero(double value, double scale, double eps);

}  // namespace moeblox
