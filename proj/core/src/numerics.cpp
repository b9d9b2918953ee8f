#include "moeblox/numerics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "moeblox/error.hpp"

namespace moeblox {

namespace {

bool in_range(double v) { return std::isfinite(v) && v > 0.0 && v < 1e-2; }

double parse_field(std::string_view field) {
  while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
  while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw GeometryError(Errc::InvalidArgument,
                        "cannot parse tolerance field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

void Tolerances::validate() const {
  if (!in_range(eps_product) || !in_range(eps_angle) || !in_range(eps_mod) ||
      !in_range(eps_domain)) {
    throw GeometryError(Errc::InvalidArgument, "tolerances must lie in (0, 1e-2)");
  }
}

Tolerances Tolerances::parse(std::string_view text) {
  Tolerances tol;
  double* slots[] = {&tol.eps_product, &tol.eps_angle, &tol.eps_mod};
  std::size_t index = 0;
  while (true) {
    const auto comma = text.find(',');
    if (index >= std::size(slots)) {
      throw GeometryError(Errc::InvalidArgument, "at most three tolerance fields accepted");
    }
    *slots[index++] = parse_field(text.substr(0, comma));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  tol.validate();
  return tol;
}

Tolerances Tolerances::from_environment() {
  if (const char* env = std::getenv("MOEBLOX_TOL"); env != nullptr && *env != '\0') {
    return parse(env);
  }
  return {};
}

double clamped_acos(double x, const Tolerances& tol) {
  if (!(x >= -1.0 - tol.eps_domain && x <= 1.0 + tol.eps_domain)) {
    throw GeometryError(Errc::DomainError, "acos argument " + std::to_string(x));
  }
  return std::acos(std::clamp(x, -1.0, 1.0));
}

double clamped_acosh(double x, const Tolerances& tol) {
  if (!(x >= 1.0 - tol.eps_domain)) {
    throw GeometryError(Errc::DomainError, "acosh argument " + std::to_string(x));
  }
  return std::acosh(std::max(x, 1.0));
}

bool congruent_mod(double a, double b, double modulus, const Tolerances& tol) {
  if (!(modulus > 0.0)) {
    throw GeometryError(Errc::InvalidArgument, "modulus must be positive");
  }
  const double d = (a - b) / modulus;
  const double off = std::abs(d - std::round(d)) * modulus;
  return off <= tol.eps_mod;
}

double wrap_half_turn(double angle) {
  double r = std::remainder(angle, kPi);  // [-pi/2, pi/2]
  if (r <= -kPi / 2) r += kPi;
  return r;
}

bool near_zero(double value, double scale, double eps) {
  return std::abs(value) <= eps * std::max(scale, std::numeric_limits<double>::min());
}

}  // namespace moeblox
