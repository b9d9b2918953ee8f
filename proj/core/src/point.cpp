#include "moeblox/point.hpp"

#include <cmath>

#include "moeblox/error.hpp"

namespace moeblox {

namespace {
double pair_norm(Complex a, Complex b) { return std::sqrt(std::norm(a) + std::norm(b)); }
bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
}  // namespace

ExtendedPoint::ExtendedPoint(Complex w1, Complex w2) : w1_(w1), w2_(w2) {
  if (!finite(w1) || !finite(w2)) {
    throw GeometryError(Errc::DegenerateInput, "non-finite homogeneous coordinate");
  }
  if (w1 == Complex{} && w2 == Complex{}) {
    throw GeometryError(Errc::DegenerateInput, "homogeneous pair (0,0)");
  }
}

ExtendedPoint::ExtendedPoint(Complex z) : ExtendedPoint(z, Complex{1.0, 0.0}) {}

bool ExtendedPoint::is_infinite(double eps) const { return std::abs(w2_) <= eps * std::abs(w1_); }

Complex ExtendedPoint::value() const {
  if (w2_ == Complex{}) throw GeometryError(Errc::NotFinite, "point at infinity has no value");
  return w1_ / w2_;
}

bool ExtendedPoint::same_as(const ExtendedPoint& other, double eps) const {
  const double cross = std::abs(w1_ * other.w2_ - w2_ * other.w1_);
  return cross <= eps * pair_norm(w1_, w2_) * pair_norm(other.w1_, other.w2_);
}

ExtendedPoint ExtendedPoint::normalized() const {
  const double s = pair_norm(w1_, w2_);
  return {w1_ / s, w2_ / s};
}

}  // namespace moeblox
