#pragma once

#include <complex>

namespace moeblox {

using Complex = std::complex<double>;

// Point of the extended complex plane in homogeneous coordinates [w1 : w2].
// Finite z is [z : 1]; infinity is [1 : 0].
class ExtendedPoint {
 public:
  ExtendedPoint(Complex w1, Complex w2);
  ExtendedPoint(Complex z);  // NOLINT(google-explicit-constructor): finite points read naturally
  ExtendedPoint(double x) : ExtendedPoint(Complex{x, 0.0}) {}  // NOLINT(google-explicit-constructor)

  static ExtendedPoint infinity() { return {Complex{1.0, 0.0}, Complex{0.0, 0.0}}; }

  Complex w1() const { return w1_; }
  Complex w2() const { return w2_; }

  // |w2| <= eps * |w1|; eps = 0 means exactly infinite.
  bool is_infinite(double eps = 0.0) const;

  // w1 / w2. Throws NotFinite for the point at infinity.
  Complex value() const;

  // Projective equality: |w1 w2' - w2 w1'| <= eps |(w1,w2)| |(w1',w2')|.
  bool same_as(const ExtendedPoint& other, double eps) const;

  // Representative scaled to unit Euclidean norm in C^2.
  ExtendedPoint normalized() const;

 private:
  Complex w1_;
  Complex w2_;
};

}  // namespace moeblox
