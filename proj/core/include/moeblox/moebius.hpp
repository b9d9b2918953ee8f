#pragma once

#include <array>

#include "moeblox/cycle.hpp"

namespace moeblox {

/// Fractional linear transformation z -> (a z + b) / (c z + d).
class MoebiusMap {
 public:
  // Throws SingularMap when |ad - bc| <= eps_product * max(|a|,|b|,|c|,|d|)^2.
  MoebiusMap(Complex a, Complex b, Complex c, Complex d, const Tolerances& tol = {});
  explicit MoebiusMap(const Mat2& m, const Tolerances& tol = {});

  static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex a() const { return m_.a; }
  Complex b() const { return m_.b; }
  Complex c() const { return m_.c; }
  Complex d() const { return m_.d; }
  const Mat2& matrix() const { return m_; }
  Complex det() const { return m_.det(); }

  MoebiusMap inverse() const;
  // Same transformation scaled to determinant 1.
  MoebiusMap normalized() const;

  // (f * g)(z) = f(g(z)).
  friend MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g);

 private:
  Mat2 m_;
};

ExtendedPoint apply_to_point(const MoebiusMap& map, const ExtendedPoint& p);

// Twisted conjugation conj(M) C M^{-1} with M scaled into SL2(C), so the
// cycle product is preserved exactly. Roundoff imaginary parts on k and m are
// dropped; above eps_product relative to the matrix size NumericalBreakdown
// is thrown.
Cycle apply_to_cycle(const MoebiusMap& map, const Cycle& c, const Tolerances& tol = {});

// The map sending p0 -> 0, pu -> 1, pinf -> infinity (cross-ratio).
// Throws CollidingPoints unless the three points are pairwise distinct.
MoebiusMap map_to_zero_one_inf(const ExtendedPoint& p0, const ExtendedPoint& pu,
                               const ExtendedPoint& pinf, const Tolerances& tol = {});

// The map sending from[i] -> to[i] for i = 0, 1, 2.
MoebiusMap map_three_points(const std::array<ExtendedPoint, 3>& from,
                            const std::array<ExtendedPoint, 3>& to, const Tolerances& tol = {});

// Frobenius norm of the determinant-one representative.
double condition_scale(const MoebiusMap& map);

}  // namespace moeblox
