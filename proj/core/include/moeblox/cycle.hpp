#pragma once

#include <array>
#include <vector>

#include "moeblox/numerics.hpp"
#include "moeblox/point.hpp"

namespace moeblox {

// 2x2 complex matrix, row-major.
struct Mat2 {
  Complex a, b, c, d;

  Complex det() const { return a * d - b * c; }
  Mat2 conj() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

/// Circle, line or point encoded by the real quadruple (k, l, n, m) of
///
///     k(x^2 + y^2) - 2 l x - 2 n y + m = 0.
///
/// Representatives are projective: C and tC (real t != 0) are the same cycle.
/// operator== compares representatives exactly; use projective_distance for
/// geometric equality.
class Cycle {
 public:
  // Throws DegenerateInput for (0,0,0,0) or non-finite components.
  Cycle(double k, double l, double n, double m);

  double k() const { return k_; }
  double l() const { return l_; }
  double n() const { return n_; }
  double m() const { return m_; }
  Complex L() const { return {l_, n_}; }

  // l^2 + n^2 - m k; radius^2 * k^2 for real circles.
  double discriminant() const { return l_ * l_ + n_ * n_ - m_ * k_; }
  // Natural magnitude of the discriminant terms, used for relative tests.
  double discriminant_scale() const { return l_ * l_ + n_ * n_ + std::abs(m_ * k_); }

  std::array<double, 4> components() const { return {k_, l_, n_, m_}; }
  double norm() const;

  // FSCc matrix [[conj(L), -m], [k, -L]].
  Mat2 matrix() const;

  Cycle operator-() const { return {-k_, -l_, -n_, -m_}; }
  friend Cycle operator+(const Cycle& x, const Cycle& y);
  friend Cycle operator-(const Cycle& x, const Cycle& y);
  friend Cycle operator*(double s, const Cycle& c);

  bool operator==(const Cycle&) const = default;

 private:
  double k_, l_, n_, m_;
};

enum class CycleKind { Line, PointCircle, ProperCircle };

struct CircleGeometry {
  Complex center;
  double radius;
};

Cycle from_circle(Complex center, double radius);
Cycle from_line(Complex p, Complex q);
Cycle zero_radius_at(const ExtendedPoint& p);

CycleKind classify(const Cycle& c, const Tolerances& tol = {});
CircleGeometry center_radius(const Cycle& c, const Tolerances& tol = {});

// alpha a + beta b; throws DegenerateInput only if the sum vanishes.
Cycle combine(double alpha, const Cycle& a, double beta, const Cycle& b);

// <C,C'> = 2(l l' + n n') - m k' - k m'. Scale-covariant.
double product(const Cycle& c, const Cycle& d);

// Product of canonical representatives over sqrt(<C,C><C',C'>).
// Throws ZeroRadiusOperand unless both self-products are positive.
double normalized_product(const Cycle& c, const Cycle& d, const Tolerances& tol = {});

// k = 1 if k != 0; else unit normal (l, n) with first nonzero entry positive;
// else m = 1.
Cycle canonicalize(const Cycle& c, const Tolerances& tol = {});

bool is_orthogonal(const Cycle& c, const Cycle& d, const Tolerances& tol = {});
bool passes(const Cycle& c, const ExtendedPoint& p, const Tolerances& tol = {});

// Real intersection points, sorted lexicographically with infinity last.
std::vector<ExtendedPoint> intersect(const Cycle& c, const Cycle& d, const Tolerances& tol = {});

// The point a zero-radius cycle represents, recovered from
// (k, L, m) = (|w2|^2, w1 conj(w2), |w1|^2) without thresholds.
ExtendedPoint point_of(const Cycle& zero_radius);

// Distance between representatives after scaling both to unit norm,
// minimised over the sign. Zero iff projectively equal.
double projective_distance(const Cycle& c, const Cycle& d);

// Tangent direction of c at a finite point p (undirected; meaningful when
// p lies on c and c is not zero-radius).
Complex tangent_direction(const Cycle& c, Complex p);

// Lexicographic (Re, Im) order with infinity last; coordinates within
// eps of each other compare equal.
bool lex_less(const ExtendedPoint& a, const ExtendedPoint& b, double eps);

}  // namespace moeblox
