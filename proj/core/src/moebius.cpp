#include "moeblox/moebius.hpp"

#include <algorithm>
#include <cmath>

#include "moeblox/error.hpp"

namespace moeblox {

namespace {

double frobenius(const Mat2& m) {
  return std::sqrt(std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d));
}

Mat2 scaled(const Mat2& m, Complex s) { return {m.a * s, m.b * s, m.c * s, m.d * s}; }

}  // namespace

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d, const Tolerances& tol)
    : MoebiusMap(Mat2{a, b, c, d}, tol) {}

MoebiusMap::MoebiusMap(const Mat2& m, const Tolerances& tol) : m_(m) {
  const double biggest = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
  const double det = std::abs(m.det());
  if (!std::isfinite(det) || !std::isfinite(biggest) || !(det > tol.eps_product * biggest * biggest)) {
    throw GeometryError(Errc::SingularMap, "determinant vanishes");
  }
}

MoebiusMap MoebiusMap::inverse() const { return MoebiusMap{m_.adjugate()}; }

MoebiusMap MoebiusMap::normalized() const {
  return MoebiusMap{scaled(m_, 1.0 / std::sqrt(m_.det()))};
}

MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g) { return MoebiusMap{f.m_ * g.m_}; }

ExtendedPoint apply_to_point(const MoebiusMap& map, const ExtendedPoint& p) {
  const Mat2& m = map.matrix();
  return {m.a * p.w1() + m.b * p.w2(), m.c * p.w1() + m.d * p.w2()};
}

Cycle apply_to_cycle(const MoebiusMap& map, const Cycle& c, const Tolerances& tol) {
  const Mat2 unit = map.normalized().matrix();
  const Mat2 r = unit.conj() * c.matrix() * unit.adjugate();
  const double scale = frobenius(r);
  if (!near_zero(r.c.imag(), scale, tol.eps_product) ||
      !near_zero(r.b.imag(), scale, tol.eps_product)) {
    throw GeometryError(Errc::NumericalBreakdown, "complex residue on k or m");
  }
  // r = [[conj(L'), -m'], [k', -L']]; average both copies of L'.
  const Complex L = 0.5 * (std::conj(r.a) - r.d);
  return {r.c.real(), L.real(), L.imag(), -r.b.real()};
}

MoebiusMap map_to_zero_one_inf(const ExtendedPoint& p0, const ExtendedPoint& pu,
                               const ExtendedPoint& pinf, const Tolerances& tol) {
  if (p0.same_as(pu, tol.eps_product) || p0.same_as(pinf, tol.eps_product) ||
      pu.same_as(pinf, tol.eps_product)) {
    throw GeometryError(Errc::CollidingPoints, "three distinct points required");
  }
  const ExtendedPoint a = p0.normalized();
  const ExtendedPoint u = pu.normalized();
  const ExtendedPoint b = pinf.normalized();
  // Linear forms vanishing on a and b: f(w) = w2(p) w1 - w1(p) w2.
  const auto form = [](const ExtendedPoint& p, const ExtendedPoint& w) {
    return p.w2() * w.w1() - p.w1() * w.w2();
  };
  const Complex fa_u = form(a, u);
  const Complex fb_u = form(b, u);
  return MoebiusMap{Mat2{fb_u * a.w2(), -fb_u * a.w1(), fa_u * b.w2(), -fa_u * b.w1()}, tol};
}

MoebiusMap map_three_points(const std::array<ExtendedPoint, 3>& from,
                            const std::array<ExtendedPoint, 3>& to, const Tolerances& tol) {
  const MoebiusMap f = map_to_zero_one_inf(from[0], from[1], from[2], tol);
  const MoebiusMap g = map_to_zero_one_inf(to[0], to[1], to[2], tol);
  return g.inverse() * f;
}

double condition_scale(const MoebiusMap& map) { return frobenius(map.normalized().matrix()); }

}  // namespace moeblox
