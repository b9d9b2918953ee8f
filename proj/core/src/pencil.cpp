#include "moeblox/pencil.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "moeblox/error.hpp"

namespace moeblox {

namespace {

Cycle unit(const Cycle& c) { return (1.0 / c.norm()) * c; }

Eigen::Vector4d as_vector(const Cycle& c) { return {c.k(), c.l(), c.n(), c.m()}; }

// Coefficients of X -> <X, Y> acting on (k, l, n, m).
Eigen::RowVector4d product_row(const Cycle& y) {
  Eigen::RowVector4d row{-y.m(), 2.0 * y.l(), 2.0 * y.n(), -y.k()};
  return row / row.norm();
}

bool canonical_less(const Cycle& x, const Cycle& y, const Tolerances& tol) {
  const auto a = canonicalize(x, tol).components();
  const auto b = canonicalize(y, tol).components();
  for (std::size_t i = 0; i < 4; ++i) {
    const double scale = 1.0 + std::max(std::abs(a[i]), std::abs(b[i]));
    if (std::abs(a[i] - b[i]) > tol.eps_product * scale) return a[i] < b[i];
  }
  return false;
}

}  // namespace

Pencil::Pencil(Cycle a, Cycle b, const Tolerances& tol) : a_(a), b_(b) {
  if (projective_distance(a_, b_) <= tol.eps_product) {
    throw GeometryError(Errc::DegenerateInput, "pencil needs two distinct cycles");
  }
}

PencilKind classify_pencil(const Pencil& pencil, const Tolerances& tol) {
  const Cycle a = unit(pencil.first());
  const Cycle b = unit(pencil.second());
  const double ab = product(a, b);
  const double gram = product(a, a) * product(b, b);
  const double gap = ab * ab - gram;
  if (near_zero(gap, ab * ab + std::abs(gram), tol.eps_product)) return PencilKind::Parabolic;
  return gap < 0.0 ? PencilKind::Elliptic : PencilKind::Hyperbolic;
}

Cycle member(const Pencil& pencil, double alpha, double beta) {
  if (alpha == 0.0 && beta == 0.0) {
    throw GeometryError(Errc::ZeroCoefficients, "(alpha, beta) = (0, 0)");
  }
  return combine(alpha, pencil.first(), beta, pencil.second());
}

std::pair<Cycle, Cycle> zero_radius_members(const Pencil& pencil, const Tolerances& tol) {
  if (classify_pencil(pencil, tol) != PencilKind::Hyperbolic) {
    throw GeometryError(Errc::NotHyperbolic, "pencil has no real limit points");
  }
  const Cycle a = unit(pencil.first());
  const Cycle b = unit(pencil.second());
  const double aa = product(a, a);
  const double ab = product(a, b);
  const double bb = product(b, b);
  // Roots of aa x^2 + 2 ab x + bb = 0 in homogeneous form, written so that
  // neither root loses digits to cancellation.
  const double root = std::sqrt(ab * ab - aa * bb);
  const double q = -(ab + std::copysign(root, ab));
  Cycle z1 = combine(q, a, aa, b);
  Cycle z2 = combine(bb, a, q, b);
  if (canonical_less(z2, z1, tol)) std::swap(z1, z2);
  return {z1, z2};
}

Cycle orthogonal_cycle_through(const Cycle& a, const Cycle& b, const Cycle& p,
                               const Tolerances& tol) {
  Eigen::MatrixXd system(3, 4);
  system.row(0) = product_row(a);
  system.row(1) = product_row(b);
  system.row(2) = product_row(p);
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  if (!(sigma(2) > tol.eps_product * sigma(0))) {
    throw GeometryError(Errc::RankDeficient, "null space of dimension > 1");
  }
  const Eigen::Vector4d x = svd.matrixV().col(3);
  return canonicalize(Cycle{x(0), x(1), x(2), x(3)}, tol);
}

HyperbolicMember hyperbolic_member_through(const Cycle& c2, const Cycle& c3, const Cycle& c0,
                                           const Tolerances& tol) {
  const Cycle z = unit(c0);
  const double b2 = product(z, c2);
  const double b3 = product(z, c3);
  if (near_zero(std::abs(b2) + std::abs(b3), 2.0 * (c2.norm() + c3.norm()), tol.eps_product)) {
    throw GeometryError(Errc::OnRadicalLocus, "point orthogonal to both generators");
  }
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> t;
  if (near_zero(b2 - b3, std::abs(b2) + std::abs(b3), tol.eps_product)) {
    alpha = -1.0;
    beta = 1.0;
  } else {
    t = -b3 / (b2 - b3);
    alpha = *t;
    beta = 1.0 - *t;
  }
  HyperbolicMember out{combine(alpha, c2, beta, c3), t, false};
  // Relative size of <Ch,Ch> against the pencil's quadratic form; invariant
  // under rescaling C2, C3 and under Moebius maps.
  const double g22 = product(c2, c2);
  const double g23 = product(c2, c3);
  const double g33 = product(c3, c3);
  const double magnitude = std::abs(g22) * alpha * alpha + 2.0 * std::abs(g23 * alpha * beta) +
                           std::abs(g33) * beta * beta;
  out.zero_radius = near_zero(product(out.cycle, out.cycle), magnitude, tol.eps_product);
  return out;
}

SpanFit span_fit(const Pencil& pencil, const Cycle& c) {
  Eigen::Matrix<double, 4, 2> basis;
  basis.col(0) = as_vector(unit(pencil.first()));
  basis.col(1) = as_vector(unit(pencil.second()));
  const Eigen::Vector4d target = as_vector(unit(c));
  const Eigen::JacobiSVD<Eigen::Matrix<double, 4, 2>> svd(basis,
                                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::Vector2d coeffs = svd.solve(target);
  return {(basis * coeffs - target).norm(), svd.singularValues()(1)};
}

}  // namespace moeblox
