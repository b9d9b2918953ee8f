#include "moeblox/cycle.hpp"

#include <algorithm>
#include <cmath>

#include "moeblox/error.hpp"

namespace moeblox {

Cycle::Cycle(double k, double l, double n, double m) : k_(k), l_(l), n_(n), m_(m) {
  if (!std::isfinite(k) || !std::isfinite(l) || !std::isfinite(n) || !std::isfinite(m)) {
    throw GeometryError(Errc::DegenerateInput, "non-finite cycle component");
  }
  if (k == 0.0 && l == 0.0 && n == 0.0 && m == 0.0) {
    throw GeometryError(Errc::DegenerateInput, "cycle (0,0,0,0)");
  }
}

double Cycle::norm() const { return std::sqrt(k_ * k_ + l_ * l_ + n_ * n_ + m_ * m_); }

Mat2 Cycle::matrix() const { return {std::conj(L()), Complex{-m_, 0.0}, Complex{k_, 0.0}, -L()}; }

Cycle operator+(const Cycle& x, const Cycle& y) {
  return {x.k_ + y.k_, x.l_ + y.l_, x.n_ + y.n_, x.m_ + y.m_};
}

Cycle operator-(const Cycle& x, const Cycle& y) {
  return {x.k_ - y.k_, x.l_ - y.l_, x.n_ - y.n_, x.m_ - y.m_};
}

Cycle operator*(double s, const Cycle& c) { return {s * c.k_, s * c.l_, s * c.n_, s * c.m_}; }

Cycle combine(double alpha, const Cycle& a, double beta, const Cycle& b) {
  return {alpha * a.k() + beta * b.k(), alpha * a.l() + beta * b.l(), alpha * a.n() + beta * b.n(),
          alpha * a.m() + beta * b.m()};
}

Cycle from_circle(Complex center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw GeometryError(Errc::InvalidRadius, "radius must be positive");
  }
  return {1.0, center.real(), center.imag(), std::norm(center) - radius * radius};
}

Cycle from_line(Complex p, Complex q) {
  const Complex d = q - p;
  if (std::abs(d) == 0.0) throw GeometryError(Errc::DegenerateInput, "line through one point");
  // Normal (l, n) = (-dy, dx); m from l x + n y = m / 2 at p.
  const double l = -d.imag();
  const double n = d.real();
  return canonicalize(Cycle{0.0, l, n, 2.0 * (l * p.real() + n * p.imag())});
}

Cycle zero_radius_at(const ExtendedPoint& p) {
  const Complex w1 = p.w1();
  const Complex w2 = p.w2();
  const Complex cross = w1 * std::conj(w2);
  return {std::norm(w2), cross.real(), cross.imag(), std::norm(w1)};
}

CycleKind classify(const Cycle& c, const Tolerances& tol) {
  if (near_zero(c.discriminant(), c.discriminant_scale(), tol.eps_product)) {
    return CycleKind::PointCircle;
  }
  if (near_zero(c.k(), c.norm(), tol.eps_product)) return CycleKind::Line;
  return CycleKind::ProperCircle;
}

CircleGeometry center_radius(const Cycle& c, const Tolerances& tol) {
  if (near_zero(c.k(), c.norm(), tol.eps_product)) {
    throw GeometryError(Errc::IsLine, "cycle has k = 0");
  }
  const double disc = c.discriminant();
  if (disc < 0.0 && !near_zero(disc, c.discriminant_scale(), tol.eps_product)) {
    throw GeometryError(Errc::ImaginaryRadius, "negative discriminant");
  }
  return {Complex{c.l() / c.k(), c.n() / c.k()}, std::sqrt(std::max(disc, 0.0)) / std::abs(c.k())};
}

double product(const Cycle& c, const Cycle& d) {
  return 2.0 * (c.l() * d.l() + c.n() * d.n()) - c.m() * d.k() - c.k() * d.m();
}

Cycle canonicalize(const Cycle& c, const Tolerances& tol) {
  if (!near_zero(c.k(), c.norm(), tol.eps_product)) return (1.0 / c.k()) * c;
  const double ln = std::hypot(c.l(), c.n());
  if (!near_zero(ln, c.norm(), tol.eps_product)) {
    const double lead = near_zero(c.l(), ln, tol.eps_product) ? c.n() : c.l();
    const double s = (lead > 0.0 ? 1.0 : -1.0) / ln;
    return {0.0, s * c.l(), s * c.n(), s * c.m()};
  }
  return {0.0, 0.0, 0.0, 1.0};
}

double normalized_product(const Cycle& c, const Cycle& d, const Tolerances& tol) {
  const Cycle cc = canonicalize(c, tol);
  const Cycle dd = canonicalize(d, tol);
  const double cself = product(cc, cc);
  const double dself = product(dd, dd);
  const auto zero_radius = [&](const Cycle& x, double self) {
    return self <= 0.0 || near_zero(self, 2.0 * x.discriminant_scale(), tol.eps_product);
  };
  if (zero_radius(cc, cself) || zero_radius(dd, dself)) {
    throw GeometryError(Errc::ZeroRadiusOperand, "normalized product needs two real circles");
  }
  return product(cc, dd) / std::sqrt(cself * dself);
}

bool is_orthogonal(const Cycle& c, const Cycle& d, const Tolerances& tol) {
  return near_zero(product(c, d), 2.0 * c.norm() * d.norm(), tol.eps_product);
}

bool passes(const Cycle& c, const ExtendedPoint& p, const Tolerances& tol) {
  return is_orthogonal(c, zero_radius_at(p.normalized()), tol);
}

ExtendedPoint point_of(const Cycle& zero_radius) {
  const double s = zero_radius.k() + zero_radius.m() >= 0.0 ? 1.0 : -1.0;
  const double k = s * zero_radius.k();
  const double m = s * zero_radius.m();
  const Complex L = s * zero_radius.L();
  if (k >= m) {
    const double r = std::sqrt(std::max(k, 0.0));
    return {L / r, Complex{r, 0.0}};
  }
  const double r = std::sqrt(m);
  return {Complex{r, 0.0}, std::conj(L) / r};
}

double projective_distance(const Cycle& c, const Cycle& d) {
  const auto a = c.components();
  const auto b = d.components();
  const double na = c.norm();
  const double nb = d.norm();
  double plus = 0.0;
  double minus = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double x = a[i] / na;
    const double y = b[i] / nb;
    plus += (x + y) * (x + y);
    minus += (x - y) * (x - y);
  }
  return std::sqrt(std::min(plus, minus));
}

Complex tangent_direction(const Cycle& c, Complex p) {
  // The gradient of k|z|^2 - 2 Re(conj(L) z) + m is 2(k z - L).
  return Complex{0.0, 1.0} * (c.k() * p - c.L());
}

bool lex_less(const ExtendedPoint& a, const ExtendedPoint& b, double eps) {
  const bool ainf = a.is_infinite(eps);
  const bool binf = b.is_infinite(eps);
  if (ainf || binf) return !ainf && binf;
  const Complex za = a.value();
  const Complex zb = b.value();
  const double scale = 1.0 + std::max(std::abs(za), std::abs(zb));
  if (std::abs(za.real() - zb.real()) > eps * scale) return za.real() < zb.real();
  if (std::abs(za.imag() - zb.imag()) > eps * scale) return za.imag() < zb.imag();
  return false;
}

namespace {

// Line given by unit normal u and offset h (u . z = h) against a circle.
std::vector<ExtendedPoint> line_circle(Complex u, double h, Complex center, double radius,
                                       const Tolerances& tol) {
  const double d = u.real() * center.real() + u.imag() * center.imag() - h;
  const double gap = radius * radius - d * d;
  const Complex foot = center - d * u;
  if (near_zero(gap, radius * radius + d * d, tol.eps_product)) return {ExtendedPoint{foot}};
  if (gap < 0.0) return {};
  const Complex along = Complex{0.0, 1.0} * u * std::sqrt(gap);
  return {ExtendedPoint{foot - along}, ExtendedPoint{foot + along}};
}

std::pair<Complex, double> unit_line(const Cycle& line) {
  const double s = std::hypot(line.l(), line.n());
  return {Complex{line.l() / s, line.n() / s}, line.m() / (2.0 * s)};
}

}  // namespace

std::vector<ExtendedPoint> intersect(const Cycle& c, const Cycle& d, const Tolerances& tol) {
  if (projective_distance(c, d) <= tol.eps_product) {
    throw GeometryError(Errc::CoincidentCycles, "intersection of a cycle with itself");
  }
  std::vector<ExtendedPoint> out;
  const CycleKind ck = classify(c, tol);
  const CycleKind dk = classify(d, tol);
  const auto imaginary = [&](const Cycle& x) {
    return x.discriminant() < 0.0 &&
           !near_zero(x.discriminant(), x.discriminant_scale(), tol.eps_product);
  };

  if (imaginary(c) || imaginary(d)) {
    // no real points
  } else if (ck == CycleKind::PointCircle || dk == CycleKind::PointCircle) {
    const Cycle& pc = ck == CycleKind::PointCircle ? c : d;
    const Cycle& other = ck == CycleKind::PointCircle ? d : c;
    const ExtendedPoint p = point_of(pc);
    if (passes(other, p, tol)) out.push_back(p);
  } else if (ck == CycleKind::Line && dk == CycleKind::Line) {
    const auto [u1, h1] = unit_line(c);
    const auto [u2, h2] = unit_line(d);
    const double det = u1.real() * u2.imag() - u1.imag() * u2.real();
    if (!near_zero(det, 1.0, tol.eps_product)) {
      const double x = (h1 * u2.imag() - h2 * u1.imag()) / det;
      const double y = (u1.real() * h2 - u2.real() * h1) / det;
      out.emplace_back(Complex{x, y});
    }
    out.push_back(ExtendedPoint::infinity());
  } else if (ck == CycleKind::Line || dk == CycleKind::Line) {
    const Cycle& line = ck == CycleKind::Line ? c : d;
    const auto circle = center_radius(ck == CycleKind::Line ? d : c, tol);
    const auto [u, h] = unit_line(line);
    out = line_circle(u, h, circle.center, circle.radius, tol);
  } else {
    // Radical-line reduction: the difference of the k = 1 representatives is
    // the line through the common points.
    const Cycle cc = canonicalize(c, tol);
    const Cycle dd = canonicalize(d, tol);
    const double dl = cc.l() - dd.l();
    const double dn = cc.n() - dd.n();
    const double scale = std::abs(cc.l()) + std::abs(cc.n()) + std::abs(dd.l()) +
                         std::abs(dd.n()) + center_radius(cc, tol).radius;
    if (!near_zero(std::hypot(dl, dn), scale, tol.eps_product)) {
      const auto [u, h] = unit_line(Cycle{0.0, dl, dn, cc.m() - dd.m()});
      const auto circle = center_radius(cc, tol);
      out = line_circle(u, h, circle.center, circle.radius, tol);
    }
  }
  std::sort(out.begin(), out.end(), [&](const ExtendedPoint& a, const ExtendedPoint& b) {
    return lex_less(a, b, tol.eps_product);
  });
  return out;
}

}  // namespace moeblox
