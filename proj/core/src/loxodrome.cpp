#include "moeblox/loxodrome.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "moeblox/error.hpp"

namespace moeblox {

namespace {

bool same_cycle(const Cycle& a, const Cycle& b, const Tolerances& tol) {
  return projective_distance(a, b) <= tol.eps_product;
}

bool is_zero_radius(const Cycle& c, const Tolerances& tol) {
  return classify(c, tol) == CycleKind::PointCircle;
}

double relative_product(const Cycle& a, const Cycle& b) {
  return std::abs(product(a, b)) / (2.0 * a.norm() * b.norm());
}

// Directed angle from line direction u to line direction v, modulo pi.
double directed_angle(Complex u, Complex v) { return wrap_half_turn(std::arg(v * std::conj(u))); }

bool turn_fractions_agree(double lhs, double rhs, CongruenceMode mode, const Tolerances& tol) {
  if (mode == CongruenceMode::StrictMod1) return congruent_mod(lhs, rhs, 1.0, tol);
  return congruent_mod(lhs, rhs, 0.5, tol) || congruent_mod(lhs, -rhs, 0.5, tol);
}

// Member of the triple's hyperbolic pencil through the point of c0. For the
// circle-degenerate triple the pencil is C2 alone.
HyperbolicMember hyperbolic_member(const LoxodromeTriple& t, const SlsParameter& param,
                                   const Cycle& c0, const Tolerances& tol) {
  if (param.is_finite() && param.lambda_tilde() == 0.0) return {t.c2(), std::nullopt, false};
  return hyperbolic_member_through(t.c2(), t.c3(), c0, tol);
}

// The lexicographically larger point of C1 n C2 first, then the other.
std::pair<ExtendedPoint, ExtendedPoint> unit_point(const LoxodromeTriple& t,
                                                   const Tolerances& tol) {
  const auto points = intersect(t.c1(), t.c2(), tol);
  if (points.size() != 2) {
    throw GeometryError(Errc::DegenerateTriple, "C1 must cross C2 in two points");
  }
  return {points[1], points[0]};
}

double chordal(const ExtendedPoint& a, const ExtendedPoint& b) {
  const ExtendedPoint x = a.normalized();
  const ExtendedPoint y = b.normalized();
  return std::abs(x.w1() * y.w2() - x.w2() * y.w1());
}

// A point of c1 far (chordally) from both given points.
ExtendedPoint point_on_away_from(const Cycle& c1, const ExtendedPoint& p, const ExtendedPoint& q,
                                 const Tolerances& tol) {
  std::vector<ExtendedPoint> candidates;
  if (classify(c1, tol) == CycleKind::Line) {
    const double s = std::hypot(c1.l(), c1.n());
    const Complex u{c1.l() / s, c1.n() / s};
    const Complex foot = u * (c1.m() / (2.0 * s));
    const Complex along = Complex{0.0, 1.0} * u;
    candidates = {ExtendedPoint::infinity(), foot, foot + along, foot - along};
  } else {
    const auto g = center_radius(c1, tol);
    candidates = {g.center + g.radius, g.center - g.radius, g.center + Complex{0.0, g.radius}};
  }
  return *std::max_element(candidates.begin(), candidates.end(),
                           [&](const ExtendedPoint& a, const ExtendedPoint& b) {
                             return std::min(chordal(a, p), chordal(a, q)) <
                                    std::min(chordal(b, p), chordal(b, q));
                           });
}

MoebiusMap finite_frame(const ExtendedPoint& p, const Tolerances& tol) {
  return p.is_infinite(tol.eps_product) ? branch_swap() : MoebiusMap::identity();
}

}  // namespace

SlsClass classify_sls(Complex lambda) {
  const double s = lambda.real() * lambda.imag();
  if (s > 0.0) return SlsClass::Positive;
  if (s < 0.0) return SlsClass::Negative;
  return SlsClass::Degenerate;
}

SlsParameter SlsParameter::finite(double lambda_tilde) {
  if (!std::isfinite(lambda_tilde)) {
    throw GeometryError(Errc::InvalidArgument, "finite lambda_tilde expected");
  }
  return SlsParameter{Kind::Finite, lambda_tilde};
}

double SlsParameter::lambda_tilde() const {
  if (kind_ != Kind::Finite) throw GeometryError(Errc::NotFinite, "lambda_tilde is not finite");
  return value_;
}

Complex SlsParameter::lambda() const {
  switch (kind_) {
    case Kind::Finite: return {value_, kTwoPi};
    case Kind::Infinite: return {1.0, 0.0};
    case Kind::PointDegenerate: break;
  }
  return {0.0, 0.0};
}

double SlsParameter::a() const {
  switch (kind_) {
    case Kind::Finite: return std::exp(value_);
    case Kind::Infinite: return std::numeric_limits<double>::infinity();
    case Kind::PointDegenerate: break;
  }
  throw GeometryError(Errc::PointDegenerate, "a is undefined for the point spiral");
}

SlsParameter lambda_tilde(Complex lambda) {
  if (lambda.imag() != 0.0) return SlsParameter::finite(kTwoPi * lambda.real() / lambda.imag());
  if (lambda.real() != 0.0) return SlsParameter::infinite();
  return SlsParameter::point_degenerate();
}

MoebiusMap diagonal_flow(Complex lambda, double t, Branch branch) {
  const Complex e = std::exp(lambda * t / 2.0);
  const double s = branch == Branch::Plus ? 1.0 : -1.0;
  return {s * e, 0.0, 0.0, 1.0 / e};
}

MoebiusMap branch_swap() { return {0.0, -1.0, 1.0, 0.0}; }

std::pair<ExtendedPoint, ExtendedPoint> sample_sls(const SlsParameter& param, double t) {
  if (!param.is_finite()) throw GeometryError(Errc::NotFinite, "sample_sls needs finite lambda");
  const Complex w = std::exp(param.lambda() * t);
  return {ExtendedPoint{w}, ExtendedPoint{-w}};
}

LoxodromeTriple::LoxodromeTriple(Cycle c1, Cycle c2, Cycle c3, int sign)
    : c1_(c1), c2_(c2), c3_(c3), sign_(sign) {
  if (sign != 1 && sign != -1) throw GeometryError(Errc::InvalidArgument, "sign must be +1 or -1");
}

LoxodromeTriple standard_triple(const SlsParameter& param) {
  const Cycle real_axis{0.0, 0.0, 1.0, 0.0};
  const Cycle unit_circle{1.0, 0.0, 0.0, -1.0};
  switch (param.kind()) {
    case SlsParameter::Kind::Finite: {
      const double x = param.lambda_tilde();
      if (x == 0.0) return {real_axis, unit_circle, unit_circle, 1};
      return {real_axis, unit_circle, Cycle{1.0, 0.0, 0.0, -std::exp(2.0 * x)}, x > 0.0 ? 1 : -1};
    }
    case SlsParameter::Kind::Infinite:
      return {real_axis, unit_circle, Cycle{0.0, 0.0, 0.0, 1.0}, 1};
    case SlsParameter::Kind::PointDegenerate: break;
  }
  throw GeometryError(Errc::PointDegenerate, "the point spiral has no three-cycle form");
}

TripleCheck check_triple(const LoxodromeTriple& t, const Tolerances& tol) {
  const auto fail = [](Errc code, double residual, std::string detail) {
    return TripleCheck{code, residual, std::move(detail)};
  };
  if (is_zero_radius(t.c1(), tol)) return fail(Errc::ZeroRadiusCycle, 0.0, "C1 is a point");
  if (is_zero_radius(t.c2(), tol)) return fail(Errc::ZeroRadiusCycle, 0.0, "C2 is a point");
  const double r12 = relative_product(t.c1(), t.c2());
  if (r12 > tol.eps_product) return fail(Errc::NotOrthogonal, r12, "C1 not orthogonal to C2");
  const double r13 = relative_product(t.c1(), t.c3());
  if (r13 > tol.eps_product) return fail(Errc::NotOrthogonal, r13, "C1 not orthogonal to C3");
  if (same_cycle(t.c2(), t.c3(), tol)) return {};

  const Pencil hyperbolic{t.c2(), t.c3(), tol};
  if (classify_pencil(hyperbolic, tol) != PencilKind::Hyperbolic) {
    const double ab = product(t.c2(), t.c3());
    const double gap = (product(t.c2(), t.c2()) * product(t.c3(), t.c3()) - ab * ab) /
                       std::pow(t.c2().norm() * t.c3().norm(), 2);
    return fail(Errc::NotDisjoint, gap, "C2 and C3 intersect");
  }
  const auto [z1, z2] = zero_radius_members(hyperbolic, tol);
  const double rz = std::max(relative_product(t.c1(), z1), relative_product(t.c1(), z2));
  if (rz > tol.eps_product) {
    return fail(Errc::C1NotInOrthogonalPencil, rz, "C1 misses a limit point");
  }
  return {};
}

LoxodromeTriple validate_triple(const Cycle& c1, const Cycle& c2, const Cycle& c3, int sign,
                                const Tolerances& tol) {
  LoxodromeTriple triple{c1, c2, c3, sign};
  const TripleCheck check = check_triple(triple, tol);
  if (!check.ok()) {
    throw GeometryError(*check.violation,
                        check.detail + " (residual " + std::to_string(check.residual) + ")");
  }
  return triple;
}

SlsParameter lambda_from_triple(const LoxodromeTriple& t, const Tolerances& tol) {
  if (same_cycle(t.c2(), t.c3(), tol)) return SlsParameter::finite(0.0);
  if (is_zero_radius(t.c3(), tol)) return SlsParameter::infinite();
  const double magnitude = clamped_acosh(std::abs(normalized_product(t.c2(), t.c3(), tol)), tol);
  return SlsParameter::finite(t.sign() * magnitude);
}

MoebiusMap standard_map(const LoxodromeTriple& t, const Tolerances& tol) {
  const SlsParameter param = lambda_from_triple(t, tol);
  const auto [cu, cv] = unit_point(t, tol);

  if (param.is_finite() && param.lambda_tilde() == 0.0) {
    const ExtendedPoint far = point_on_away_from(t.c1(), cu, cv, tol);
    return map_three_points({cu, cv, far},
                            {ExtendedPoint{1.0}, ExtendedPoint{-1.0}, ExtendedPoint::infinity()},
                            tol);
  }

  const auto [z1, z2] = zero_radius_members(Pencil{t.c2(), t.c3(), tol}, tol);
  ExtendedPoint p0 = point_of(z1);
  ExtendedPoint pinf = point_of(z2);

  if (param.kind() == SlsParameter::Kind::Infinite) {
    // C3 is the limit point sent to infinity.
    if (projective_distance(z1, t.c3()) < projective_distance(z2, t.c3())) std::swap(p0, pinf);
    return map_to_zero_one_inf(p0, cu, pinf, tol);
  }

  // On a ray of C1 from C0 the order is C0, C2, C3, C_inf for positive
  // lambda_tilde and C0, C3, C2, C_inf for negative: after sending the limit
  // points to 0 and infinity, C3 lies outside or inside the unit circle.
  const MoebiusMap trial = map_to_zero_one_inf(p0, cu, pinf, tol);
  const double r3 = center_radius(apply_to_cycle(trial, t.c3(), tol), tol).radius;
  if ((r3 > 1.0) == (t.sign() > 0)) return trial;
  return map_to_zero_one_inf(pinf, cu, p0, tol);
}

Loxodrome to_loxodrome(const LoxodromeTriple& t, const Tolerances& tol) {
  return {lambda_from_triple(t, tol), standard_map(t, tol)};
}

LoxodromeTriple to_triple(const Loxodrome& lox) {
  const LoxodromeTriple standard = standard_triple(lox.param);
  return apply_map(lox.map.inverse(), standard);
}

LoxodromeTriple apply_map(const MoebiusMap& map, const LoxodromeTriple& t, const Tolerances& tol) {
  return {apply_to_cycle(map, t.c1(), tol), apply_to_cycle(map, t.c2(), tol),
          apply_to_cycle(map, t.c3(), tol), t.sign()};
}

EquivalenceReport equivalence_report(const LoxodromeTriple& a, const LoxodromeTriple& b,
                                     const Tolerances& tol, CongruenceMode mode) {
  const SlsParameter pa = lambda_from_triple(a, tol);
  const SlsParameter pb = lambda_from_triple(b, tol);
  const auto degenerate = [](const SlsParameter& p) {
    return !p.is_finite() || p.lambda_tilde() == 0.0;
  };
  if (degenerate(pa) || degenerate(pb)) {
    throw GeometryError(Errc::DegenerateTriple, "equivalence needs non-degenerate triples");
  }

  EquivalenceReport report;
  const Pencil pencil_a{a.c2(), a.c3(), tol};
  const Pencil pencil_b{b.c2(), b.c3(), tol};
  const auto in_span = [&](const Pencil& pencil, const Cycle& c) {
    const SpanFit fit = span_fit(pencil, c);
    return fit.residual <= tol.eps_product * (1.0 + 1.0 / fit.min_singular);
  };
  report.same_pencil = in_span(pencil_a, b.c2()) && in_span(pencil_a, b.c3()) &&
                       in_span(pencil_b, a.c2()) && in_span(pencil_b, a.c3());

  const double xa = std::abs(pa.lambda_tilde());
  const double xb = std::abs(pb.lambda_tilde());
  report.same_lambda = a.sign() == b.sign() && std::abs(xa - xb) <= tol.eps_angle * (1.0 + xa);

  if (report.same_pencil) {
    const auto hyperbolic_turns = [&](const Cycle& c, const Cycle& d) {
      return clamped_acosh(std::abs(normalized_product(c, d, tol)), tol) / xa;
    };
    report.lhs_j2 = hyperbolic_turns(a.c2(), b.c2());
    report.lhs_j3 = hyperbolic_turns(a.c3(), b.c3());
    report.rhs = clamped_acos(normalized_product(a.c1(), b.c1(), tol), tol) / kTwoPi;
    report.congruent_j2 = turn_fractions_agree(report.lhs_j2, report.rhs, mode, tol);
    report.congruent_j3 = turn_fractions_agree(report.lhs_j3, report.rhs, mode, tol);
  }
  report.equivalent = report.same_pencil && report.same_lambda && report.congruent_j2;
  return report;
}

bool equivalent(const LoxodromeTriple& a, const LoxodromeTriple& b, const Tolerances& tol,
                CongruenceMode mode) {
  return equivalence_report(a, b, tol, mode).equivalent;
}

bool MembershipReport::has_flag(const std::string& flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

MembershipReport contains_point(const LoxodromeTriple& t, const ExtendedPoint& p,
                                const Tolerances& tol, CongruenceMode mode) {
  MembershipReport report;
  if (mode == CongruenceMode::StrictMod1) report.flags.emplace_back("strict_mod1");
  const SlsParameter param = lambda_from_triple(t, tol);
  const Cycle c0 = zero_radius_at(p.normalized());

  if (param.is_finite() && param.lambda_tilde() == 0.0) {
    report.flags.emplace_back("degenerate_circle");
    report.member = passes(t.c2(), p, tol);
    return report;
  }

  HyperbolicMember ch{c0, std::nullopt, true};
  try {
    ch = hyperbolic_member_through(t.c2(), t.c3(), c0, tol);
  } catch (const GeometryError& e) {
    if (e.code() != Errc::OnRadicalLocus) throw;
  }
  report.t_coeff = ch.t;
  if (ch.zero_radius) {
    report.flags.emplace_back("limit_point");
    return report;
  }
  report.ch = ch.cycle;

  if (param.kind() == SlsParameter::Kind::Infinite) {
    report.flags.emplace_back("degenerate_line");
    report.flags.emplace_back("degenerate_arc_unchecked");
    report.member = passes(t.c1(), p, tol);
    return report;
  }

  try {
    report.ce = orthogonal_cycle_through(t.c2(), t.c3(), c0, tol);
  } catch (const GeometryError& e) {
    if (e.code() != Errc::RankDeficient) throw;
    report.flags.emplace_back("limit_point");
    return report;
  }

  const double turn = std::abs(param.lambda_tilde());
  report.lhs = clamped_acosh(std::abs(normalized_product(ch.cycle, t.c2(), tol)), tol) / turn;
  report.rhs = clamped_acos(normalized_product(*report.ce, t.c1(), tol), tol) / kTwoPi;
  report.member = turn_fractions_agree(*report.lhs, *report.rhs, mode, tol);
  return report;
}

bool contains_point_oracle(const LoxodromeTriple& t, const ExtendedPoint& p,
                           const Tolerances& tol) {
  const SlsParameter param = lambda_from_triple(t, tol);
  const ExtendedPoint w = apply_to_point(standard_map(t, tol), p);
  if (w.is_infinite(tol.eps_product)) return false;
  const Complex z = w.value();
  const double modulus = std::abs(z);
  if (!(modulus > 0.0)) return false;
  if (param.kind() == SlsParameter::Kind::Infinite) {
    return std::abs(z.imag()) <= tol.eps_mod * modulus;
  }
  const double x = param.lambda_tilde();
  if (x == 0.0) return std::abs(std::log(modulus)) <= tol.eps_mod;
  return congruent_mod(std::log(modulus) / x, std::arg(z) / kTwoPi, 0.5, tol);
}

double pencil_crossing_angle(const SlsParameter& param) {
  switch (param.kind()) {
    case SlsParameter::Kind::Finite: return std::atan(param.lambda_tilde() / kTwoPi);
    case SlsParameter::Kind::Infinite: return kPi / 2.0;
    case SlsParameter::Kind::PointDegenerate: break;
  }
  throw GeometryError(Errc::PointDegenerate, "no crossing angle for the point spiral");
}

double intersection_angle(const LoxodromeTriple& a, const LoxodromeTriple& b,
                          const ExtendedPoint& p, const Tolerances& tol, bool check_membership) {
  if (check_membership &&
      (!contains_point(a, p, tol).member || !contains_point(b, p, tol).member)) {
    throw GeometryError(Errc::PointNotOnBoth, "point is not on both loxodromes");
  }
  const SlsParameter pa = lambda_from_triple(a, tol);
  const SlsParameter pb = lambda_from_triple(b, tol);
  const MoebiusMap frame = finite_frame(p, tol);
  const ExtendedPoint q = apply_to_point(frame, p);
  const Complex z = q.value();
  const Cycle c0 = zero_radius_at(q);
  const Cycle ha = hyperbolic_member(apply_map(frame, a, tol), pa, c0, tol).cycle;
  const Cycle hb = hyperbolic_member(apply_map(frame, b, tol), pb, c0, tol).cycle;

  const double theta = clamped_acos(normalized_product(ha, hb, tol), tol);
  const double magnitude = std::min(theta, kPi - theta);
  const double orientation =
      directed_angle(tangent_direction(hb, z), tangent_direction(ha, z));
  const double between = orientation >= 0.0 ? magnitude : -magnitude;
  return wrap_half_turn(between - pencil_crossing_angle(pa) + pencil_crossing_angle(pb));
}

bool tangent_check(const LoxodromeTriple& t, const Cycle& c, const ExtendedPoint& p,
                   const Tolerances& tol) {
  if (is_zero_radius(c, tol)) {
    throw GeometryError(Errc::ZeroRadiusCandidate, "tangent candidate is a point");
  }
  if (!passes(c, p, tol)) return false;
  if (!contains_point(t, p, tol).member) return false;

  const SlsParameter param = lambda_from_triple(t, tol);
  const MoebiusMap frame = finite_frame(p, tol);
  const ExtendedPoint q = apply_to_point(frame, p);
  const Complex z = q.value();
  const Cycle candidate = apply_to_cycle(frame, c, tol);
  const Cycle ch = hyperbolic_member(apply_map(frame, t, tol), param, zero_radius_at(q), tol).cycle;

  const double theta = clamped_acos(normalized_product(candidate, ch, tol), tol);
  const double magnitude = std::min(theta, kPi - theta);
  const double orientation =
      directed_angle(tangent_direction(candidate, z), tangent_direction(ch, z));
  const double between = orientation >= 0.0 ? magnitude : -magnitude;
  return std::abs(wrap_half_turn(between - pencil_crossing_angle(param))) <= tol.eps_angle;
}

Cycle tangent_line_at(const LoxodromeTriple& t, const ExtendedPoint& p, const Tolerances& tol) {
  if (p.is_infinite(tol.eps_product) || !contains_point_oracle(t, p, tol)) {
    throw GeometryError(Errc::PointNotOnCurve, "tangent requested off the curve");
  }
  const SlsParameter param = lambda_from_triple(t, tol);
  const MoebiusMap to_standard = standard_map(t, tol);
  const Mat2 back = to_standard.inverse().matrix();
  const Complex w = apply_to_point(to_standard, p).value();
  // d/dt M^{-1}(w exp(lambda t)) at t = 0.
  const Complex denom = back.c * w + back.d;
  const Complex velocity = back.det() * param.lambda() * w / (denom * denom);
  const Complex z = p.value();
  const double l = -velocity.imag();
  const double n = velocity.real();
  return canonicalize(Cycle{0.0, l, n, 2.0 * (l * z.real() + n * z.imag())}, tol);
}

std::vector<ExtendedPoint> sample_curve(const LoxodromeTriple& t, double t_min, double t_max,
                                        int count, BranchSet branches, const Tolerances& tol) {
  if (count < 2) throw GeometryError(Errc::InvalidArgument, "sample count must be >= 2");
  if (!std::isfinite(t_min) || !std::isfinite(t_max)) {
    throw GeometryError(Errc::InvalidArgument, "t-range must be finite");
  }
  const SlsParameter param = lambda_from_triple(t, tol);
  const MoebiusMap back = standard_map(t, tol).inverse();
  const Complex lambda = param.lambda();

  std::vector<ExtendedPoint> out;
  const auto emit_branch = [&](double sign) {
    for (int i = 0; i < count; ++i) {
      const double s = t_min + (t_max - t_min) * i / (count - 1);
      const ExtendedPoint z = apply_to_point(back, ExtendedPoint{sign * std::exp(lambda * s)});
      out.push_back(z.is_infinite(tol.eps_product) ? ExtendedPoint::infinity() : z);
    }
  };
  if (branches != BranchSet::Minus) emit_branch(1.0);
  if (branches == BranchSet::Both) out.push_back(ExtendedPoint::infinity());
  if (branches != BranchSet::Plus) emit_branch(-1.0);
  return out;
}

}  // namespace moeblox
