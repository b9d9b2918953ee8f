#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moeblox/error.hpp"
#include "moeblox/moebius.hpp"
#include "moeblox/pencil.hpp"

namespace moeblox {

enum class SlsClass { Positive, Negative, Degenerate };

// Sign of Re(lambda) * Im(lambda).
SlsClass classify_sls(Complex lambda);

/// Conformal invariant of a standard logarithmic spiral: the extended real
/// lambda_tilde = 2 pi Re(lambda) / Im(lambda).
///
/// Finite(0) is the unit circle (a = 1), Infinite the punctured real axis
/// (a = inf) and PointDegenerate the single point 1.
class SlsParameter {
 public:
  enum class Kind { Finite, Infinite, PointDegenerate };

  static SlsParameter finite(double lambda_tilde);
  static SlsParameter infinite() { return SlsParameter{Kind::Infinite, 0.0}; }
  static SlsParameter point_degenerate() { return SlsParameter{Kind::PointDegenerate, 0.0}; }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  // Throws NotFinite unless kind() == Finite.
  double lambda_tilde() const;
  // Normalised representative: lambda_tilde + 2 pi i, 1 for Infinite, 0 for
  // PointDegenerate.
  Complex lambda() const;
  // First-return modulus exp(lambda_tilde); +inf for Infinite.
  double a() const;

  bool operator==(const SlsParameter&) const = default;

 private:
  SlsParameter(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

SlsParameter lambda_tilde(Complex lambda);

enum class Branch { Plus, Minus };
enum class BranchSet { Plus, Minus, Both };

// diag(+-exp(lambda t / 2), exp(-lambda t / 2)): z -> +-exp(lambda t) z.
MoebiusMap diagonal_flow(Complex lambda, double t, Branch branch = Branch::Plus);

// The branch-swapping reflection z -> -1/z.
MoebiusMap branch_swap();

// {+exp(lambda t), -exp(lambda t)}. Throws NotFinite unless param is Finite.
std::pair<ExtendedPoint, ExtendedPoint> sample_sls(const SlsParameter& param, double t);

/// Ordered cycles (C1, C2, C3) plus the chirality sign of lambda_tilde.
///
/// C1 lies in the elliptic pencil, C2 and C3 in the orthogonal hyperbolic
/// pencil one turn apart. The cycles alone fix only |lambda_tilde|; sign
/// picks between mirror images.
class LoxodromeTriple {
 public:
  // Throws InvalidArgument unless sign is +1 or -1.
  LoxodromeTriple(Cycle c1, Cycle c2, Cycle c3, int sign = 1);

  const Cycle& c1() const { return c1_; }
  const Cycle& c2() const { return c2_; }
  const Cycle& c3() const { return c3_; }
  int sign() const { return sign_; }

 private:
  Cycle c1_, c2_, c3_;
  int sign_;
};

/// The (lambda_tilde, M) form: map sends the loxodrome onto the standard
/// spiral with parameter param.
struct Loxodrome {
  SlsParameter param;
  MoebiusMap map;
};

struct TripleCheck {
  std::optional<Errc> violation;  // empty when the triple is valid
  double residual = 0.0;          // relative size of the failed condition
  std::string detail;

  bool ok() const { return !violation.has_value(); }
};

// Real axis, unit circle and the circle of radius exp(lambda_tilde).
LoxodromeTriple standard_triple(const SlsParameter& param);

TripleCheck check_triple(const LoxodromeTriple& triple, const Tolerances& tol = {});
// Throws the violation of check_triple as a GeometryError.
LoxodromeTriple validate_triple(const Cycle& c1, const Cycle& c2, const Cycle& c3, int sign = 1,
                                const Tolerances& tol = {});

// |lambda_tilde| = acosh|<C2,C3>_n|, signed by the triple. C2 == C3 gives
// Finite(0); a zero-radius C3 gives Infinite.
SlsParameter lambda_from_triple(const LoxodromeTriple& triple, const Tolerances& tol = {});

/// The map sending the triple to standard_triple(lambda_from_triple(triple)).
///
/// Non-degenerate triples: the limit points of span(C2, C3) go to 0 and
/// infinity, labelled so that C3 lands outside the unit circle for sign +1
/// and inside for sign -1; the lexicographically larger point of C1 n C2
/// goes to 1. Degenerate triples are supported as well: for C2 == C3 the
/// larger point of C1 n C2 goes to 1, the other to -1; for a zero-radius C3
/// that point goes to infinity.
MoebiusMap standard_map(const LoxodromeTriple& triple, const Tolerances& tol = {});

Loxodrome to_loxodrome(const LoxodromeTriple& triple, const Tolerances& tol = {});
LoxodromeTriple to_triple(const Loxodrome& loxodrome);

LoxodromeTriple apply_map(const MoebiusMap& map, const LoxodromeTriple& triple,
                          const Tolerances& tol = {});

/// How the elliptic/hyperbolic turn fractions are compared.
///
/// SignFoldedHalf accepts lhs == +-rhs (mod 1/2): cycles are projective, so
/// acos sees each elliptic angle only up to sign and modulo pi, and the
/// spiral has two branches. StrictMod1 is the literal lhs == rhs (mod 1).
enum class CongruenceMode { SignFoldedHalf, StrictMod1 };

struct EquivalenceReport {
  bool equivalent = false;
  bool same_pencil = false;
  bool same_lambda = false;
  bool congruent_j2 = false;
  bool congruent_j3 = false;
  double lhs_j2 = 0.0;
  double lhs_j3 = 0.0;
  double rhs = 0.0;

  // The j = 3 cross-check disagrees with the deciding j = 2 test.
  bool j3_disagrees() const { return same_pencil && same_lambda && congruent_j2 != congruent_j3; }
};

// Throws DegenerateTriple unless both triples are non-degenerate.
EquivalenceReport equivalence_report(const LoxodromeTriple& a, const LoxodromeTriple& b,
                                     const Tolerances& tol = {},
                                     CongruenceMode mode = CongruenceMode::SignFoldedHalf);
bool equivalent(const LoxodromeTriple& a, const LoxodromeTriple& b, const Tolerances& tol = {},
                CongruenceMode mode = CongruenceMode::SignFoldedHalf);

struct MembershipReport {
  bool member = false;
  std::optional<double> t_coeff;
  std::optional<double> lhs;  // acosh<Ch,C2>_n / acosh<C2,C3>_n
  std::optional<double> rhs;  // acos<Ce,C1>_n / 2 pi
  std::optional<Cycle> ch;
  std::optional<Cycle> ce;
  std::vector<std::string> flags;

  bool has_flag(const std::string& flag) const;
};

/// Membership through invariants only: the member Ch of the hyperbolic
/// pencil and the member Ce of the elliptic pencil through p, then the
/// congruence of their turn fractions. Limit points are reported as
/// non-members with the "limit_point" flag.
MembershipReport contains_point(const LoxodromeTriple& triple, const ExtendedPoint& p,
                                const Tolerances& tol = {},
                                CongruenceMode mode = CongruenceMode::SignFoldedHalf);

// Ground truth: map p by standard_map and test it against +-exp(lambda t).
bool contains_point_oracle(const LoxodromeTriple& triple, const ExtendedPoint& p,
                           const Tolerances& tol = {});

/// Signed angle at p between two loxodromes through p, modulo pi in
/// (-pi/2, pi/2]: the direction of a minus the direction of b.
///
/// The magnitude of the angle between the hyperbolic members comes from
/// acos<Ch,Ch'>_n; its orientation from the tangents of Ch and Ch' at p.
/// Throws PointNotOnBoth when check_membership is set and p fails
/// contains_point for either triple.
double intersection_angle(const LoxodromeTriple& a, const LoxodromeTriple& b,
                          const ExtendedPoint& p, const Tolerances& tol = {},
                          bool check_membership = true);

// C passes p and meets the hyperbolic member through p at the loxodrome's
// fixed angle atan(lambda_tilde / 2 pi). Throws ZeroRadiusCandidate for a
// zero-radius C.
bool tangent_check(const LoxodromeTriple& triple, const Cycle& c, const ExtendedPoint& p,
                   const Tolerances& tol = {});

// Tangent line at a finite point of the curve, from the derivative of
// M^{-1}(+-exp(lambda t)). Throws PointNotOnCurve.
Cycle tangent_line_at(const LoxodromeTriple& triple, const ExtendedPoint& p,
                      const Tolerances& tol = {});

/// Points M^{-1}(+-exp(lambda t)) on a uniform grid of count values in
/// [t_min, t_max]. Points mapped to infinity come out as
/// ExtendedPoint::infinity() and act as polyline breaks; with
/// BranchSet::Both a single infinity separates the two branches.
std::vector<ExtendedPoint> sample_curve(const LoxodromeTriple& triple, double t_min, double t_max,
                                        int count, BranchSet branches = BranchSet::Both,
                                        const Tolerances& tol = {});

// Fixed angle between the loxodrome and every member of its hyperbolic
// pencil: atan(lambda_tilde / 2 pi), pi/2 for Infinite.
double pencil_crossing_angle(const SlsParameter& param);

}  // namespace moeblox
