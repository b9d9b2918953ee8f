#pragma once

#include <optional>
#include <utility>

#include "moeblox/cycle.hpp"

namespace moeblox {

enum class PencilKind { Elliptic, Parabolic, Hyperbolic };

/// The projective line of cycles alpha*A + beta*B spanned by two
/// independent cycles.
class Pencil {
 public:
  // Throws DegenerateInput when a and b are projectively equal.
  Pencil(Cycle a, Cycle b, const Tolerances& tol = {});

  const Cycle& first() const { return a_; }
  const Cycle& second() const { return b_; }

 private:
  Cycle a_;
  Cycle b_;
};

// Compares <A,B>^2 with <A,A><B,B>: less is elliptic, equal parabolic,
// greater hyperbolic.
PencilKind classify_pencil(const Pencil& pencil, const Tolerances& tol = {});

// alpha*A + beta*B. Throws ZeroCoefficients for (0, 0).
Cycle member(const Pencil& pencil, double alpha, double beta);

// The two limit points of a hyperbolic pencil as zero-radius cycles, ordered
// by their canonical components. Throws NotHyperbolic otherwise.
std::pair<Cycle, Cycle> zero_radius_members(const Pencil& pencil, const Tolerances& tol = {});

// Canonical X with <X,A> = <X,B> = <X,P> = 0. Throws RankDeficient when the
// null space is not one-dimensional (P is a limit point of span(A, B), or the
// inputs are dependent).
Cycle orthogonal_cycle_through(const Cycle& a, const Cycle& b, const Cycle& p,
                               const Tolerances& tol = {});

struct HyperbolicMember {
  Cycle cycle;
  // t of t*C2 + (1-t)*C3; empty when the member is C3 - C2 itself.
  std::optional<double> t;
  // The member degenerated to a point: the query was a limit point.
  bool zero_radius = false;
};

/// Member of span(C2, C3) orthogonal to the zero-radius cycle C0, i.e. the
/// member through the point C0 represents:
///
///     t = -<C0,C3> / <C0, C2 - C3>,   Ch = t C2 + (1 - t) C3.
///
/// When the denominator vanishes the member is C3 - C2 and t is left empty;
/// OnRadicalLocus is thrown only when C0 is orthogonal to both C2 and C3.
HyperbolicMember hyperbolic_member_through(const Cycle& c2, const Cycle& c3, const Cycle& c0,
                                           const Tolerances& tol = {});

struct SpanFit {
  double residual;      // |C - proj_span(C)| with all cycles at unit norm
  double min_singular;  // smallest singular value of the unit-norm basis
};

// Least-squares membership of c in span(A, B).
SpanFit span_fit(const Pencil& pencil, const Cycle& c);

}  // namespace moeblox
