#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moeblox {

enum class Errc {
  DomainError,
  InvalidArgument,
  InvalidRadius,
  DegenerateInput,
  IsLine,
  ImaginaryRadius,
  ZeroRadiusOperand,
  NumericalBreakdown,
  SingularMap,
  CoincidentCycles,
  CollidingPoints,
  ZeroCoefficients,
  NotHyperbolic,
  RankDeficient,
  OnRadicalLocus,
  NotFinite,
  PointDegenerate,
  NotOrthogonal,
  NotDisjoint,
  C1NotInOrthogonalPencil,
  ZeroRadiusCycle,
  DegenerateTriple,
  PointNotOnBoth,
  PointNotOnCurve,
  ZeroRadiusCandidate,
};

std::string_view to_string(Errc code) noexcept;

// Single exception type for the library; callers branch on code().
class GeometryError : public std::runtime_error {
 public:
  GeometryError(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace moeblox
