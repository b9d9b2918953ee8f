#include "moeblox/error.hpp"

namespace moeblox {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DomainError: return "DomainError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidRadius: return "InvalidRadius";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::IsLine: return "IsLine";
    case Errc::ImaginaryRadius: return "ImaginaryRadius";
    case Errc::ZeroRadiusOperand: return "ZeroRadiusOperand";
    case Errc::NumericalBreakdown: return "NumericalBreakdown";
    case Errc::SingularMap: return "SingularMap";
    case Errc::CoincidentCycles: return "CoincidentCycles";
    case Errc::CollidingPoints: return "CollidingPoints";
    case Errc::ZeroCoefficients: return "ZeroCoefficients";
    case Errc::NotHyperbolic: return "NotHyperbolic";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::OnRadicalLocus: return "OnRadicalLocus";
    case Errc::NotFinite: return "NotFinite";
    case Errc::PointDegenerate: return "PointDegenerate";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::C1NotInOrthogonalPencil: return "C1NotInOrthogonalPencil";
    case Errc::ZeroRadiusCycle: return "ZeroRadiusCycle";
    case Errc::DegenerateTriple: return "DegenerateTriple";
    case Errc::PointNotOnBoth: return "PointNotOnBoth";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::ZeroRadiusCandidate: return "ZeroRadiusCandidate";
  }
  return "Unknown";
}

GeometryError::GeometryError(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace moeblox
