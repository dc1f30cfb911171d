#include "fermient/errors.hpp"

namespace fermient {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::mixed_parity: return "MixedParity";
    case ErrorCode::zero_norm: return "ZeroNorm";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::hermiticity_defect: return "HermiticityDefect";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::not_symplectic: return "NotSymplectic";
    case ErrorCode::lift_failure: return "LiftFailure";
    case ErrorCode::not_two_fermion: return "NotTwoFermion";
    case ErrorCode::wrong_parity: return "WrongParity";
    case ErrorCode::wrong_shape: return "WrongShape";
    case ErrorCode::side_mismatch: return "SideMismatch";
    case ErrorCode::not_normalized: return "NotNormalized";
    case ErrorCode::overlapping_pairs: return "OverlappingPairs";
    case ErrorCode::impossible_branch: return "ImpossibleBranch";
    case ErrorCode::unknown_state: return "UnknownState";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace fermient
