#include "rpq/error.hpp"

namespace rpq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParameterDomain: return "ParameterDomain";
    case ErrorCode::InvalidKernel: return "InvalidKernel";
    case ErrorCode::NonPositiveLattice: return "NonPositiveLattice";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptyKernel: return "EmptyKernel";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::NotInSubspace: return "NotInSubspace";
    case ErrorCode::NonIntegerUnsupported: return "NonIntegerUnsupported";
    case ErrorCode::NonPositiveShiftedLattice: return "NonPositiveShiftedLattice";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::EmptyDisc: return "EmptyDisc";
    case ErrorCode::NonRealConstantTerm: return "NonRealConstantTerm";
    case ErrorCode::GateUnevaluable: return "GateUnevaluable";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace rpq
