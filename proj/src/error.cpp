#include "bestworst/error.hpp"

namespace bestworst {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::TooFewCandidates: return "TooFewCandidates";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidTarget: return "InvalidTarget";
    case ErrorCode::NotConvergent: return "NotConvergent";
    case ErrorCode::NotNonconvergent: return "NotNonconvergent";
    case ErrorCode::WrongRegime: return "WrongRegime";
    case ErrorCode::InfeasibleConfig: return "InfeasibleConfig";
    case ErrorCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::Malformed: return "Malformed";
  }
  return "Unknown";
}

}  // namespace bestworst
