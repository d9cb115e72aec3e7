#include "dcay/error.hpp"

namespace dcay {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::IdentityInS: return "IdentityInS";
    case ErrorCode::NotInverseClosed: return "NotInverseClosed";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::MalformedCase: return "MalformedCase";
    case ErrorCode::AsymmetricSet: return "AsymmetricSet";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::MapDoesNotPreserveS: return "MapDoesNotPreserveS";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace dcay
