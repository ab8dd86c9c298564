#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plinth {

enum class ErrorCode {
  kInvalidArgument,
  kDegreeMismatch,
  kNotBijection,
  kNotMember,
  kNotInvariant,
  kNotTransitive,
  kTooLarge,
  kOrderOverflow,
  kUnsupportedFlavor,
  kUnrecognized,
  kIndexTooLarge,
  kDegreeOverflow,
  kNotDecompositionPreserving,
  kNonSelfPaired,
  kNotVertexTransitive,
  kGeneratorNotAutomorphism,
  kTimeout,
  kTooManyComponents,
  kProjectionUnsupported,
  kNotXSubgroup,
  kConstructionFailed,
  kMismatch,
  kParseError,
  kIoError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` identifies the
// failure class so callers can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kNotBijection: return "NotBijection";
    case ErrorCode::kNotMember: return "NotMember";
    case ErrorCode::kNotInvariant: return "NotInvariant";
    case ErrorCode::kNotTransitive: return "NotTransitive";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kOrderOverflow: return "OrderOverflow";
    case ErrorCode::kUnsupportedFlavor: return "UnsupportedFlavor";
    case ErrorCode::kUnrecognized: return "Unrecognized";
    case ErrorCode::kIndexTooLarge: return "IndexTooLarge";
    case ErrorCode::kDegreeOverflow: return "DegreeOverflow";
    case ErrorCode::kNotDecompositionPreserving: return "NotDecompositionPreserving";
    case ErrorCode::kNonSelfPaired: return "NonSelfPaired";
    case ErrorCode::kNotVertexTransitive: return "NotVertexTransitive";
    case ErrorCode::kGeneratorNotAutomorphism: return "GeneratorNotAutomorphism";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kTooManyComponents: return "TooManyComponents";
    case ErrorCode::kProjectionUnsupported: return "ProjectionUnsupported";
    case ErrorCode::kNotXSubgroup: return "NotXSubgroup";
    case ErrorCode::kConstructionFailed: return "ConstructionFailed";
    case ErrorCode::kMismatch: return "Mismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace plinth
