#include "nkirby/error.hpp"

namespace nkirby {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidDim: return "InvalidDim";
        case ErrorCode::GroupMismatch: return "GroupMismatch";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::UnknownGenerator: return "UnknownGenerator";
        case ErrorCode::UnknownComponent: return "UnknownComponent";
        case ErrorCode::SelfSlide: return "SelfSlide";
        case ErrorCode::InvalidMove: return "InvalidMove";
        case ErrorCode::NotCancelling: return "NotCancelling";
        case ErrorCode::ReplayError: return "ReplayError";
        case ErrorCode::NotSimpleFamily: return "NotSimpleFamily";
        case ErrorCode::NotOneDottedFamily: return "NotOneDottedFamily";
        case ErrorCode::RequiresK2: return "RequiresK2";
        case ErrorCode::RequiresK3: return "RequiresK3";
        case ErrorCode::NotAComplex: return "NotAComplex";
        case ErrorCode::StructureMismatch: return "StructureMismatch";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::SemanticError: return "SemanticError";
        case ErrorCode::UnknownExample: return "UnknownExample";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::IoError: return "IoError";
    }
    return "Error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

ReplayFailure::ReplayFailure(std::size_t index, ErrorCode cause, const std::string& message)
    : Error(ErrorCode::ReplayError,
            "move " + std::to_string(index) + " (" + std::string(error_name(cause)) + "): " + message),
      index_(index),
      cause_(cause) {}

ParseFailure::ParseFailure(ErrorCode code, std::size_t line, const std::string& message)
    : Error(code, line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace nkirby
