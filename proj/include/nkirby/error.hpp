#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nkirby {

enum class ErrorCode {
    InvalidDim,
    GroupMismatch,
    DuplicateId,
    UnknownGenerator,
    UnknownComponent,
    SelfSlide,
    InvalidMove,
    NotCancelling,
    ReplayError,
    NotSimpleFamily,
    NotOneDottedFamily,
    RequiresK2,
    RequiresK3,
    NotAComplex,
    StructureMismatch,
    DimMismatch,
    SyntaxError,
    SemanticError,
    UnknownExample,
    Overflow,
    IoError,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every domain failure in the library is reported through this type; the
/// CLI prints `error_name(code())` as the diagnostic tag.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

/// Raised by certificate replay; `index` is the zero-based position of the
/// first move that could not be applied.
class ReplayFailure : public Error {
public:
    ReplayFailure(std::size_t index, ErrorCode cause, const std::string& message);

    std::size_t index() const noexcept { return index_; }
    ErrorCode cause() const noexcept { return cause_; }

private:
    std::size_t index_;
    ErrorCode cause_;
};

/// Parse errors carry the 1-based line they were detected on (0 when the
/// failure is not tied to a line, e.g. a missing `dim` directive).
class ParseFailure : public Error {
public:
    ParseFailure(ErrorCode code, std::size_t line, const std::string& message);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace nkirby
