#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fachom {

enum class ErrorKind {
    CompositionNonzero,
    DifferentialSquareNonzero,
    MixedWeightSigns,
    StraighteningOverflow,
    UnboundedWeight,
    UnknownModel,
    LevelCapTooSmall,
    SyntaxError,
    RoleMismatch,
    InvalidCodim,
    Validation,
    Input,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the engines carries a kind so front ends can map
/// it onto an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& message);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace fachom
