#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gfwilson {

enum class ErrorCode {
    InvalidModulus,
    ModulusMismatch,
    NotInvertible,
    DivisionByZeroPoly,
    BothZero,
    NotMonic,
    BudgetExceeded,
    NotPrime,
    SizeBudgetExceeded,
    FieldMismatch,
    ZeroInverse,
    KOutOfRange,
    QTooSmall,
    QTooSmallForWolstenholme,
    PTooSmall,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every precondition violation in the library is reported through this type;
/// `code()` identifies which contract was broken.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gfwilson
