#pragma once

/*
 * Error reporting shared by every module.
 *
 * All failures are reported by throwing ym::Error.  The kind() accessor
 * identifies the failure class so that callers (tests, the command line
 * front end) can react to specific conditions without parsing messages.
 */

#include <stdexcept>
#include <string>

namespace ym {

enum class ErrorKind {
    ZeroDenominator,
    DivisionByZero,
    PoleAtZero,
    NonIntegerCoefficient,
    NonIntegerExponent,
    NonIntegerCodimension,
    UnsupportedRank,
    UnsupportedFamily,
    DimensionMismatch,
    InadmissibleCase,
    AmbiguousComponent,
    InvalidPoint,
    WallPoint,
    TruncationTooSmall,
    InexactDivision,
    ParseError,
};

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ym
